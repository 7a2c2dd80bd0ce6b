//! Canonical JSON form of a signed graph.
//!
//! `{"vertices":[1,2,3],"positive":[[1,2],[2,3]],"negative":[[1,2]],"loops":[1]}`
//!
//! Pairs are unordered on input; output lists are sorted and deduplicated so
//! that equal graphs print byte-identically.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{SignedGraph, Vertex};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid graph: {0}")]
    Invalid(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<Vertex>,
    #[serde(default)]
    positive: Vec<[Vertex; 2]>,
    #[serde(default)]
    negative: Vec<[Vertex; 2]>,
    #[serde(default)]
    loops: Vec<Vertex>,
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(SignedGraph::new(
        raw.vertices,
        raw.positive.into_iter().map(|[a, b]| (a, b)),
        raw.negative.into_iter().map(|[a, b]| (a, b)),
        raw.loops,
    )?)
}

fn to_json(g: &SignedGraph) -> GraphJson {
    GraphJson {
        vertices: g.vertices().collect(),
        positive: g.positive_pairs().iter().map(|&(a, b)| [a, b]).collect(),
        negative: g.negative_pairs().iter().map(|&(a, b)| [a, b]).collect(),
        loops: g.loops().iter().copied().collect(),
    }
}

/// Compact, sorted, single-line JSON.
pub fn to_canonical_json(g: &SignedGraph) -> String {
    serde_json::to_string(&to_json(g)).expect("graph serialization cannot fail")
}

pub fn to_json_value(g: &SignedGraph) -> serde_json::Value {
    serde_json::to_value(to_json(g)).expect("graph serialization cannot fail")
}

impl Serialize for SignedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        SignedGraph::new(
            raw.vertices,
            raw.positive.into_iter().map(|[a, b]| (a, b)),
            raw.negative.into_iter().map(|[a, b]| (a, b)),
            raw.loops,
        )
        .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let text = r#"{"vertices":[3,1,2],"positive":[[2,1],[1,2],[3,2]],"negative":[[2,1]],"loops":[1,1]}"#;
        let g = parse_graph(text).unwrap();
        let out = to_canonical_json(&g);
        assert_eq!(out, r#"{"vertices":[1,2,3],"positive":[[1,2],[2,3]],"negative":[[1,2]],"loops":[1]}"#);
        assert_eq!(parse_graph(&out).unwrap(), g);
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_graph("{\n  \"vertices\": [1,\n  ]") {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_graph(r#"{"vertices":[1],"loops":[2]}"#), Err(ParseError::Invalid(_))));
    }
}
