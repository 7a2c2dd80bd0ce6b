use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::graph::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BuildStep {
    Isolated,
    Dominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ForbiddenKind {
    #[serde(rename = "2K2")]
    TwoK2,
    C4,
    P4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdCertificate {
    /// Adding the vertices in order, each isolated or dominating, rebuilds the graph.
    Threshold { build_sequence: Vec<(Vertex, BuildStep)> },
    /// An induced 2K₂, C₄ or P₄.
    Forbidden { vertices: [Vertex; 4], kind: ForbiddenKind },
}

impl ThresholdCertificate {
    pub fn is_threshold(&self) -> bool {
        matches!(self, ThresholdCertificate::Threshold { .. })
    }
}

/// Decides whether `g` is threshold, with a certificate either way.
pub fn is_threshold(g: &SimpleGraph) -> ThresholdCertificate {
    let mut remaining = g.clone();
    let mut removed = Vec::new();
    while !remaining.vertices().is_empty() {
        let n = remaining.vertex_count();
        let pick = remaining.vertices().iter().rev().copied().find_map(|v| {
            let d = remaining.degree(v);
            if d == 0 {
                Some((v, BuildStep::Isolated))
            } else if d + 1 == n {
                Some((v, BuildStep::Dominating))
            } else {
                None
            }
        });
        let Some((v, step)) = pick else {
            return forbidden_witness(g).expect("graph without isolated or dominating vertex has a forbidden subgraph");
        };
        let mut keep = remaining.vertices().clone();
        keep.remove(&v);
        remaining = remaining.induced(&keep);
        removed.push((v, if keep.is_empty() { BuildStep::Isolated } else { step }));
    }
    removed.reverse();
    ThresholdCertificate::Threshold { build_sequence: removed }
}

/// Exhaustive search over 4-subsets for an induced 2K₂, C₄ or P₄.
pub(crate) fn forbidden_witness(g: &SimpleGraph) -> Option<ThresholdCertificate> {
    let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
    let n = vs.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [vs[a], vs[b], vs[c], vs[d]];
                    if let Some(kind) = classify(g, quad) {
                        return Some(ThresholdCertificate::Forbidden { vertices: quad, kind });
                    }
                }
            }
        }
    }
    None
}

fn classify(g: &SimpleGraph, quad: [Vertex; 4]) -> Option<ForbiddenKind> {
    let mut edges = 0;
    let mut degrees = [0usize; 4];
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(quad[i], quad[j]) {
                edges += 1;
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    degrees.sort_unstable();
    match (edges, degrees) {
        (2, [1, 1, 1, 1]) => Some(ForbiddenKind::TwoK2),
        (4, [2, 2, 2, 2]) => Some(ForbiddenKind::C4),
        (3, [1, 1, 2, 2]) => Some(ForbiddenKind::P4),
        _ => None,
    }
}

/// Rebuilds the graph described by a build sequence.
pub fn replay(sequence: &[(Vertex, BuildStep)]) -> SimpleGraph {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &(v, step) in sequence {
        if step == BuildStep::Dominating {
            for &u in &vertices {
                edges.insert(crate::graph::sorted(u, v));
            }
        }
        vertices.insert(v);
    }
    SimpleGraph::from_parts(vertices, edges)
}

impl ThresholdCertificate {
    /// Checks the certificate against `g`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        match self {
            ThresholdCertificate::Threshold { build_sequence } => replay(build_sequence) == *g,
            ThresholdCertificate::Forbidden { vertices, kind } => {
                vertices.iter().all(|v| g.vertices().contains(v))
                    && vertices.iter().collect::<BTreeSet<_>>().len() == 4
                    && classify(g, *vertices) == Some(*kind)
            }
        }
    }
}

/// Whether `l` is an initial segment of some degree ordering of `g`
/// (vertices listed by non-increasing degree).
pub fn degree_orderings_initial_segment(g: &SimpleGraph, l: &BTreeSet<Vertex>) -> bool {
    let inside = l.iter().map(|&v| g.degree(v)).min();
    let outside = g.vertices().iter().filter(|v| !l.contains(v)).map(|&v| g.degree(v)).max();
    match (inside, outside) {
        (Some(lo), Some(hi)) => lo >= hi,
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k1 = SimpleGraph::new([1], []).unwrap();
        assert!(is_threshold(&k1).is_threshold());

        let p4 = SimpleGraph::new(1..=4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let cert = is_threshold(&p4);
        assert_eq!(cert, ThresholdCertificate::Forbidden { vertices: [1, 2, 3, 4], kind: ForbiddenKind::P4 });
        assert!(cert.verify(&p4));

        let g = SimpleGraph::new([1, 2, 3], [(2, 3)]).unwrap();
        let cert = is_threshold(&g);
        assert_eq!(
            cert,
            ThresholdCertificate::Threshold {
                build_sequence: vec![(2, BuildStep::Isolated), (3, BuildStep::Dominating), (1, BuildStep::Isolated)]
            }
        );
        assert!(cert.verify(&g));
    }

    #[test]
    fn initial_segments() {
        let g = SimpleGraph::new([1, 2, 3], [(2, 3)]).unwrap();
        assert!(degree_orderings_initial_segment(&g, &BTreeSet::new()));
        assert!(degree_orderings_initial_segment(&g, &BTreeSet::from([1, 2, 3])));
        assert!(!degree_orderings_initial_segment(&g, &BTreeSet::from([1])));
        assert!(degree_orderings_initial_segment(&g, &BTreeSet::from([3])));
        assert!(degree_orderings_initial_segment(&g, &BTreeSet::from([2, 3])));
    }

    #[test]
    fn build_sequence_agrees_with_forbidden_subgraphs() {
        for n in 1..=6u32 {
            let pairs: Vec<(Vertex, Vertex)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]);
                let g = SimpleGraph::new(1..=n, edges).unwrap();
                let cert = is_threshold(&g);
                assert!(cert.verify(&g));
                assert_eq!(cert.is_threshold(), forbidden_witness(&g).is_none());
            }
        }
    }
}
