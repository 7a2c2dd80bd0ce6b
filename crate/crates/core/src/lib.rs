//! Signed graphs and the freeness and supersolvability of their hyperplane
//! arrangements.

pub mod chordal;
pub mod decide;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
mod linalg;
pub mod oracle;
pub mod poly;
pub mod signed;

pub use chordal::SimpleGraph;
pub use decide::{decide, decide_with, DecideError, DecideOptions, Provenance, Ternary, Verdict};
pub use error::{GraphError, OracleError};
pub use graph::{Balance, Component, DirectedEdge, Edge, Sign, SignedCycle, SignedGraph, SwitchingFunction, Vertex};
pub use io::{parse_graph, to_canonical_json, ParseError};
pub use poly::IntPoly;
