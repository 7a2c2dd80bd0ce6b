use thiserror::Error;

use crate::graph::{Edge, Vertex};

/// Input errors raised by graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("pair {{{0}, {0}}} has equal endpoints; use a loop instead")]
    SelfPair(Vertex),
    #[error("{0} is not an edge of the graph")]
    MissingEdge(Edge),
    #[error("switching function domain does not match the vertex set")]
    SwitchingDomain,
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("graphs disagree on their shared vertices")]
    IncompatibleUnion,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has {0} vertices; at most 64 are supported by this operation")]
    TooLarge(usize),
}

/// Raised when an instance exceeds the exact oracle's operating range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle out of range: dimension {dimension} (max {max_dimension}), {hyperplanes} hyperplanes (max {max_hyperplanes})")]
    OutOfRange { dimension: usize, hyperplanes: usize, max_dimension: usize, max_hyperplanes: usize },
    #[error("hyperplane index {0} out of bounds")]
    NoSuchHyperplane(usize),
    #[error("coordinate {0} does not appear in the normal of the hyperplane")]
    BadPivot(usize),
}
