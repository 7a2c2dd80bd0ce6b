//! Structure of signed graphs: signed-simplicial vertices, elimination
//! orderings, balanced chordality, frame circuits and divisional edges.

mod balanced;
mod circuits;
mod simplicial;

pub use balanced::{
    balanced_chordal_by_switching, balanced_cycle_witness, is_balanced_chordal, BalancedCycleWitness, ChordCheck,
};
pub use circuits::{closure, edge_rank, find_frame_circuits, is_flat_subgraph, FrameCircuit, FrameCircuitKind};
pub use simplicial::{
    directed_edges, divisional_edge, greedy_elimination_ordering, is_signed_simplicial, peel_simplicial_extension,
    signed_elimination_ordering, signed_simplicial_vertices, Peel,
};
