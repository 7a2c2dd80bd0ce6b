//! Deterministic graph fixtures shared by the benchmarks.

use sga_core::gen::{self, GraphClass, LoopPolicy};
use sga_core::SignedGraph;

/// `count` random graphs on `n` vertices, reproducible across runs.
pub fn random_graphs(seed: u64, n: u32, class: GraphClass, loops: LoopPolicy, count: usize) -> Vec<SignedGraph> {
    let mut r = gen::rng(seed);
    (0..count).map(|_| gen::random_graph(&mut r, n, class, loops)).collect()
}
