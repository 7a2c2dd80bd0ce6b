use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{DirectedEdge, Sign, SignedGraph, Vertex};
use crate::poly::chromatic_polynomial;

/// Whether `v` satisfies the three closure conditions on its signed
/// neighbourhood.
pub fn is_signed_simplicial(g: &SignedGraph, v: Vertex) -> Result<bool, GraphError> {
    if !g.contains_vertex(v) {
        return Err(GraphError::UnknownVertex(v));
    }
    Ok(simplicial(g, v))
}

pub(crate) fn simplicial(g: &SignedGraph, v: Vertex) -> bool {
    let pos: Vec<Vertex> = g.neighbors(v, Sign::Positive).into_iter().collect();
    let neg: Vec<Vertex> = g.neighbors(v, Sign::Negative).into_iter().collect();
    for same in [&pos, &neg] {
        for (i, &a) in same.iter().enumerate() {
            if same[i + 1..].iter().any(|&b| !g.has_positive(a, b)) {
                return false;
            }
        }
    }
    for &a in &pos {
        if neg.iter().any(|&b| a != b && !g.has_negative(a, b)) {
            return false;
        }
    }
    if g.has_loop(v) && pos.iter().chain(&neg).any(|&u| !g.has_loop(u)) {
        return false;
    }
    pos.iter().filter(|u| neg.contains(u)).all(|&u| g.has_loop(u))
}

/// Signed-simplicial vertices of `g` in increasing order.
pub fn signed_simplicial_vertices(g: &SignedGraph) -> Vec<Vertex> {
    g.vertices().filter(|&v| simplicial(g, v)).collect()
}

/// An ordering `(v₁, …, v_ℓ)` in which each `v_k` is signed simplicial in
/// `G[{v₁, …, v_k}]`, found by backtracking from the last position.
pub fn signed_elimination_ordering(g: &SignedGraph) -> Option<Vec<Vertex>> {
    let mut failed: HashSet<BTreeSet<Vertex>> = HashSet::new();
    let mut removed = Vec::with_capacity(g.vertex_count());
    if eliminate(g, &mut removed, &mut failed) {
        removed.reverse();
        Some(removed)
    } else {
        None
    }
}

fn eliminate(g: &SignedGraph, removed: &mut Vec<Vertex>, failed: &mut HashSet<BTreeSet<Vertex>>) -> bool {
    if g.vertex_count() == 0 {
        return true;
    }
    if failed.contains(g.vertex_set()) {
        return false;
    }
    for v in signed_simplicial_vertices(g) {
        removed.push(v);
        if eliminate(&g.remove_vertex(v), removed, failed) {
            return true;
        }
        removed.pop();
    }
    failed.insert(g.vertex_set().clone());
    false
}

/// Elimination that always removes the smallest signed-simplicial vertex and
/// never revisits a choice.
pub fn greedy_elimination_ordering(g: &SignedGraph) -> Option<Vec<Vertex>> {
    let peel = peel_simplicial_extension(g);
    if peel.base.vertex_count() > 0 {
        return None;
    }
    let mut order = peel.peeled;
    order.reverse();
    Some(order)
}

/// `g` as a simplicial extension of `base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peel {
    pub base: SignedGraph,
    /// Vertices in removal order; adding them back in reverse rebuilds `g`.
    pub peeled: Vec<Vertex>,
}

impl Peel {
    /// The order in which the peeled vertices extend `base`.
    pub fn extension_order(&self) -> Vec<Vertex> {
        self.peeled.iter().rev().copied().collect()
    }
}

/// Removes the smallest signed-simplicial vertex until none is left.
pub fn peel_simplicial_extension(g: &SignedGraph) -> Peel {
    let mut base = g.clone();
    let mut peeled = Vec::new();
    loop {
        let Some(v) = base.vertices().find(|&v| simplicial(&base, v)) else { break };
        base = base.remove_vertex(v);
        peeled.push(v);
    }
    Peel { base, peeled }
}

/// Whether `χ(G/e, t)` divides `χ(G, t)`.
pub fn divisional_edge(g: &SignedGraph, e: DirectedEdge) -> Result<bool, GraphError> {
    let contracted = g.contract(e)?;
    let q = chromatic_polynomial(&contracted);
    Ok(chromatic_polynomial(g).divide_exact(&q).expect("chromatic polynomials are monic").is_some())
}

/// Every orientation of every non-loop edge of `g`.
pub fn directed_edges(g: &SignedGraph) -> Vec<DirectedEdge> {
    let mut out = Vec::new();
    for (pairs, sign) in [(g.positive_pairs(), Sign::Positive), (g.negative_pairs(), Sign::Negative)] {
        for &(a, b) in pairs {
            out.push(DirectedEdge::new(a, b, sign));
            out.push(DirectedEdge::new(b, a, sign));
        }
    }
    out.sort();
    out
}
