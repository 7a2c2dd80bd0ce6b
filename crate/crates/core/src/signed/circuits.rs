use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Edge, Sign, SignedGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameCircuitKind {
    BalancedCycle,
    LooseHandcuff,
    TightHandcuff,
}

/// A minimal dependent edge set of the signed-graphic matroid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FrameCircuit {
    pub kind: FrameCircuitKind,
    /// Sorted.
    pub edges: Vec<Edge>,
}

impl FrameCircuit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges.iter().copied().collect()
    }
}

/// A cycle as an edge set with its vertex set and balance.
#[derive(Clone, Debug)]
struct Cycle {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
    balanced: bool,
}

/// Every simple cycle of length 3 up to `max_len`, with every sign choice,
/// plus the loop and `±` 1- and 2-cycles.
fn cycles(g: &SignedGraph, max_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    for &v in g.loops() {
        out.push(Cycle { vertices: BTreeSet::from([v]), edges: BTreeSet::from([Edge::Loop(v)]), balanced: false });
    }
    if max_len >= 2 {
        for &(a, b) in g.positive_pairs().intersection(g.negative_pairs()) {
            out.push(Cycle {
                vertices: BTreeSet::from([a, b]),
                edges: BTreeSet::from([Edge::positive(a, b), Edge::negative(a, b)]),
                balanced: false,
            });
        }
    }
    let mut seen: BTreeSet<Vec<Edge>> = BTreeSet::new();
    for start in g.vertices() {
        let mut path = vec![start];
        let mut edges = Vec::new();
        grow_cycles(g, start, &mut path, &mut edges, max_len, &mut |edges| {
            let key: Vec<Edge> = {
                let mut k = edges.to_vec();
                k.sort();
                k
            };
            if seen.insert(key.clone()) {
                let negatives = key.iter().filter(|e| e.sign() == Some(Sign::Negative)).count();
                let vertices = key.iter().flat_map(|e| [e.endpoints().0, e.endpoints().1]).collect();
                out.push(Cycle { vertices, edges: key.into_iter().collect(), balanced: negatives % 2 == 0 });
            }
        });
    }
    out
}

fn grow_cycles(
    g: &SignedGraph,
    start: Vertex,
    path: &mut Vec<Vertex>,
    edges: &mut Vec<Edge>,
    max_len: usize,
    emit: &mut dyn FnMut(&[Edge]),
) {
    let last = *path.last().expect("non-empty path");
    if path.len() >= 3 {
        for sign in [Sign::Positive, Sign::Negative] {
            if g.has_signed(last, start, sign) {
                edges.push(Edge::signed(last, start, sign));
                emit(edges);
                edges.pop();
            }
        }
    }
    if path.len() >= max_len {
        return;
    }
    for y in g.all_neighbors(last) {
        if y <= start || path.contains(&y) {
            continue;
        }
        for sign in [Sign::Positive, Sign::Negative] {
            if g.has_signed(last, y, sign) {
                path.push(y);
                edges.push(Edge::signed(last, y, sign));
                grow_cycles(g, start, path, edges, max_len, emit);
                edges.pop();
                path.pop();
            }
        }
    }
}

/// Every frame circuit of `g` with at most `max_edges` elements, sorted by
/// size and then by edge list.
pub fn find_frame_circuits(g: &SignedGraph, max_edges: usize) -> Vec<FrameCircuit> {
    let all = cycles(g, max_edges);
    let mut found: BTreeSet<(usize, FrameCircuit)> = BTreeSet::new();
    let mut add = |kind: FrameCircuitKind, edges: BTreeSet<Edge>| {
        if edges.len() <= max_edges {
            let c = FrameCircuit { kind, edges: edges.into_iter().collect() };
            found.insert((c.len(), c));
        }
    };
    for c in all.iter().filter(|c| c.balanced) {
        add(FrameCircuitKind::BalancedCycle, c.edges.clone());
    }
    let unbalanced: Vec<&Cycle> = all.iter().filter(|c| !c.balanced).collect();
    for (i, a) in unbalanced.iter().enumerate() {
        for b in &unbalanced[i + 1..] {
            let base = a.edges.len() + b.edges.len();
            if base > max_edges {
                continue;
            }
            let shared = a.vertices.intersection(&b.vertices).count();
            let union: BTreeSet<Edge> = a.edges.union(&b.edges).copied().collect();
            if shared == 1 {
                add(FrameCircuitKind::TightHandcuff, union);
            } else if shared == 0 {
                let blocked: BTreeSet<Vertex> = a.vertices.union(&b.vertices).copied().collect();
                for &s in &a.vertices {
                    let mut path_edges = Vec::new();
                    let mut visited = BTreeSet::from([s]);
                    connecting_paths(
                        g,
                        s,
                        &b.vertices,
                        &blocked,
                        &mut visited,
                        &mut path_edges,
                        max_edges - base,
                        &mut |p| {
                            let mut e = union.clone();
                            e.extend(p.iter().copied());
                            add(FrameCircuitKind::LooseHandcuff, e);
                        },
                    );
                }
            }
        }
    }
    found.into_iter().map(|(_, c)| c).collect()
}

/// Paths from `at` to a vertex of `targets` whose interior avoids `blocked`.
#[allow(clippy::too_many_arguments)]
fn connecting_paths(
    g: &SignedGraph,
    at: Vertex,
    targets: &BTreeSet<Vertex>,
    blocked: &BTreeSet<Vertex>,
    visited: &mut BTreeSet<Vertex>,
    edges: &mut Vec<Edge>,
    budget: usize,
    emit: &mut dyn FnMut(&[Edge]),
) {
    if edges.len() >= budget {
        return;
    }
    for y in g.all_neighbors(at) {
        if visited.contains(&y) {
            continue;
        }
        let ends = targets.contains(&y);
        if !ends && blocked.contains(&y) {
            continue;
        }
        for sign in [Sign::Positive, Sign::Negative] {
            if !g.has_signed(at, y, sign) {
                continue;
            }
            edges.push(Edge::signed(at, y, sign));
            if ends {
                emit(edges);
            } else {
                visited.insert(y);
                connecting_paths(g, y, targets, blocked, visited, edges, budget, emit);
                visited.remove(&y);
            }
            edges.pop();
        }
    }
}

/// Matroid rank of an edge set: `|V| − b` over the spanning subgraph.
pub fn edge_rank(g: &SignedGraph, edges: &BTreeSet<Edge>) -> Result<usize, GraphError> {
    Ok(g.spanning_subgraph(edges)?.rank())
}

/// The edges of `g` lying in the span of `f`.
pub fn closure(g: &SignedGraph, f: &BTreeSet<Edge>) -> Result<BTreeSet<Edge>, GraphError> {
    let r = edge_rank(g, f)?;
    let mut out = f.clone();
    for e in g.edges() {
        if f.contains(&e) {
            continue;
        }
        let mut with = f.clone();
        with.insert(e);
        if edge_rank(g, &with)? == r {
            out.insert(e);
        }
    }
    Ok(out)
}

/// Whether `A(F)` is a localization of `A(G)`, i.e. `f` is closed.
pub fn is_flat_subgraph(g: &SignedGraph, f: &BTreeSet<Edge>) -> Result<bool, GraphError> {
    Ok(closure(g, f)?.len() == f.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{self, GraphClass, LoopPolicy};
    use crate::oracle::{intersection_lattice, realize, vector_rank};

    fn normal(e: &Edge, ids: &[Vertex]) -> Vec<i64> {
        let idx = |v: Vertex| ids.iter().position(|&x| x == v).unwrap();
        let mut n = vec![0; ids.len()];
        match *e {
            Edge::Positive(a, b) => {
                n[idx(a)] = 1;
                n[idx(b)] = -1;
            }
            Edge::Negative(a, b) => {
                n[idx(a)] = 1;
                n[idx(b)] = 1;
            }
            Edge::Loop(v) => n[idx(v)] = 1,
        }
        n
    }

    /// Minimal linearly dependent edge subsets by brute force.
    fn brute_circuits(g: &SignedGraph) -> BTreeSet<Vec<Edge>> {
        let ids: Vec<Vertex> = g.vertices().collect();
        let edges = g.edges();
        let m = edges.len();
        let mut dependent: Vec<u32> = Vec::new();
        for mask in 1u32..1 << m {
            let vs: Vec<Vec<i64>> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| normal(&edges[i], &ids)).collect();
            if vector_rank(&vs) < vs.len() {
                dependent.push(mask);
            }
        }
        dependent
            .iter()
            .filter(|&&d| !dependent.iter().any(|&o| o != d && o & !d == 0))
            .map(|&d| (0..m).filter(|i| d >> i & 1 == 1).map(|i| edges[i]).collect())
            .collect()
    }

    fn square() -> SignedGraph {
        SignedGraph::new(1..=4, [(1, 4), (2, 3)], [(1, 2), (3, 4)], []).unwrap()
    }

    #[test]
    fn examples() {
        let tree = SignedGraph::new(1..=4, [(1, 2), (2, 3), (2, 4)], [], []).unwrap();
        assert!(find_frame_circuits(&tree, 10).is_empty());

        let c = find_frame_circuits(&square(), 10);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kind, FrameCircuitKind::BalancedCycle);
        assert_eq!(c[0].len(), 4);

        let handcuff = SignedGraph::new(1..=3, [(1, 2), (1, 3)], [(1, 2), (1, 3)], []).unwrap();
        let c = find_frame_circuits(&handcuff, 10);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kind, FrameCircuitKind::TightHandcuff);

        let loose = SignedGraph::new(1..=3, [(1, 2), (2, 3)], [], [1, 3]).unwrap();
        let c = find_frame_circuits(&loose, 10);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kind, FrameCircuitKind::LooseHandcuff);
    }

    #[test]
    fn structural_enumeration_matches_brute_force() {
        let mut r = gen::rng(3);
        for n in 2..=4 {
            for _ in 0..60 {
                let g = gen::random_graph(&mut r, n, GraphClass::General, LoopPolicy::Random);
                if g.edge_count() > 12 {
                    continue;
                }
                let found: BTreeSet<Vec<Edge>> = find_frame_circuits(&g, 64).into_iter().map(|c| c.edges).collect();
                assert_eq!(found, brute_circuits(&g), "{g}");
            }
        }
    }

    #[test]
    fn flats() {
        let g = square();
        let all: BTreeSet<Edge> = g.edges().into_iter().collect();
        assert!(is_flat_subgraph(&g, &all).unwrap());

        let chorded_square =
            SignedGraph::new(1..=4, [(1, 4), (3, 4), (1, 3), (1, 2), (2, 3)], [(1, 2), (3, 4)], []).unwrap();
        let f: BTreeSet<Edge> =
            [Edge::positive(1, 4), Edge::positive(2, 3), Edge::negative(1, 2), Edge::negative(3, 4)].into();
        assert!(is_flat_subgraph(&chorded_square, &f).unwrap());

        // An unbalanced triangle 1-2-3 plus vertex 4 closing a balanced
        // 4-cycle 1-2-3-4 with a positive chord 1-3.
        let g = SignedGraph::new(1..=4, [(1, 2), (2, 3), (3, 4), (1, 4)], [(1, 3)], []).unwrap();
        let path: BTreeSet<Edge> = [Edge::positive(1, 2), Edge::positive(2, 3), Edge::positive(3, 4)].into();
        assert!(!is_flat_subgraph(&g, &path).unwrap());
    }

    #[test]
    fn flats_match_lattice() {
        let mut r = gen::rng(8);
        for _ in 0..80 {
            let g = gen::random_graph(&mut r, 4, GraphClass::General, LoopPolicy::Random);
            let a = realize(&g);
            let lat = intersection_lattice(&a).unwrap();
            let edges = g.edges();
            let m = edges.len().min(10);
            for mask in 0u32..1 << m {
                let f: BTreeSet<Edge> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                let idx: Vec<usize> = a
                    .hyperplanes
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.sources.iter().any(|e| f.contains(e)))
                    .map(|(i, _)| i)
                    .collect();
                assert_eq!(is_flat_subgraph(&g, &f).unwrap(), lat.is_flat(&idx), "{g} {f:?}");
            }
        }
    }
}
