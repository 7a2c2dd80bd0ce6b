//! Simple-graph structure: chordality, elimination orderings, separators,
//! clique-separator graphs and threshold recognition.

mod csg;
mod separators;
mod threshold;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::GraphError;
use crate::graph::{sorted, Vertex};

pub use csg::{build_csg, Box as CsgBox, CliqueSeparatorGraph, CsgError};
pub use separators::minimal_vertex_separators;
pub use threshold::{degree_orderings_initial_segment, is_threshold, BuildStep, ForbiddenKind, ThresholdCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SimpleGraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl SimpleGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfPair(u));
            }
            for w in [u, v] {
                if !vertices.contains(&w) {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
            set.insert(sorted(u, v));
        }
        Ok(SimpleGraph::from_parts(vertices, set))
    }

    /// Caller guarantees the invariants (sorted pairs on known vertices).
    pub(crate) fn from_parts(vertices: BTreeSet<Vertex>, edges: BTreeSet<(Vertex, Vertex)>) -> Self {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for &(a, b) in &edges {
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        SimpleGraph { vertices, edges, adj }
    }

    pub fn complete(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut edges = BTreeSet::new();
        for &a in &vertices {
            for &b in vertices.range(a + 1..) {
                edges.insert((a, b));
            }
        }
        SimpleGraph::from_parts(vertices, edges)
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edges.contains(&sorted(u, v))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter().all(|&a| set.range(a + 1..).all(|&b| self.has_edge(a, b)))
    }

    pub fn induced(&self, w: &BTreeSet<Vertex>) -> SimpleGraph {
        let vertices: BTreeSet<Vertex> = self.vertices.intersection(w).copied().collect();
        let edges = self.edges.iter().filter(|(a, b)| vertices.contains(a) && vertices.contains(b)).copied().collect();
        SimpleGraph::from_parts(vertices, edges)
    }

    /// `v` is simplicial when its neighbourhood is a clique.
    pub fn is_simplicial(&self, v: Vertex) -> bool {
        self.is_clique(self.neighbors(v))
    }

    /// Connected components of `G − removed`, each sorted.
    pub fn components_without(&self, removed: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
        let mut seen: BTreeSet<Vertex> = removed.clone();
        let mut out = Vec::new();
        for &root in &self.vertices {
            if !seen.insert(root) {
                continue;
            }
            let mut comp = BTreeSet::from([root]);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &x in self.neighbors(u) {
                    if seen.insert(x) {
                        comp.insert(x);
                        stack.push(x);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        self.components_without(&BTreeSet::new())
    }

    /// Open neighbourhood of a vertex set.
    pub fn set_neighborhood(&self, set: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        for &v in set {
            out.extend(self.neighbors(v).iter().filter(|x| !set.contains(x)));
        }
        out
    }

    /// Shortest path from `a` to `b` avoiding `blocked`, endpoints included.
    pub fn shortest_path_avoiding(&self, a: Vertex, b: Vertex, blocked: &BTreeSet<Vertex>) -> Option<Vec<Vertex>> {
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([a]);
        parent.insert(a, a);
        while let Some(u) = queue.pop_front() {
            if u == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &x in self.neighbors(u) {
                if !blocked.contains(&x) && !parent.contains_key(&x) {
                    parent.insert(x, u);
                    queue.push_back(x);
                }
            }
        }
        None
    }

    /// Elimination ordering `(v₁,…,v_ℓ)` where each `v_i` is simplicial in
    /// `G[{v₁,…,v_i}]`, or `None` when the graph is not chordal.
    ///
    /// Simplicial vertices are removed greedily (smallest id first); the
    /// removal sequence read backwards is the ordering.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<Vertex>> {
        let mut remaining = self.clone();
        let mut removed = Vec::with_capacity(self.vertex_count());
        while !remaining.vertices.is_empty() {
            let v = remaining.vertices.iter().copied().find(|&v| remaining.is_simplicial(v))?;
            let mut keep = remaining.vertices.clone();
            keep.remove(&v);
            remaining = remaining.induced(&keep);
            removed.push(v);
        }
        removed.reverse();
        Some(removed)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// Checks that `order` is a perfect elimination ordering.
    pub fn is_perfect_elimination_ordering(&self, order: &[Vertex]) -> bool {
        let as_set: BTreeSet<Vertex> = order.iter().copied().collect();
        if as_set != self.vertices || order.len() != self.vertices.len() {
            return false;
        }
        let mut prefix = BTreeSet::new();
        for &v in order {
            let earlier: BTreeSet<Vertex> = self.neighbors(v).intersection(&prefix).copied().collect();
            if !self.is_clique(&earlier) {
                return false;
            }
            prefix.insert(v);
        }
        true
    }

    /// An induced cycle of length at least four, if one exists.
    pub fn chordless_cycle(&self) -> Option<Vec<Vertex>> {
        for &v in &self.vertices {
            let nv = self.neighbors(v);
            for &a in nv {
                for &b in nv.range(a + 1..) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    let mut blocked: BTreeSet<Vertex> = nv.clone();
                    blocked.insert(v);
                    blocked.remove(&a);
                    blocked.remove(&b);
                    if let Some(path) = self.shortest_path_avoiding(a, b, &blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    /// Checks that `cycle` is an induced cycle of length ≥ 4.
    pub fn is_chordless_cycle(&self, cycle: &[Vertex]) -> bool {
        let k = cycle.len();
        let distinct: BTreeSet<Vertex> = cycle.iter().copied().collect();
        if k < 4 || distinct.len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(cycle[i], cycle[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Maximal cliques of a chordal graph, sorted; `None` if not chordal.
    pub fn maximal_cliques(&self) -> Option<Vec<BTreeSet<Vertex>>> {
        let order = self.perfect_elimination_ordering()?;
        let mut prefix = BTreeSet::new();
        let mut candidates: Vec<BTreeSet<Vertex>> = Vec::new();
        for &v in &order {
            let mut c: BTreeSet<Vertex> = self.neighbors(v).intersection(&prefix).copied().collect();
            c.insert(v);
            candidates.push(c);
            prefix.insert(v);
        }
        let mut out: Vec<BTreeSet<Vertex>> = candidates
            .iter()
            .filter(|c| !candidates.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: Vertex) -> SimpleGraph {
        SimpleGraph::new(1..=n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    #[test]
    fn peo_on_complete_and_cycle() {
        let k4 = SimpleGraph::complete(1..=4);
        let order = k4.perfect_elimination_ordering().unwrap();
        assert!(k4.is_perfect_elimination_ordering(&order));
        assert!(k4.is_perfect_elimination_ordering(&[4, 2, 3, 1]));

        let c4 = cycle(4);
        assert_eq!(c4.perfect_elimination_ordering(), None);
        let w = c4.chordless_cycle().unwrap();
        assert!(c4.is_chordless_cycle(&w));
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn chordless_cycle_iff_not_chordal() {
        for n in 3..=7 {
            let c = cycle(n);
            assert_eq!(c.is_chordal(), n == 3);
            assert_eq!(c.chordless_cycle().is_some(), n > 3);
        }
        let mut edges: Vec<(Vertex, Vertex)> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
        edges.push((1, 3));
        let g = SimpleGraph::new(1..=5, edges).unwrap();
        let w = g.chordless_cycle().unwrap();
        assert!(g.is_chordless_cycle(&w));
    }

    #[test]
    fn maximal_cliques_of_path() {
        let p = SimpleGraph::new([1, 2, 3], [(1, 2), (2, 3)]).unwrap();
        let cliques = p.maximal_cliques().unwrap();
        assert_eq!(cliques, vec![BTreeSet::from([1, 2]), BTreeSet::from([2, 3])]);
    }
}
