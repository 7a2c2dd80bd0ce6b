use std::collections::BTreeSet;

use super::SimpleGraph;
use crate::graph::Vertex;

/// All minimal `(a, b)`-separators over all non-adjacent pairs `a, b`.
///
/// Generated by closure: the neighbourhoods of the components of
/// `G − N[v]` seed the family, and each separator `S` with `x ∈ S`
/// contributes the neighbourhoods of the components of `G − (S ∪ N(x))`.
/// A set `N(C)` is kept only when it is non-empty and some other component
/// of `G − N(C)` is also full, which is exactly minimality.
pub fn minimal_vertex_separators(g: &SimpleGraph) -> BTreeSet<BTreeSet<Vertex>> {
    let mut found: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
    let mut queue: Vec<BTreeSet<Vertex>> = Vec::new();
    let offer = |s: BTreeSet<Vertex>, found: &mut BTreeSet<_>, queue: &mut Vec<_>| {
        if !s.is_empty() && is_minimal_separator(g, &s) && found.insert(s.clone()) {
            queue.push(s);
        }
    };

    for &v in g.vertices() {
        let mut closed = g.neighbors(v).clone();
        closed.insert(v);
        for comp in g.components_without(&closed) {
            offer(g.set_neighborhood(&comp), &mut found, &mut queue);
        }
    }
    while let Some(s) = queue.pop() {
        for &x in &s {
            let mut removed = s.clone();
            removed.extend(g.neighbors(x));
            for comp in g.components_without(&removed) {
                offer(g.set_neighborhood(&comp), &mut found, &mut queue);
            }
        }
    }
    found
}

/// `S` is a minimal separator iff `G − S` has two full components, i.e.
/// components whose neighbourhood is all of `S`.
fn is_minimal_separator(g: &SimpleGraph, s: &BTreeSet<Vertex>) -> bool {
    g.components_without(s).iter().filter(|c| g.set_neighborhood(c) == *s).take(2).count() == 2
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Subset enumeration over all non-adjacent pairs.
    fn brute_force(g: &SimpleGraph) -> BTreeSet<BTreeSet<Vertex>> {
        let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
        let n = vs.len();
        let mut out = BTreeSet::new();
        let separates = |s: &BTreeSet<Vertex>, a: Vertex, b: Vertex| g.shortest_path_avoiding(a, b, s).is_none();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (vs[i], vs[j]);
                if g.has_edge(a, b) {
                    continue;
                }
                for mask in 0u32..1 << n {
                    if mask >> i & 1 == 1 || mask >> j & 1 == 1 {
                        continue;
                    }
                    let s: BTreeSet<Vertex> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| vs[k]).collect();
                    if !separates(&s, a, b) {
                        continue;
                    }
                    let minimal = s.iter().all(|x| {
                        let mut t = s.clone();
                        t.remove(x);
                        !separates(&t, a, b)
                    });
                    if minimal && !s.is_empty() {
                        out.insert(s);
                    }
                }
            }
        }
        out
    }

    fn set(v: &[Vertex]) -> BTreeSet<Vertex> {
        v.iter().copied().collect()
    }

    #[test]
    fn complete_and_path() {
        assert!(minimal_vertex_separators(&SimpleGraph::complete(1..=5)).is_empty());
        let p = SimpleGraph::new([1, 2, 3], [(1, 2), (2, 3)]).unwrap();
        assert_eq!(minimal_vertex_separators(&p), BTreeSet::from([set(&[2])]));
    }

    #[test]
    fn matches_subset_enumeration() {
        let c5 = SimpleGraph::new(1..=5, (1..=5).map(|i| (i, i % 5 + 1))).unwrap();
        assert_eq!(minimal_vertex_separators(&c5), brute_force(&c5));
        let graphs = [
            vec![(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (4, 5), (5, 6)],
            vec![(1, 2), (3, 4)],
            vec![(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3), (5, 6), (6, 1)],
        ];
        for edges in graphs {
            let g = SimpleGraph::new(1..=6, edges).unwrap();
            assert_eq!(minimal_vertex_separators(&g), brute_force(&g));
        }
    }

    #[test]
    fn exhaustive_on_five_vertices() {
        let pairs: Vec<(Vertex, Vertex)> = (1..=5).flat_map(|a| (a + 1..=5).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]);
            let g = SimpleGraph::new(1..=5, edges).unwrap();
            let seps = minimal_vertex_separators(&g);
            assert_eq!(seps, brute_force(&g), "edges mask {mask}");
            if g.is_chordal() {
                assert!(seps.iter().all(|s| g.is_clique(s)));
            }
        }
    }
}
