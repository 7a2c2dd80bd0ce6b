use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{minimal_vertex_separators, SimpleGraph};
use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsgError {
    #[error("graph is not chordal; chordless cycle {0:?}")]
    NotChordal(Vec<Vertex>),
}

/// A connected component of the clique-separator graph after arc deletion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Box {
    pub cliques: Vec<usize>,
    pub separators: Vec<usize>,
}

/// Maximal cliques and minimal separators of a chordal graph linked by
/// immediate containment.
///
/// Clique and separator lists are sorted; indices in `cs_edges`, `arcs` and
/// boxes refer to those lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSeparatorGraph {
    pub clique_nodes: Vec<BTreeSet<Vertex>>,
    pub separator_nodes: Vec<BTreeSet<Vertex>>,
    /// `(clique, separator)` with `S ⊊ C` and no separator strictly between.
    pub cs_edges: BTreeSet<(usize, usize)>,
    /// `(S, S′)` with `S ⊊ S′` and no separator strictly between.
    pub arcs: BTreeSet<(usize, usize)>,
    pub boxes: Vec<Box>,
    /// Indices into `boxes` of the boxes with no outgoing arc.
    pub sink_boxes: Vec<usize>,
}

pub fn build_csg(g: &SimpleGraph) -> Result<CliqueSeparatorGraph, CsgError> {
    let Some(cliques) = g.maximal_cliques() else {
        return Err(CsgError::NotChordal(g.chordless_cycle().expect("non-chordal graph has a chordless cycle")));
    };
    let separators: Vec<BTreeSet<Vertex>> = minimal_vertex_separators(g).into_iter().collect();
    let strictly_between = |small: &BTreeSet<Vertex>, big: &BTreeSet<Vertex>| {
        separators
            .iter()
            .any(|s| s.len() > small.len() && s.len() < big.len() && small.is_subset(s) && s.is_subset(big))
    };

    let mut cs_edges = BTreeSet::new();
    for (ci, c) in cliques.iter().enumerate() {
        for (si, s) in separators.iter().enumerate() {
            if s.len() < c.len() && s.is_subset(c) && !strictly_between(s, c) {
                cs_edges.insert((ci, si));
            }
        }
    }
    let mut arcs = BTreeSet::new();
    for (i, s) in separators.iter().enumerate() {
        for (j, t) in separators.iter().enumerate() {
            if s.len() < t.len() && s.is_subset(t) && !strictly_between(s, t) {
                arcs.insert((i, j));
            }
        }
    }

    // Union-find over nodes: cliques are 0..k, separators k..k+m.
    let k = cliques.len();
    let mut parent: Vec<usize> = (0..k + separators.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for &(c, s) in &cs_edges {
        let (a, b) = (find(&mut parent, c), find(&mut parent, k + s));
        parent[a.max(b)] = a.min(b);
    }
    let mut groups: BTreeMap<usize, Box> = BTreeMap::new();
    for node in 0..parent.len() {
        let root = find(&mut parent, node);
        let entry = groups.entry(root).or_insert_with(|| Box { cliques: vec![], separators: vec![] });
        if node < k {
            entry.cliques.push(node);
        } else {
            entry.separators.push(node - k);
        }
    }
    let boxes: Vec<Box> = groups.into_values().collect();
    let mut box_of_separator = vec![0; separators.len()];
    for (bi, b) in boxes.iter().enumerate() {
        for &s in &b.separators {
            box_of_separator[s] = bi;
        }
    }
    let sink_boxes = (0..boxes.len())
        .filter(|&bi| !arcs.iter().any(|&(s, t)| box_of_separator[s] == bi && box_of_separator[t] != bi))
        .collect();

    Ok(CliqueSeparatorGraph { clique_nodes: cliques, separator_nodes: separators, cs_edges, arcs, boxes, sink_boxes })
}

fn label(set: &BTreeSet<Vertex>) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

impl CliqueSeparatorGraph {
    /// Graphviz rendering: cliques as boxes, separators as ellipses.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph csg {\n");
        for (i, c) in self.clique_nodes.iter().enumerate() {
            let _ = writeln!(out, "  c{i} [shape=box, label=\"{}\"];", label(c));
        }
        for (i, s) in self.separator_nodes.iter().enumerate() {
            let _ = writeln!(out, "  s{i} [shape=ellipse, label=\"{}\"];", label(s));
        }
        for &(c, s) in &self.cs_edges {
            let _ = writeln!(out, "  c{c} -> s{s} [dir=none];");
        }
        for &(s, t) in &self.arcs {
            let _ = writeln!(out, "  s{s} -> s{t};");
        }
        out.push_str("}\n");
        out
    }

    /// The sink box whose sorted node labels come first.
    pub fn first_sink_box(&self) -> Option<&Box> {
        self.sink_boxes.iter().map(|&i| &self.boxes[i]).min_by_key(|b| {
            let mut labels: Vec<Vec<Vertex>> = b
                .cliques
                .iter()
                .map(|&c| self.clique_nodes[c].iter().copied().collect())
                .chain(b.separators.iter().map(|&s| self.separator_nodes[s].iter().copied().collect()))
                .collect();
            labels.sort();
            labels
        })
    }

    /// Checks the structural invariants; returns the first violation found.
    ///
    /// Each box is a tree whose separators form an antichain, each box has
    /// the clique-intersection property, the graph of boxes under arcs is
    /// acyclic, and every leaf of a sink box is a clique node.
    pub fn check_invariants(&self) -> Result<(), String> {
        let c_of = |i: usize| &self.clique_nodes[i];
        let s_of = |i: usize| &self.separator_nodes[i];
        for &(c, s) in &self.cs_edges {
            if !(s_of(s).is_subset(c_of(c)) && s_of(s).len() < c_of(c).len()) {
                return Err(format!("cs edge ({c},{s}) is not a strict containment"));
            }
        }
        for &(s, t) in &self.arcs {
            if !(s_of(s).is_subset(s_of(t)) && s_of(s).len() < s_of(t).len()) {
                return Err(format!("arc ({s},{t}) is not a strict containment"));
            }
        }
        let mut box_of_separator = BTreeMap::new();
        for (bi, b) in self.boxes.iter().enumerate() {
            let nodes = b.cliques.len() + b.separators.len();
            let edges = self.cs_edges.iter().filter(|(c, _)| b.cliques.contains(c)).count();
            if edges + 1 != nodes {
                return Err(format!("box {bi} is not a tree ({nodes} nodes, {edges} edges)"));
            }
            for &s in &b.separators {
                box_of_separator.insert(s, bi);
                for &t in &b.separators {
                    if s != t && s_of(s).is_subset(s_of(t)) {
                        return Err(format!("box {bi}: separators {s} and {t} are comparable"));
                    }
                }
            }
            // Clique intersection: C ∩ C′ lies in every node on the tree path.
            for (x, &ci) in b.cliques.iter().enumerate() {
                for &cj in &b.cliques[x + 1..] {
                    let meet: BTreeSet<Vertex> = c_of(ci).intersection(c_of(cj)).copied().collect();
                    let path = self.box_path(b, ci, cj).ok_or_else(|| format!("box {bi} is disconnected"))?;
                    for node in path {
                        let set = match node {
                            Node::Clique(i) => c_of(i),
                            Node::Separator(i) => s_of(i),
                        };
                        if !meet.is_subset(set) {
                            return Err(format!("box {bi}: cliques {ci},{cj} violate clique intersection"));
                        }
                    }
                }
            }
        }
        // Acyclicity of the box digraph by repeated removal of sources.
        let mut box_arcs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(s, t) in &self.arcs {
            let (a, b) = (box_of_separator[&s], box_of_separator[&t]);
            if a != b {
                box_arcs.insert((a, b));
            }
        }
        let mut alive: BTreeSet<usize> = (0..self.boxes.len()).collect();
        while !alive.is_empty() {
            let source = alive.iter().copied().find(|&b| !box_arcs.iter().any(|&(x, y)| y == b && alive.contains(&x)));
            match source {
                Some(b) => {
                    alive.remove(&b);
                }
                None => return Err("box digraph has a cycle".into()),
            }
        }
        for &bi in &self.sink_boxes {
            let b = &self.boxes[bi];
            for &s in &b.separators {
                let degree = self.cs_edges.iter().filter(|&&(_, t)| t == s).count();
                if degree <= 1 {
                    return Err(format!("sink box {bi} has separator leaf {s}"));
                }
            }
        }
        Ok(())
    }

    fn box_path(&self, b: &Box, from: usize, to: usize) -> Option<Vec<Node>> {
        let mut parent: BTreeMap<Node, Node> = BTreeMap::new();
        let start = Node::Clique(from);
        parent.insert(start, start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let next: Vec<Node> = match u {
                Node::Clique(c) => self.cs_edges.iter().filter(|e| e.0 == c).map(|e| Node::Separator(e.1)).collect(),
                Node::Separator(s) => self
                    .cs_edges
                    .iter()
                    .filter(|e| e.1 == s && b.cliques.contains(&e.0))
                    .map(|e| Node::Clique(e.0))
                    .collect(),
            };
            for x in next {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(x) {
                    e.insert(u);
                    stack.push(x);
                }
            }
        }
        let target = Node::Clique(to);
        parent.get(&target)?;
        let mut path = vec![target];
        let mut cur = target;
        while cur != start {
            cur = parent[&cur];
            path.push(cur);
        }
        Some(path)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    Clique(usize),
    Separator(usize),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> BTreeSet<Vertex> {
        v.iter().copied().collect()
    }

    #[test]
    fn complete_graph_is_one_sink_box() {
        let csg = build_csg(&SimpleGraph::complete(1..=4)).unwrap();
        assert_eq!(csg.clique_nodes, vec![set(&[1, 2, 3, 4])]);
        assert!(csg.separator_nodes.is_empty());
        assert_eq!(csg.boxes.len(), 1);
        assert_eq!(csg.sink_boxes, vec![0]);
        csg.check_invariants().unwrap();
    }

    #[test]
    fn path_has_two_cliques_one_separator() {
        let p = SimpleGraph::new([1, 2, 3], [(1, 2), (2, 3)]).unwrap();
        let csg = build_csg(&p).unwrap();
        assert_eq!(csg.clique_nodes, vec![set(&[1, 2]), set(&[2, 3])]);
        assert_eq!(csg.separator_nodes, vec![set(&[2])]);
        assert_eq!(csg.cs_edges, BTreeSet::from([(0, 0), (1, 0)]));
        assert!(csg.arcs.is_empty());
        assert_eq!(csg.boxes.len(), 1);
        csg.check_invariants().unwrap();
        let dot = csg.to_dot();
        assert!(dot.contains("label=\"1,2\""));
        assert!(dot.contains("shape=ellipse, label=\"2\""));
    }

    #[test]
    fn rejects_cycle() {
        let c4 = SimpleGraph::new(1..=4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        match build_csg(&c4) {
            Err(CsgError::NotChordal(w)) => assert!(c4.is_chordless_cycle(&w)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
