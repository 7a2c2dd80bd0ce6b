//! Signed graphs `G = (G⁺, G⁻, L)` and their elementary transformations.
//!
//! A signed graph has a vertex set, a set of positive edges, a set of negative
//! edges and a set of loops. A vertex pair may carry both a positive and a
//! negative edge (the unbalanced 2-cycle); a loop is the unbalanced 1-cycle.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chordal::SimpleGraph;
use crate::error::GraphError;

pub type Vertex = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// Product of signs, `+ · − = −`.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// An element of a signed graph: a signed edge on a sorted vertex pair, or a loop.
///
/// These are exactly the ground-set elements of the frame matroid, one per
/// hyperplane of the signed-graphic arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Edge {
    Positive(Vertex, Vertex),
    Negative(Vertex, Vertex),
    Loop(Vertex),
}

impl Edge {
    pub fn positive(u: Vertex, v: Vertex) -> Edge {
        let (a, b) = sorted(u, v);
        Edge::Positive(a, b)
    }

    pub fn negative(u: Vertex, v: Vertex) -> Edge {
        let (a, b) = sorted(u, v);
        Edge::Negative(a, b)
    }

    pub fn signed(u: Vertex, v: Vertex, sign: Sign) -> Edge {
        match sign {
            Sign::Positive => Edge::positive(u, v),
            Sign::Negative => Edge::negative(u, v),
        }
    }

    /// `None` for loops.
    pub fn sign(&self) -> Option<Sign> {
        match self {
            Edge::Positive(..) => Some(Sign::Positive),
            Edge::Negative(..) => Some(Sign::Negative),
            Edge::Loop(_) => None,
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        match *self {
            Edge::Positive(u, v) | Edge::Negative(u, v) => (u, v),
            Edge::Loop(v) => (v, v),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::Positive(u, v) => write!(f, "+{{{u},{v}}}"),
            Edge::Negative(u, v) => write!(f, "-{{{u},{v}}}"),
            Edge::Loop(v) => write!(f, "loop({v})"),
        }
    }
}

pub(crate) fn sorted(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A total map `V → {+1, −1}`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SwitchingFunction {
    signs: BTreeMap<Vertex, Sign>,
}

impl SwitchingFunction {
    pub fn new(signs: BTreeMap<Vertex, Sign>) -> Self {
        SwitchingFunction { signs }
    }

    /// Switching that is `−1` exactly on `negated`.
    pub fn negating(g: &SignedGraph, negated: &BTreeSet<Vertex>) -> Self {
        let signs = g
            .vertices()
            .map(|v| {
                let s = if negated.contains(&v) { Sign::Negative } else { Sign::Positive };
                (v, s)
            })
            .collect();
        SwitchingFunction { signs }
    }

    pub fn get(&self, v: Vertex) -> Option<Sign> {
        self.signs.get(&v).copied()
    }
}

/// An oriented edge `(from, to)`; contraction removes `from` and keeps `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DirectedEdge {
    pub from: Vertex,
    pub to: Vertex,
    pub sign: Sign,
}

impl DirectedEdge {
    pub fn new(from: Vertex, to: Vertex, sign: Sign) -> Self {
        DirectedEdge { from, to, sign }
    }

    pub fn reversed(self) -> Self {
        DirectedEdge { from: self.to, to: self.from, sign: self.sign }
    }

    pub fn edge(&self) -> Edge {
        Edge::signed(self.from, self.to, self.sign)
    }
}

/// A cycle given by its vertex sequence and the sign chosen for each step.
///
/// `signs[i]` is the sign of the edge between `vertices[i]` and
/// `vertices[(i + 1) % len]`. A single vertex with no signs is the loop
/// 1-cycle; two vertices with signs `[+, −]` form the 2-cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedCycle {
    pub vertices: Vec<Vertex>,
    pub signs: Vec<Sign>,
}

impl SignedCycle {
    pub fn new(vertices: Vec<Vertex>, signs: Vec<Sign>) -> Self {
        SignedCycle { vertices, signs }
    }

    pub fn loop_at(v: Vertex) -> Self {
        SignedCycle { vertices: vec![v], signs: vec![] }
    }

    pub fn digon(u: Vertex, v: Vertex) -> Self {
        SignedCycle { vertices: vec![u, v], signs: vec![Sign::Positive, Sign::Negative] }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_negative()).count()
    }

    /// The elements traversed by the cycle.
    pub fn edges(&self) -> Vec<Edge> {
        match self.vertices.len() {
            1 => vec![Edge::Loop(self.vertices[0])],
            2 => vec![
                Edge::positive(self.vertices[0], self.vertices[1]),
                Edge::negative(self.vertices[0], self.vertices[1]),
            ],
            k => (0..k).map(|i| Edge::signed(self.vertices[i], self.vertices[(i + 1) % k], self.signs[i])).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Balance {
    Balanced,
    Unbalanced,
}

/// A connected component together with its balance flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub vertices: Vec<Vertex>,
    pub balanced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignedGraph {
    vertices: BTreeSet<Vertex>,
    positive: BTreeSet<(Vertex, Vertex)>,
    negative: BTreeSet<(Vertex, Vertex)>,
    loops: BTreeSet<Vertex>,
}

impl SignedGraph {
    /// Builds a signed graph, sorting and deduplicating the pairs.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        positive: impl IntoIterator<Item = (Vertex, Vertex)>,
        negative: impl IntoIterator<Item = (Vertex, Vertex)>,
        loops: impl IntoIterator<Item = Vertex>,
    ) -> Result<Self, GraphError> {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let pairs = |it: &mut dyn Iterator<Item = (Vertex, Vertex)>| {
            let mut out = BTreeSet::new();
            for (u, v) in it {
                if u == v {
                    return Err(GraphError::SelfPair(u));
                }
                for w in [u, v] {
                    if !vertices.contains(&w) {
                        return Err(GraphError::UnknownVertex(w));
                    }
                }
                out.insert(sorted(u, v));
            }
            Ok(out)
        };
        let positive = pairs(&mut positive.into_iter())?;
        let negative = pairs(&mut negative.into_iter())?;
        let loops: BTreeSet<Vertex> = loops.into_iter().collect();
        if let Some(&v) = loops.iter().find(|v| !vertices.contains(v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        Ok(SignedGraph { vertices, positive, negative, loops })
    }

    /// Builds a graph from a list of elements on the given vertex set.
    pub fn from_edges(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut loops = Vec::new();
        for e in edges {
            match e {
                Edge::Positive(u, v) => pos.push((u, v)),
                Edge::Negative(u, v) => neg.push((u, v)),
                Edge::Loop(v) => loops.push(v),
            }
        }
        SignedGraph::new(vertices, pos, neg, loops)
    }

    pub fn empty() -> Self {
        SignedGraph::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn positive_pairs(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.positive
    }

    pub fn negative_pairs(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.negative
    }

    pub fn loops(&self) -> &BTreeSet<Vertex> {
        &self.loops
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_positive(&self, u: Vertex, v: Vertex) -> bool {
        self.positive.contains(&sorted(u, v))
    }

    pub fn has_negative(&self, u: Vertex, v: Vertex) -> bool {
        self.negative.contains(&sorted(u, v))
    }

    pub fn has_signed(&self, u: Vertex, v: Vertex, sign: Sign) -> bool {
        match sign {
            Sign::Positive => self.has_positive(u, v),
            Sign::Negative => self.has_negative(u, v),
        }
    }

    pub fn has_loop(&self, v: Vertex) -> bool {
        self.loops.contains(&v)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_positive(u, v) || self.has_negative(u, v)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        match *e {
            Edge::Positive(u, v) => self.has_positive(u, v),
            Edge::Negative(u, v) => self.has_negative(u, v),
            Edge::Loop(v) => self.has_loop(v),
        }
    }

    /// All elements in canonical order: positive pairs, negative pairs, loops.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        out.extend(self.positive.iter().map(|&(u, v)| Edge::Positive(u, v)));
        out.extend(self.negative.iter().map(|&(u, v)| Edge::Negative(u, v)));
        out.extend(self.loops.iter().map(|&v| Edge::Loop(v)));
        out
    }

    pub fn edge_count(&self) -> usize {
        self.positive.len() + self.negative.len() + self.loops.len()
    }

    /// Neighbours of `v` joined by an edge of the given sign.
    pub fn neighbors(&self, v: Vertex, sign: Sign) -> BTreeSet<Vertex> {
        let pairs = match sign {
            Sign::Positive => &self.positive,
            Sign::Negative => &self.negative,
        };
        pairs
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn all_neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut n = self.neighbors(v, Sign::Positive);
        n.extend(self.neighbors(v, Sign::Negative));
        n
    }

    /// Number of incident edges plus one for a loop; a `±` pair counts twice.
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v, Sign::Positive).len()
            + self.neighbors(v, Sign::Negative).len()
            + usize::from(self.has_loop(v))
    }

    pub fn positive_graph(&self) -> SimpleGraph {
        SimpleGraph::from_parts(self.vertices.clone(), self.positive.clone())
    }

    pub fn negative_graph(&self) -> SimpleGraph {
        SimpleGraph::from_parts(self.vertices.clone(), self.negative.clone())
    }

    pub fn is_positive_complete(&self) -> bool {
        let n = self.vertices.len();
        self.positive.len() == n * n.saturating_sub(1) / 2
    }

    /// `E⁻ ⊆ E⁺`.
    pub fn negative_within_positive(&self) -> bool {
        self.negative.is_subset(&self.positive)
    }

    pub fn has_full_loops(&self) -> bool {
        self.loops.len() == self.vertices.len()
    }

    /// `G[W] = (G⁺[W], G⁻[W], W ∩ L)`.
    pub fn induced_subgraph(&self, w: &BTreeSet<Vertex>) -> Result<SignedGraph, GraphError> {
        if let Some(&v) = w.iter().find(|v| !self.vertices.contains(v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        let keep = |&&(a, b): &&(Vertex, Vertex)| w.contains(&a) && w.contains(&b);
        Ok(SignedGraph {
            vertices: w.clone(),
            positive: self.positive.iter().filter(keep).copied().collect(),
            negative: self.negative.iter().filter(keep).copied().collect(),
            loops: self.loops.intersection(w).copied().collect(),
        })
    }

    /// `G ∖ {v}`.
    pub fn remove_vertex(&self, v: Vertex) -> SignedGraph {
        let mut w = self.vertices.clone();
        w.remove(&v);
        self.induced_subgraph(&w).expect("subset of own vertices")
    }

    /// The spanning subgraph on all vertices with exactly the given elements.
    pub fn spanning_subgraph(&self, edges: &BTreeSet<Edge>) -> Result<SignedGraph, GraphError> {
        if let Some(e) = edges.iter().find(|e| !self.contains_edge(e)) {
            return Err(GraphError::MissingEdge(*e));
        }
        SignedGraph::from_edges(self.vertices.iter().copied(), edges.iter().copied())
    }

    /// Union of two graphs that agree on their common vertices.
    pub fn union(&self, other: &SignedGraph) -> Result<SignedGraph, GraphError> {
        let shared: BTreeSet<Vertex> = self.vertices.intersection(&other.vertices).copied().collect();
        if self.induced_subgraph(&shared)? != other.induced_subgraph(&shared)? {
            return Err(GraphError::IncompatibleUnion);
        }
        Ok(SignedGraph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            positive: self.positive.union(&other.positive).copied().collect(),
            negative: self.negative.union(&other.negative).copied().collect(),
            loops: self.loops.union(&other.loops).copied().collect(),
        })
    }

    /// Adds a vertex with the given neighbourhoods.
    pub fn with_vertex(
        &self,
        v: Vertex,
        positive: &BTreeSet<Vertex>,
        negative: &BTreeSet<Vertex>,
        looped: bool,
    ) -> Result<SignedGraph, GraphError> {
        if self.vertices.contains(&v) {
            return Err(GraphError::Precondition(format!("vertex {v} already present")));
        }
        let mut g = self.clone();
        g.vertices.insert(v);
        for &u in positive {
            if !self.vertices.contains(&u) {
                return Err(GraphError::UnknownVertex(u));
            }
            g.positive.insert(sorted(u, v));
        }
        for &u in negative {
            if !self.vertices.contains(&u) {
                return Err(GraphError::UnknownVertex(u));
            }
            g.negative.insert(sorted(u, v));
        }
        if looped {
            g.loops.insert(v);
        }
        Ok(g)
    }

    /// Renames vertices through `map`, which must be injective on the vertex set.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<SignedGraph, GraphError> {
        let f = |v: Vertex| map.get(&v).copied().ok_or(GraphError::UnknownVertex(v));
        let vertices = self.vertices.iter().map(|&v| f(v)).collect::<Result<BTreeSet<_>, _>>()?;
        if vertices.len() != self.vertices.len() {
            return Err(GraphError::Precondition("relabeling is not injective".into()));
        }
        let pos = self.positive.iter().map(|&(a, b)| Ok((f(a)?, f(b)?))).collect::<Result<Vec<_>, GraphError>>()?;
        let neg = self.negative.iter().map(|&(a, b)| Ok((f(a)?, f(b)?))).collect::<Result<Vec<_>, GraphError>>()?;
        let loops = self.loops.iter().map(|&v| f(v)).collect::<Result<Vec<_>, _>>()?;
        SignedGraph::new(vertices, pos, neg, loops)
    }

    /// Replaces the loop set.
    pub fn with_loops(&self, loops: impl IntoIterator<Item = Vertex>) -> Result<SignedGraph, GraphError> {
        SignedGraph::new(
            self.vertices.iter().copied(),
            self.positive.iter().copied(),
            self.negative.iter().copied(),
            loops,
        )
    }

    /// `Gᵛ`: an edge keeps its sign iff its endpoints have equal switching signs.
    pub fn switched(&self, nu: &SwitchingFunction) -> Result<SignedGraph, GraphError> {
        if nu.signs.len() != self.vertices.len() || self.vertices.iter().any(|v| !nu.signs.contains_key(v)) {
            return Err(GraphError::SwitchingDomain);
        }
        let same = |a: Vertex, b: Vertex| nu.signs[&a] == nu.signs[&b];
        let mut positive = BTreeSet::new();
        let mut negative = BTreeSet::new();
        for &(a, b) in &self.positive {
            if same(a, b) {
                positive.insert((a, b));
            } else {
                negative.insert((a, b));
            }
        }
        for &(a, b) in &self.negative {
            if same(a, b) {
                negative.insert((a, b));
            } else {
                positive.insert((a, b));
            }
        }
        Ok(SignedGraph { vertices: self.vertices.clone(), positive, negative, loops: self.loops.clone() })
    }

    /// `G/(v, w)`: deletes `from`, reattaching its edges to `to`.
    ///
    /// For a negative edge the reattached edges change sign. `to` receives a
    /// loop when `from` had one, or when the pair also carries an edge of the
    /// opposite sign.
    pub fn contract(&self, e: DirectedEdge) -> Result<SignedGraph, GraphError> {
        let DirectedEdge { from: v, to: w, sign } = e;
        if v == w {
            return Err(GraphError::SelfPair(v));
        }
        if !self.has_signed(v, w, sign) {
            return Err(GraphError::MissingEdge(e.edge()));
        }
        let mut out = self.remove_vertex(v);
        for old in [Sign::Positive, Sign::Negative] {
            let new = old.times(sign);
            for u in self.neighbors(v, old) {
                if u == w {
                    continue;
                }
                match new {
                    Sign::Positive => out.positive.insert(sorted(u, w)),
                    Sign::Negative => out.negative.insert(sorted(u, w)),
                };
            }
        }
        if self.has_loop(v) || self.has_signed(v, w, sign.flip()) {
            out.loops.insert(w);
        }
        Ok(out)
    }

    /// Connected components with balance flags, ordered by smallest vertex.
    ///
    /// Balance is decided by propagating switching signs along a BFS: a
    /// component is unbalanced iff it has a loop or a sign conflict (a `±`
    /// pair is always a conflict).
    pub fn balanced_components(&self) -> Vec<Component> {
        let mut label: BTreeMap<Vertex, Sign> = BTreeMap::new();
        let mut adjacency: BTreeMap<Vertex, Vec<(Vertex, Sign)>> = BTreeMap::new();
        for &(a, b) in &self.positive {
            adjacency.entry(a).or_default().push((b, Sign::Positive));
            adjacency.entry(b).or_default().push((a, Sign::Positive));
        }
        for &(a, b) in &self.negative {
            adjacency.entry(a).or_default().push((b, Sign::Negative));
            adjacency.entry(b).or_default().push((a, Sign::Negative));
        }
        let mut out = Vec::new();
        for &root in &self.vertices {
            if label.contains_key(&root) {
                continue;
            }
            let mut balanced = true;
            let mut members = vec![root];
            label.insert(root, Sign::Positive);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if self.loops.contains(&u) {
                    balanced = false;
                }
                let su = label[&u];
                for &(x, s) in adjacency.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
                    let want = su.times(s);
                    match label.get(&x) {
                        Some(&have) => {
                            if have != want {
                                balanced = false;
                            }
                        }
                        None => {
                            label.insert(x, want);
                            members.push(x);
                            queue.push_back(x);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(Component { vertices: members, balanced });
        }
        out
    }

    /// `|V| − b(G)` where `b` counts balanced components.
    pub fn rank(&self) -> usize {
        let balanced = self.balanced_components().iter().filter(|c| c.balanced).count();
        self.vertices.len() - balanced
    }

    /// Validates `cycle` against the graph and reports its balance.
    pub fn cycle_balance(&self, cycle: &SignedCycle) -> Result<Balance, GraphError> {
        let k = cycle.vertices.len();
        let bad = |msg: &str| Err(GraphError::InvalidCycle(msg.to_string()));
        match k {
            0 => bad("empty cycle"),
            1 => {
                let v = cycle.vertices[0];
                if !cycle.signs.is_empty() {
                    return bad("a 1-cycle carries no edge signs");
                }
                if !self.has_loop(v) {
                    return bad("1-cycle requires a loop");
                }
                Ok(Balance::Unbalanced)
            }
            2 => {
                let (u, v) = (cycle.vertices[0], cycle.vertices[1]);
                let mut s = cycle.signs.clone();
                s.sort();
                if u == v || s != [Sign::Positive, Sign::Negative] {
                    return bad("a 2-cycle uses one positive and one negative edge");
                }
                if !(self.has_positive(u, v) && self.has_negative(u, v)) {
                    return bad("2-cycle requires both signs on the pair");
                }
                Ok(Balance::Unbalanced)
            }
            _ => {
                if cycle.signs.len() != k {
                    return bad("one sign per edge required");
                }
                let distinct: BTreeSet<_> = cycle.vertices.iter().collect();
                if distinct.len() != k {
                    return bad("repeated vertex");
                }
                for i in 0..k {
                    let (a, b) = (cycle.vertices[i], cycle.vertices[(i + 1) % k]);
                    if !self.has_signed(a, b, cycle.signs[i]) {
                        return Err(GraphError::MissingEdge(Edge::signed(a, b, cycle.signs[i])));
                    }
                }
                if cycle.negative_count().is_multiple_of(2) {
                    Ok(Balance::Balanced)
                } else {
                    Ok(Balance::Unbalanced)
                }
            }
        }
    }

    /// Bit-matrix view with vertices indexed in sorted order.
    ///
    /// Panics when the graph has more than 64 vertices.
    pub(crate) fn dense(&self) -> Dense {
        assert!(self.vertices.len() <= 64, "{}", GraphError::TooLarge(self.vertices.len()));
        let ids: Vec<Vertex> = self.vertices.iter().copied().collect();
        let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let mut pos = vec![0u64; n];
        let mut neg = vec![0u64; n];
        for &(a, b) in &self.positive {
            let (i, j) = (index[&a], index[&b]);
            pos[i] |= 1 << j;
            pos[j] |= 1 << i;
        }
        for &(a, b) in &self.negative {
            let (i, j) = (index[&a], index[&b]);
            neg[i] |= 1 << j;
            neg[j] |= 1 << i;
        }
        let loops = self.loops.iter().fold(0u64, |m, v| m | 1 << index[v]);
        Dense { ids, pos, neg, loops }
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::to_canonical_json(self))
    }
}

/// Adjacency bitmasks over vertex indices `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub pos: Vec<u64>,
    pub neg: Vec<u64>,
    pub loops: u64,
}

impl Dense {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn has(&self, i: usize, j: usize, sign: Sign) -> bool {
        let row = match sign {
            Sign::Positive => self.pos[i],
            Sign::Negative => self.neg[i],
        };
        row >> j & 1 == 1
    }
}
