//! Graph families, exhaustive enumerators and seeded random generators.

use std::collections::BTreeSet;

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chordal::SimpleGraph;
use crate::graph::{SignedGraph, Vertex};

/// Deterministic generator used by every seeded routine.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `B_n`: both signs on every pair and a loop at every vertex.
pub fn complete_signed(vertices: impl IntoIterator<Item = Vertex>) -> SignedGraph {
    let vs: Vec<Vertex> = vertices.into_iter().collect();
    let pairs = all_pairs(&vs);
    SignedGraph::new(vs.iter().copied(), pairs.iter().copied(), pairs.iter().copied(), vs.iter().copied())
        .expect("pairs are built from the vertex list")
}

/// `(K_n, ∅, ∅)` on `1..=n`.
pub fn complete_positive(n: u32) -> SignedGraph {
    let vs: Vec<Vertex> = (1..=n).collect();
    SignedGraph::new(vs.iter().copied(), all_pairs(&vs), [], []).expect("valid")
}

/// The loopless graph on `{1,2,3}` with both signs on every pair.
pub fn d3() -> SignedGraph {
    complete_signed(1..=3).with_loops([]).expect("valid")
}

pub fn all_pairs(vs: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            out.push(if a < b { (a, b) } else { (b, a) });
        }
    }
    out
}

/// Builds a graph on `1..=n` from one code per vertex pair (in lexicographic
/// order): bit 0 adds the positive edge, bit 1 the negative edge.
pub fn from_codes(n: u32, kinds: &[u8], loops: &[bool]) -> SignedGraph {
    let vs: Vec<Vertex> = (1..=n).collect();
    let pairs = all_pairs(&vs);
    let pos = pairs.iter().zip(kinds).filter(|(_, &k)| k & 1 == 1).map(|(&p, _)| p);
    let neg = pairs.iter().zip(kinds).filter(|(_, &k)| k & 2 == 2).map(|(&p, _)| p);
    let lp = vs.iter().zip(loops).filter(|(_, &l)| l).map(|(&v, _)| v);
    SignedGraph::new(vs.iter().copied(), pos, neg, lp).expect("codes describe a valid graph")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    /// Every pair independently absent, `+`, `−` or `±`.
    General,
    /// `E⁻ ⊆ E⁺`: every pair absent, `+` or `±`.
    NegativeWithinPositive,
    /// `G⁺ = K_n`: every pair `+` or `±`.
    CompletePositive,
}

impl GraphClass {
    fn codes(self) -> &'static [u8] {
        match self {
            GraphClass::General => &[0, 1, 2, 3],
            GraphClass::NegativeWithinPositive => &[0, 1, 3],
            GraphClass::CompletePositive => &[1, 3],
        }
    }

    pub fn contains(self, g: &SignedGraph) -> bool {
        match self {
            GraphClass::General => true,
            GraphClass::NegativeWithinPositive => g.negative_within_positive(),
            GraphClass::CompletePositive => g.is_positive_complete(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LoopPolicy {
    Full,
    None,
    /// Each vertex looped independently with probability ½; every subset when enumerating.
    Random,
}

/// Every graph on `1..=n` in `class` with loops chosen by `loops`.
pub fn enumerate(n: u32, class: GraphClass, loops: LoopPolicy) -> impl Iterator<Item = SignedGraph> {
    let pairs = (n * n.saturating_sub(1) / 2) as usize;
    let codes = class.codes();
    let edge_configs = codes.len().pow(pairs as u32);
    let loop_configs: Vec<Vec<bool>> = match loops {
        LoopPolicy::Full => vec![vec![true; n as usize]],
        LoopPolicy::None => vec![vec![false; n as usize]],
        LoopPolicy::Random => (0..1u32 << n).map(|m| (0..n).map(|i| m >> i & 1 == 1).collect()).collect(),
    };
    (0..edge_configs).flat_map(move |mut idx| {
        let kinds: Vec<u8> = (0..pairs)
            .map(|_| {
                let k = codes[idx % codes.len()];
                idx /= codes.len();
                k
            })
            .collect();
        loop_configs.clone().into_iter().map(move |l| from_codes(n, &kinds, &l))
    })
}

/// A uniformly random member of `class` on `1..=n`.
pub fn random_graph<R: Rng>(rng: &mut R, n: u32, class: GraphClass, loops: LoopPolicy) -> SignedGraph {
    let pairs = (n * n.saturating_sub(1) / 2) as usize;
    let codes = class.codes();
    let kinds: Vec<u8> = (0..pairs).map(|_| codes[rng.random_range(0..codes.len())]).collect();
    let l: Vec<bool> = (0..n)
        .map(|_| match loops {
            LoopPolicy::Full => true,
            LoopPolicy::None => false,
            LoopPolicy::Random => rng.random_bool(0.5),
        })
        .collect();
    from_codes(n, &kinds, &l)
}

/// A random connected chordal graph on `1..=n`: each new vertex is joined to
/// a random non-empty subset of a random maximal clique built so far.
pub fn random_chordal<R: Rng>(rng: &mut R, n: u32) -> SimpleGraph {
    let mut cliques: Vec<BTreeSet<Vertex>> = vec![BTreeSet::from([1])];
    let mut edges = BTreeSet::new();
    for v in 2..=n {
        let host = cliques[rng.random_range(0..cliques.len())].clone();
        let size = rng.random_range(1..=host.len());
        let attach: BTreeSet<Vertex> = host.iter().copied().choose_multiple(rng, size).into_iter().collect();
        for &u in &attach {
            edges.insert((u, v));
        }
        let mut new_clique = attach.clone();
        new_clique.insert(v);
        if attach == host {
            cliques.retain(|c| *c != host);
        }
        cliques.push(new_clique);
    }
    SimpleGraph::new(1..=n, edges).expect("edges join existing vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate(3, GraphClass::General, LoopPolicy::Random).count(), 64 * 8);
        assert_eq!(enumerate(4, GraphClass::NegativeWithinPositive, LoopPolicy::Full).count(), 729);
        assert_eq!(enumerate(4, GraphClass::CompletePositive, LoopPolicy::Random).count(), 64 * 16);
        assert_eq!(enumerate(1, GraphClass::General, LoopPolicy::Random).count(), 2);
        let all: BTreeSet<String> =
            enumerate(3, GraphClass::General, LoopPolicy::Random).map(|g| g.to_string()).collect();
        assert_eq!(all.len(), 512);
    }

    #[test]
    fn random_is_deterministic_and_in_class() {
        for class in [GraphClass::General, GraphClass::NegativeWithinPositive, GraphClass::CompletePositive] {
            let a = random_graph(&mut rng(7), 5, class, LoopPolicy::Random);
            let b = random_graph(&mut rng(7), 5, class, LoopPolicy::Random);
            assert_eq!(a, b);
            let mut r = rng(1);
            for _ in 0..200 {
                assert!(class.contains(&random_graph(&mut r, 5, class, LoopPolicy::Full)));
            }
        }
    }

    #[test]
    fn random_chordal_is_chordal_and_connected() {
        let mut r = rng(3);
        for n in 1..=10 {
            let g = random_chordal(&mut r, n);
            assert!(g.is_chordal());
            assert_eq!(g.components().len(), 1);
        }
    }

    #[test]
    fn named_graphs() {
        assert_eq!(complete_signed(1..=3).edge_count(), 9);
        assert_eq!(d3().loops().len(), 0);
        assert!(complete_positive(4).is_positive_complete());
    }
}
