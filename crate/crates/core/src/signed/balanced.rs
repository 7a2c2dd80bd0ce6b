use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Balance, Edge, Sign, SignedCycle, SignedGraph, SwitchingFunction, Vertex};

/// A chord of a witness cycle together with the negative-edge counts of the
/// two cycles it splits the witness into; both are odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordCheck {
    pub edge: Edge,
    pub negatives: [usize; 2],
}

/// A balanced cycle of length at least four without a balanced chord.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancedCycleWitness {
    pub cycle: SignedCycle,
    pub length: usize,
    pub checked_chords: Vec<ChordCheck>,
}

impl BalancedCycleWitness {
    fn new(g: &SignedGraph, cycle: SignedCycle) -> Self {
        let length = cycle.len();
        let checked_chords = chords(g, &cycle);
        BalancedCycleWitness { cycle, length, checked_chords }
    }

    /// Rechecks the witness against `g` from scratch.
    pub fn verify(&self, g: &SignedGraph) -> bool {
        if self.length < 4 || self.length != self.cycle.len() {
            return false;
        }
        if g.cycle_balance(&self.cycle) != Ok(Balance::Balanced) {
            return false;
        }
        let expected = chords(g, &self.cycle);
        expected == self.checked_chords && expected.iter().all(|c| c.negatives.iter().all(|n| n % 2 == 1))
    }
}

/// Every signed edge joining two non-consecutive vertices of `cycle`, with
/// the negative counts of the two sub-cycles it closes.
fn chords(g: &SignedGraph, cycle: &SignedCycle) -> Vec<ChordCheck> {
    let k = cycle.len();
    let total = cycle.negative_count();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            let segment = cycle.signs[i..j].iter().filter(|s| s.is_negative()).count();
            for sign in [Sign::Positive, Sign::Negative] {
                if g.has_signed(cycle.vertices[i], cycle.vertices[j], sign) {
                    let c = usize::from(sign.is_negative());
                    out.push(ChordCheck {
                        edge: Edge::signed(cycle.vertices[i], cycle.vertices[j], sign),
                        negatives: [segment + c, total - segment + c],
                    });
                }
            }
        }
    }
    out
}

pub fn is_balanced_chordal(g: &SignedGraph) -> bool {
    balanced_cycle_witness(g).is_none()
}

/// Searches for a balanced cycle of length at least four with no balanced
/// chord.
///
/// Paths are grown from their smallest vertex with every available sign on
/// each step. A path is abandoned as soon as two of its non-consecutive
/// vertices are joined by an edge whose sign matches the parity of the path
/// segment between them, since that edge is a balanced chord of every cycle
/// the path could close into.
pub fn balanced_cycle_witness(g: &SignedGraph) -> Option<BalancedCycleWitness> {
    let d = g.dense();
    let n = d.len();
    let parity_edge = |i: usize, j: usize, parity: bool| {
        let sign = if parity { Sign::Negative } else { Sign::Positive };
        d.has(i, j, sign)
    };
    for start in 0..n {
        let mut path = vec![start];
        let mut signs: Vec<Sign> = Vec::new();
        let mut parity = vec![false];
        // Stack of candidate (vertex, sign) extensions per depth.
        let mut stack: Vec<Vec<(usize, Sign)>> = vec![extensions(&d, start, start, &path)];
        while let Some(options) = stack.last_mut() {
            let Some((x, s)) = options.pop() else {
                stack.pop();
                if path.len() > 1 {
                    path.pop();
                    signs.pop();
                    parity.pop();
                }
                continue;
            };
            let j = path.len();
            let px = parity[j - 1] ^ s.is_negative();
            let blocked = (1..j - 1).any(|i| parity_edge(path[i], x, px ^ parity[i]));
            if blocked {
                continue;
            }
            if j >= 2 && parity_edge(start, x, px) {
                if j >= 3 {
                    let mut cyc_signs = signs.clone();
                    cyc_signs.push(s);
                    cyc_signs.push(if px { Sign::Negative } else { Sign::Positive });
                    let mut vertices: Vec<Vertex> = path.iter().map(|&i| d.ids[i]).collect();
                    vertices.push(d.ids[x]);
                    return Some(BalancedCycleWitness::new(g, SignedCycle::new(vertices, cyc_signs)));
                }
                continue;
            }
            path.push(x);
            signs.push(s);
            parity.push(px);
            stack.push(extensions(&d, start, x, &path));
        }
    }
    None
}

fn extensions(d: &crate::graph::Dense, start: usize, from: usize, path: &[usize]) -> Vec<(usize, Sign)> {
    let mut out = Vec::new();
    for y in (start + 1..d.len()).rev() {
        if path.contains(&y) {
            continue;
        }
        for sign in [Sign::Negative, Sign::Positive] {
            if d.has(from, y, sign) {
                out.push((y, sign));
            }
        }
    }
    out
}

/// Balanced chordality decided through switchings: `G` is balanced chordal
/// iff `(G^ν)⁺` is chordal for every switching `ν`.
pub fn balanced_chordal_by_switching(g: &SignedGraph) -> bool {
    let vs: Vec<Vertex> = g.vertices().collect();
    let Some((_, rest)) = vs.split_first() else { return true };
    assert!(rest.len() < 24, "switching enumeration limited to 24 vertices");
    (0u32..1 << rest.len()).all(|mask| {
        let negated: BTreeSet<Vertex> =
            rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let switched = g.switched(&SwitchingFunction::negating(g, &negated)).expect("total switching");
        switched.positive_graph().is_chordal()
    })
}
