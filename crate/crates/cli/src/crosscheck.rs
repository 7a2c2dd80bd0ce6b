//! Exhaustive and sampled comparisons of the structural procedures with the
//! arrangement oracle.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use sga_core::decide::{er_decide, main_theorem_decide, zaslavsky_ss_decide};
use sga_core::gen::{self, GraphClass, LoopPolicy};
use sga_core::oracle::{characteristic_polynomial, freeness_decide, is_supersolvable_lattice, realize};
use sga_core::poly::chromatic_polynomial;
use sga_core::signed::{balanced_chordal_by_switching, balanced_cycle_witness};
use sga_core::{decide_with, DecideOptions, SignedGraph, Ternary};

/// Largest graphs enumerated exhaustively; larger ones are sampled.
const EXHAUSTIVE_VERTICES: u32 = 4;
const ORACLE_VERTICES: u32 = 5;
const SAMPLED_VERTICES: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Balanced chordality vs oracle freeness for `E⁻ ⊆ E⁺` with every loop.
    MainTheorem,
    /// Chromatic polynomial vs characteristic polynomial of the lattice.
    Chromatic,
    /// Threshold criterion vs oracle freeness for complete `G⁺`.
    Er,
    /// Structural supersolvability vs the lattice search, `E⁻ ⊆ E⁺`.
    Supersolvable,
    /// Path search vs the switching characterization of balanced chordality.
    BalancedChordal,
    /// Full dispatch with verification on general graphs.
    Dispatch,
}

impl Mode {
    fn class(self) -> GraphClass {
        match self {
            Mode::MainTheorem | Mode::Supersolvable => GraphClass::NegativeWithinPositive,
            Mode::Er => GraphClass::CompletePositive,
            Mode::Chromatic | Mode::BalancedChordal | Mode::Dispatch => GraphClass::General,
        }
    }

    pub fn default_loops(self) -> LoopPolicy {
        match self {
            Mode::MainTheorem => LoopPolicy::Full,
            Mode::BalancedChordal => LoopPolicy::None,
            _ => LoopPolicy::Random,
        }
    }

    fn max_vertices(self) -> u32 {
        match self {
            Mode::BalancedChordal => SAMPLED_VERTICES,
            _ => ORACLE_VERTICES,
        }
    }

    /// `Some(description)` when the procedures disagree on `g`.
    fn disagreement(self, g: &SignedGraph) -> Option<String> {
        let oracle_free = || freeness_decide(&realize(g)).map(|r| Ternary::from(r.is_free()));
        match self {
            Mode::MainTheorem => {
                let theorem = main_theorem_decide(g).map(|v| v.free);
                match (theorem, oracle_free()) {
                    (Ok(t), Ok(o)) if t == o => None,
                    (t, o) => Some(format!("theorem {t:?}, oracle {o:?}")),
                }
            }
            Mode::Chromatic => {
                let chi = chromatic_polynomial(g);
                match characteristic_polynomial(&realize(g)) {
                    Ok(p) if p == chi => None,
                    other => Some(format!("chromatic {chi}, characteristic {other:?}")),
                }
            }
            Mode::Er => match (er_decide(g).map(|v| v.free), oracle_free()) {
                (Ok(t), Ok(o)) if t == o => None,
                (t, o) => Some(format!("theorem {t:?}, oracle {o:?}")),
            },
            Mode::Supersolvable => {
                let t = zaslavsky_ss_decide(g).supersolvable;
                match is_supersolvable_lattice(&realize(g)) {
                    Ok(r) if Ternary::from(r.supersolvable) == t => None,
                    other => Some(format!("structure {t:?}, lattice {other:?}")),
                }
            }
            Mode::BalancedChordal => {
                let search = balanced_cycle_witness(g);
                let switching = balanced_chordal_by_switching(g);
                if search.is_none() != switching || search.as_ref().is_some_and(|w| !w.verify(g)) {
                    Some(format!("path search {}, switching {switching}", search.is_none()))
                } else {
                    None
                }
            }
            Mode::Dispatch => {
                let opts = DecideOptions { verify: true, ..DecideOptions::default() };
                match decide_with(g, &opts) {
                    Ok(v) if v.respects_implications() => None,
                    Ok(v) => Some(format!("implication chain broken: {v:?}")),
                    Err(e) => Some(e.to_string()),
                }
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub vertices: u32,
    pub coverage: &'static str,
    pub instances: usize,
    pub disagreements: usize,
}

#[derive(Debug, Serialize)]
pub struct Failure {
    pub graph: SignedGraph,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub mode: Mode,
    pub rows: Vec<Row>,
    pub disagreements: usize,
    /// Up to ten disagreements, smallest first.
    pub failures: Vec<Failure>,
    pub minimal_failure: Option<SignedGraph>,
}

fn size_key(g: &SignedGraph) -> (usize, usize, String) {
    (g.vertex_count(), g.edge_count(), g.to_string())
}

pub fn run(mode: Mode, max_vertices: u32, samples: usize, loops: LoopPolicy, seed: u64) -> Result<Report, String> {
    if max_vertices == 0 || max_vertices > mode.max_vertices() {
        return Err(format!("max vertices for this mode must be between 1 and {}", mode.max_vertices()));
    }
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let mut r = gen::rng(seed);
    for n in 1..=max_vertices {
        let (graphs, coverage): (Vec<SignedGraph>, _) = if n <= EXHAUSTIVE_VERTICES {
            (gen::enumerate(n, mode.class(), loops).collect(), "exhaustive")
        } else {
            ((0..samples).map(|_| gen::random_graph(&mut r, n, mode.class(), loops)).collect(), "sampled")
        };
        let mut found: Vec<Failure> = graphs
            .par_iter()
            .filter_map(|g| mode.disagreement(g).map(|detail| Failure { graph: g.clone(), detail }))
            .collect();
        found.sort_by_key(|f| size_key(&f.graph));
        rows.push(Row { vertices: n, coverage, instances: graphs.len(), disagreements: found.len() });
        failures.extend(found);
    }
    failures.sort_by_key(|f| size_key(&f.graph));
    let disagreements = failures.len();
    let minimal_failure = failures.first().map(|f| f.graph.clone());
    failures.truncate(10);
    Ok(Report { mode, rows, disagreements, failures, minimal_failure })
}
