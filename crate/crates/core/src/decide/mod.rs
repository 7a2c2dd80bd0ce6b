//! Freeness and supersolvability verdicts derived from structural theorems,
//! each with the certificate that justifies it.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::{degree_orderings_initial_segment, is_threshold, ThresholdCertificate};
use crate::error::OracleError;
use crate::gen;
use crate::graph::{DirectedEdge, Sign, SignedCycle, SignedGraph, SwitchingFunction, Vertex};
use crate::oracle::{self, FreenessResult, OracleLimits};
use crate::signed::{
    balanced_cycle_witness, directed_edges, divisional_edge, find_frame_circuits, is_balanced_chordal,
    is_flat_subgraph, peel_simplicial_extension, BalancedCycleWitness, FrameCircuit, FrameCircuitKind, Peel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ternary {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Ternary {
    fn from(b: bool) -> Self {
        if b {
            Ternary::Yes
        } else {
            Ternary::No
        }
    }
}

/// Which argument settled the freeness verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    MainTheorem,
    EdelmanReiner,
    #[serde(rename = "ZaslavskySS")]
    ZaslavskySs,
    FrameCircuitWitness,
    SimplicialPeel,
    OracleFallback,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SupersolvableCertificate {
    EliminationOrdering {
        ordering: Vec<Vertex>,
    },
    /// The graph extends a base with one part per connected component by
    /// adding `extension` in order.
    Extension {
        base: Vec<BasePart>,
        extension: Vec<Vertex>,
    },
}

/// One connected component of the base of a supersolvable graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasePart {
    /// A copy of `D₃` up to switching.
    D3 { vertices: Vec<Vertex> },
    /// A loopless graph whose negative edges all meet `center` after
    /// switching the vertices in `switched`, with `N⁻(center)` a clique of
    /// the chordal `F⁺`.
    NegativeStar {
        center: Vertex,
        vertices: Vec<Vertex>,
        switched: Vec<Vertex>,
        perfect_elimination_ordering: Vec<Vertex>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Threshold test of `G⁻` and initial-segment test of `L` on the base
    /// left after removing `peeled`.
    EdelmanReiner {
        peeled: Vec<Vertex>,
        threshold: ThresholdCertificate,
        loops_initial_segment: bool,
    },
    /// Balanced chordality with `E⁻ ⊆ E⁺` and every loop present; the chain,
    /// when given, contracts divisional edges down to a complete `G⁺`.
    BalancedChordal {
        peeled: Vec<Vertex>,
        contraction_chain: Option<Vec<DirectedEdge>>,
    },
    NotBalancedChordal {
        witness: BalancedCycleWitness,
    },
    SimplicialPeel {
        ordering: Vec<Vertex>,
    },
    Supersolvable {
        certificate: SupersolvableCertificate,
    },
    /// A frame circuit with at least four elements whose edge set is closed.
    FrameCircuitFlat {
        circuit: FrameCircuit,
    },
    Oracle {
        result: FreenessResult,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub balanced_chordal: bool,
    pub witness: Option<BalancedCycleWitness>,
    pub supersolvable: Ternary,
    pub supersolvable_certificate: Option<SupersolvableCertificate>,
    pub free: Ternary,
    pub provenance: Provenance,
    pub certificate: Option<Certificate>,
    pub cross_checked: bool,
}

impl Verdict {
    /// Signed elimination ordering ⇒ supersolvable ⇒ free ⇒ balanced chordal.
    pub fn respects_implications(&self) -> bool {
        let seo = matches!(self.supersolvable_certificate, Some(SupersolvableCertificate::EliminationOrdering { .. }));
        !(seo && self.supersolvable != Ternary::Yes)
            && !(self.supersolvable == Ternary::Yes && self.free == Ternary::No)
            && !(self.free == Ternary::Yes && !self.balanced_chordal)
    }
}

#[derive(Debug, Error)]
pub enum DecideError {
    #[error("hypothesis not satisfied: {0}")]
    NotApplicable(&'static str),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{property}: theorem says {theorem:?}, oracle says {oracle:?}")]
    Disagreement { property: &'static str, theorem: Ternary, oracle: Ternary },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideOptions {
    /// Run the arrangement oracle when no theorem applies and the instance
    /// is within `limits`.
    pub oracle_fallback: bool,
    /// Compare every verdict with the oracle when within `limits`.
    pub verify: bool,
    pub limits: OracleLimits,
    /// Largest frame circuit searched for a non-free certificate.
    pub circuit_edges: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { oracle_fallback: true, verify: false, limits: OracleLimits::default(), circuit_edges: 8 }
    }
}

/// Structure shared by every procedure.
struct Facts {
    witness: Option<BalancedCycleWitness>,
    peel: Peel,
    supersolvable: Option<SupersolvableCertificate>,
}

impl Facts {
    fn of(g: &SignedGraph) -> Facts {
        let peel = peel_simplicial_extension(g);
        let supersolvable = supersolvable_certificate(&peel);
        Facts { witness: balanced_cycle_witness(g), peel, supersolvable }
    }

    fn verdict(&self, free: Ternary, provenance: Provenance, certificate: Option<Certificate>) -> Verdict {
        Verdict {
            balanced_chordal: self.witness.is_none(),
            witness: self.witness.clone(),
            supersolvable: self.supersolvable.is_some().into(),
            supersolvable_certificate: self.supersolvable.clone(),
            free,
            provenance,
            certificate,
            cross_checked: false,
        }
    }
}

/// Supersolvability by the structure of the simplicial-extension base: it
/// is empty, or each of its components is `D₃` or a negative star over a
/// chordal `F⁺`.
fn supersolvable_certificate(peel: &Peel) -> Option<SupersolvableCertificate> {
    let extension = peel.extension_order();
    if peel.base.vertex_count() == 0 {
        return Some(SupersolvableCertificate::EliminationOrdering { ordering: extension });
    }
    let base = peel
        .base
        .balanced_components()
        .into_iter()
        .map(|c| {
            let vertices: BTreeSet<Vertex> = c.vertices.into_iter().collect();
            let part = peel.base.induced_subgraph(&vertices).expect("component of the base");
            let vertices: Vec<Vertex> = vertices.into_iter().collect();
            if is_d3(&part) {
                return Some(BasePart::D3 { vertices });
            }
            negative_star(&part).map(|star| BasePart::NegativeStar {
                center: star.center,
                vertices,
                switched: star.switched,
                perfect_elimination_ordering: star.peo,
            })
        })
        .collect::<Option<Vec<_>>>()?;
    Some(SupersolvableCertificate::Extension { base, extension })
}

/// Whether `g` is `D₃` up to relabelling and switching.
pub fn is_d3(g: &SignedGraph) -> bool {
    if g.vertex_count() != 3 {
        return false;
    }
    let map: BTreeMap<Vertex, Vertex> = g.vertices().zip(1..).collect();
    let relabelled = g.relabel(&map).expect("bijective relabelling");
    let target = gen::d3();
    (0u8..8).any(|mask| {
        let negated: BTreeSet<Vertex> = (1..=3).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        relabelled.switched(&SwitchingFunction::negating(&relabelled, &negated)).expect("total") == target
    })
}

/// Up to switching, a loopless graph whose negative edges all meet one
/// vertex `v`, with `N⁻(v)` a clique of `F⁺` and `F⁺` chordal.
///
/// Such a switching makes `F ∖ {v}` all positive, so it is fixed by a
/// balancing labelling of each component of `F ∖ {v}` up to one sign per
/// component.
fn negative_star(f: &SignedGraph) -> Option<NegativeStar> {
    if !f.loops().is_empty() || f.negative_pairs().is_empty() {
        return None;
    }
    for v in f.vertices() {
        let rest = f.remove_vertex(v);
        let Some(labels) = balancing_labels(&rest) else { continue };
        let roots: Vec<Vertex> = rest.balanced_components().iter().map(|c| c.vertices[0]).collect();
        let component_of: BTreeMap<Vertex, usize> = rest
            .balanced_components()
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.vertices.iter().map(move |&u| (u, i)))
            .collect();
        if roots.len() > MAX_STAR_COMPONENTS {
            continue;
        }
        for mask in 0u32..1 << roots.len() {
            let negated: BTreeSet<Vertex> =
                rest.vertices().filter(|u| labels[u].is_negative() != (mask >> component_of[u] & 1 == 1)).collect();
            let s = f.switched(&SwitchingFunction::negating(f, &negated)).expect("total");
            if s.negative_pairs().iter().any(|&(x, y)| x != v && y != v) {
                continue;
            }
            let pos = s.positive_graph();
            if !pos.is_clique(&s.neighbors(v, Sign::Negative)) {
                continue;
            }
            if let Some(peo) = pos.perfect_elimination_ordering() {
                return Some(NegativeStar { center: v, switched: negated.into_iter().collect(), peo });
            }
        }
    }
    None
}

/// Most components of `F ∖ {v}` whose sign choices are enumerated.
const MAX_STAR_COMPONENTS: usize = 16;

struct NegativeStar {
    center: Vertex,
    switched: Vec<Vertex>,
    peo: Vec<Vertex>,
}

/// A switching making a loopless graph all positive, if it is balanced.
fn balancing_labels(g: &SignedGraph) -> Option<BTreeMap<Vertex, Sign>> {
    if !g.loops().is_empty() || !g.balanced_components().iter().all(|c| c.balanced) {
        return None;
    }
    let mut labels = BTreeMap::new();
    for root in g.vertices() {
        if labels.contains_key(&root) {
            continue;
        }
        labels.insert(root, Sign::Positive);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for sign in [Sign::Positive, Sign::Negative] {
                for w in g.neighbors(u, sign) {
                    if !labels.contains_key(&w) {
                        let label = labels[&u].times(sign);
                        labels.insert(w, label);
                        stack.push(w);
                    }
                }
            }
        }
    }
    Some(labels)
}

/// Supersolvability verdict; freeness follows when supersolvable.
pub fn zaslavsky_ss_decide(g: &SignedGraph) -> Verdict {
    let facts = Facts::of(g);
    match &facts.supersolvable {
        Some(c) => {
            let cert = Certificate::Supersolvable { certificate: c.clone() };
            facts.verdict(Ternary::Yes, Provenance::ZaslavskySs, Some(cert))
        }
        None => facts.verdict(Ternary::Unknown, Provenance::Unknown, None),
    }
}

fn er_certificate(g: &SignedGraph, peeled: Vec<Vertex>) -> (bool, Certificate) {
    let threshold = is_threshold(&g.negative_graph());
    let loops_initial_segment =
        threshold.is_threshold() && degree_orderings_initial_segment(&g.negative_graph(), g.loops());
    let free = threshold.is_threshold() && loops_initial_segment;
    (free, Certificate::EdelmanReiner { peeled, threshold, loops_initial_segment })
}

/// Freeness when `G⁺` is complete: `G⁻` threshold and `L` an initial segment
/// of a degree ordering of `G⁻`.
pub fn er_decide(g: &SignedGraph) -> Result<Verdict, DecideError> {
    if !g.is_positive_complete() {
        return Err(DecideError::NotApplicable("G⁺ is not complete"));
    }
    let (free, cert) = er_certificate(g, vec![]);
    Ok(Facts::of(g).verdict(free.into(), Provenance::EdelmanReiner, Some(cert)))
}

fn main_theorem_on(facts: &Facts, base: &SignedGraph, peeled: Vec<Vertex>) -> Verdict {
    match &facts.witness {
        Some(w) => {
            let cert = Certificate::NotBalancedChordal { witness: w.clone() };
            facts.verdict(Ternary::No, Provenance::MainTheorem, Some(cert))
        }
        None if base.has_full_loops() => {
            let cert = Certificate::BalancedChordal { peeled, contraction_chain: None };
            facts.verdict(Ternary::Yes, Provenance::MainTheorem, Some(cert))
        }
        None => facts.verdict(Ternary::Unknown, Provenance::Unknown, None),
    }
}

/// Freeness under `E⁻ ⊆ E⁺`: with every loop present it is equivalent to
/// balanced chordality; with fewer loops only a missing balanced chord
/// decides (non-free).
pub fn main_theorem_decide(g: &SignedGraph) -> Result<Verdict, DecideError> {
    if !g.negative_within_positive() {
        return Err(DecideError::NotApplicable("E⁻ is not contained in E⁺"));
    }
    Ok(main_theorem_on(&Facts::of(g), g, vec![]))
}

fn cycle_circuit(cycle: &SignedCycle) -> FrameCircuit {
    let mut edges = cycle.edges();
    edges.sort();
    FrameCircuit { kind: FrameCircuitKind::BalancedCycle, edges }
}

/// A closed frame circuit with at least four elements, trying a chordless
/// cycle of `G⁺`, then a balanced cycle without balanced chord, then
/// handcuffs of at most `max_edges` elements.
pub fn frame_circuit_flat(g: &SignedGraph, max_edges: usize) -> Option<FrameCircuit> {
    let closed = |c: &FrameCircuit| is_flat_subgraph(g, &c.edge_set()).expect("circuit edges belong to g");
    if let Some(cycle) = g.positive_graph().chordless_cycle() {
        let signs = vec![Sign::Positive; cycle.len()];
        let c = cycle_circuit(&SignedCycle::new(cycle, signs));
        if closed(&c) {
            return Some(c);
        }
    }
    if let Some(w) = balanced_cycle_witness(g) {
        let c = cycle_circuit(&w.cycle);
        if closed(&c) {
            return Some(c);
        }
    }
    find_frame_circuits(g, max_edges)
        .into_iter()
        .filter(|c| c.kind != FrameCircuitKind::BalancedCycle && c.len() >= 4)
        .find(|c| closed(c))
}

/// Non-freeness from a closed frame circuit with at least four elements.
pub fn frame_circuit_refute(g: &SignedGraph) -> Option<Verdict> {
    refute_with(&Facts::of(g), g, DecideOptions::default().circuit_edges)
}

fn refute_with(facts: &Facts, g: &SignedGraph, max_edges: usize) -> Option<Verdict> {
    let circuit = frame_circuit_flat(g, max_edges)?;
    Some(facts.verdict(Ternary::No, Provenance::FrameCircuitWitness, Some(Certificate::FrameCircuitFlat { circuit })))
}

/// Vertices `v` with a divisional edge `(v, w)` whose contraction keeps
/// `E⁻ ⊆ E⁺` and balanced chordality, each with the first such edge.
pub fn class_preserving_divisional_vertices(g: &SignedGraph) -> BTreeMap<Vertex, DirectedEdge> {
    let mut out = BTreeMap::new();
    for e in directed_edges(g) {
        if out.contains_key(&e.from) {
            continue;
        }
        let c = g.contract(e).expect("edge of g");
        if c.negative_within_positive() && is_balanced_chordal(&c) && divisional_edge(g, e).expect("edge of g") {
            out.insert(e.from, e);
        }
    }
    out
}

/// Vertex sets of the components whose `G⁺` is not complete.
fn incomplete_components(g: &SignedGraph) -> Vec<BTreeSet<Vertex>> {
    g.balanced_components()
        .into_iter()
        .map(|c| c.vertices.into_iter().collect::<BTreeSet<Vertex>>())
        .filter(|c| !g.positive_graph().induced(c).is_complete())
        .collect()
}

/// Contracts class-preserving divisional edges until every component has a
/// complete `G⁺` and a threshold `G⁻`.
///
/// Requires `E⁻ ⊆ E⁺`, every loop and balanced chordality; returns `None` if
/// some intermediate graph has no suitable edge.
pub fn divisional_contraction_chain(g: &SignedGraph) -> Result<Option<Vec<DirectedEdge>>, DecideError> {
    if !g.negative_within_positive() || !g.has_full_loops() || !is_balanced_chordal(g) {
        return Err(DecideError::NotApplicable("needs E⁻ ⊆ E⁺, every loop and balanced chordality"));
    }
    let mut current = g.clone();
    let mut chain = Vec::new();
    while let Some(component) = incomplete_components(&current).into_iter().next() {
        let candidates = class_preserving_divisional_vertices(&current);
        let Some(&e) = candidates.iter().find(|(v, _)| component.contains(v)).map(|(_, e)| e) else {
            return Ok(None);
        };
        chain.push(e);
        current = current.contract(e).expect("edge of current graph");
    }
    let negative = current.negative_graph();
    let threshold = current.balanced_components().into_iter().all(|c| {
        let vs: BTreeSet<Vertex> = c.vertices.into_iter().collect();
        is_threshold(&negative.induced(&vs)).is_threshold()
    });
    Ok(threshold.then_some(chain))
}

pub fn decide(g: &SignedGraph) -> Verdict {
    decide_with(g, &DecideOptions { verify: false, ..DecideOptions::default() })
        .expect("without verification the dispatch cannot fail")
}

/// Dispatches over the structural theorems, then the oracle, then Unknown.
pub fn decide_with(g: &SignedGraph, opts: &DecideOptions) -> Result<Verdict, DecideError> {
    let facts = Facts::of(g);
    let mut verdict = dispatch(&facts, g, opts)?;
    if opts.verify {
        cross_check(g, &mut verdict, opts)?;
    }
    Ok(verdict)
}

fn dispatch(facts: &Facts, g: &SignedGraph, opts: &DecideOptions) -> Result<Verdict, DecideError> {
    if g.negative_within_positive() && g.has_full_loops() && facts.witness.is_some() {
        return Ok(main_theorem_on(facts, g, vec![]));
    }
    if g.is_positive_complete() {
        let (free, cert) = er_certificate(g, vec![]);
        return Ok(facts.verdict(free.into(), Provenance::EdelmanReiner, Some(cert)));
    }
    let Peel { base, peeled } = &facts.peel;
    if base.vertex_count() == 0 {
        let cert = Certificate::SimplicialPeel { ordering: facts.peel.extension_order() };
        return Ok(facts.verdict(Ternary::Yes, Provenance::SimplicialPeel, Some(cert)));
    }
    if base.is_positive_complete() {
        let (free, cert) = er_certificate(base, peeled.clone());
        return Ok(facts.verdict(free.into(), Provenance::EdelmanReiner, Some(cert)));
    }
    if base.negative_within_positive() {
        let v = main_theorem_on(facts, base, peeled.clone());
        if v.free != Ternary::Unknown {
            return Ok(v);
        }
    }
    if let Some(c) = &facts.supersolvable {
        let cert = Certificate::Supersolvable { certificate: c.clone() };
        return Ok(facts.verdict(Ternary::Yes, Provenance::ZaslavskySs, Some(cert)));
    }
    if let Some(v) = refute_with(facts, g, opts.circuit_edges) {
        return Ok(v);
    }
    if opts.oracle_fallback {
        let a = oracle::realize(g);
        if opts.limits.admits(&a) {
            let result = oracle::freeness_decide_with(&a, &opts.limits)?;
            let free = result.is_free().into();
            return Ok(facts.verdict(free, Provenance::OracleFallback, Some(Certificate::Oracle { result })));
        }
    }
    Ok(facts.verdict(Ternary::Unknown, Provenance::Unknown, None))
}

/// Most vertices for which `--verify` also builds a contraction chain.
const CHAIN_VERIFY_VERTICES: usize = 8;

fn cross_check(g: &SignedGraph, v: &mut Verdict, opts: &DecideOptions) -> Result<(), DecideError> {
    if let Some(Certificate::BalancedChordal { contraction_chain, .. }) = &mut v.certificate {
        if g.vertex_count() <= CHAIN_VERIFY_VERTICES && g.has_full_loops() && g.negative_within_positive() {
            let chain = divisional_contraction_chain(g)?;
            if chain.is_none() {
                return Err(DecideError::Disagreement {
                    property: "divisional contraction chain",
                    theorem: Ternary::Yes,
                    oracle: Ternary::No,
                });
            }
            *contraction_chain = chain;
        }
    }
    let a = oracle::realize(g);
    if !opts.limits.admits(&a) {
        return Ok(());
    }
    let report = oracle::analyze(&a, &opts.limits)?;
    let ss: Ternary = report.supersolvable.supersolvable.into();
    if v.supersolvable != ss {
        return Err(DecideError::Disagreement { property: "supersolvable", theorem: v.supersolvable, oracle: ss });
    }
    if let Some(result) = report.freeness {
        let free: Ternary = result.is_free().into();
        if v.free == Ternary::Unknown {
            v.free = free;
            v.provenance = Provenance::OracleFallback;
            v.certificate = Some(Certificate::Oracle { result });
        } else if v.free != free {
            return Err(DecideError::Disagreement { property: "free", theorem: v.free, oracle: free });
        }
    }
    v.cross_checked = true;
    Ok(())
}

#[cfg(test)]
mod tests;
