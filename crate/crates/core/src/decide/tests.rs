use super::*;
use crate::gen::{GraphClass, LoopPolicy};
use crate::graph::Edge;
use crate::oracle::{freeness_decide, is_supersolvable_lattice, realize};

fn graph(n: u32, pos: &[(Vertex, Vertex)], neg: &[(Vertex, Vertex)], loops: &[Vertex]) -> SignedGraph {
    SignedGraph::new(1..=n, pos.iter().copied(), neg.iter().copied(), loops.iter().copied()).unwrap()
}

fn k4_two_k2() -> SignedGraph {
    let vs = [1, 2, 3, 4];
    SignedGraph::new(vs, gen::all_pairs(&vs), [(1, 2), (3, 4)], vs).unwrap()
}

fn oracle_free(g: &SignedGraph) -> bool {
    freeness_decide(&realize(g)).unwrap().is_free()
}

#[test]
fn edelman_reiner_examples() {
    let b4 = gen::complete_signed(1..=4);
    let v = er_decide(&b4).unwrap();
    assert_eq!(v.free, Ternary::Yes);
    let v = decide(&b4);
    assert_eq!((v.free, v.provenance), (Ternary::Yes, Provenance::EdelmanReiner));

    let looped_triangle = graph(3, &[(1, 2), (1, 3), (2, 3)], &[(2, 3)], &[1]);
    let v = er_decide(&looped_triangle).unwrap();
    assert_eq!(v.free, Ternary::No);
    match v.certificate {
        Some(Certificate::EdelmanReiner { loops_initial_segment, ref threshold, .. }) => {
            assert!(threshold.is_threshold());
            assert!(!loops_initial_segment);
        }
        ref other => panic!("unexpected certificate {other:?}"),
    }

    let k2 = graph(2, &[(1, 2)], &[(1, 2)], &[1]);
    assert_eq!(er_decide(&k2).unwrap().free, Ternary::Yes);
    assert!(oracle_free(&k2));

    let path = graph(3, &[(1, 2), (2, 3)], &[], &[]);
    assert!(matches!(er_decide(&path), Err(DecideError::NotApplicable(_))));
}

#[test]
fn main_theorem_examples() {
    let v = main_theorem_decide(&k4_two_k2()).unwrap();
    assert_eq!(v.free, Ternary::No);
    assert!(v.witness.as_ref().unwrap().verify(&k4_two_k2()));
    let v = decide(&k4_two_k2());
    assert_eq!((v.free, v.provenance), (Ternary::No, Provenance::MainTheorem));

    let path = graph(4, &[(1, 2), (2, 3), (3, 4)], &[], &[1, 2, 3, 4]);
    let v = main_theorem_decide(&path).unwrap();
    assert_eq!(v.free, Ternary::Yes);
    let result = freeness_decide(&realize(&path)).unwrap();
    assert!(result.is_free());
    let chi = crate::poly::chromatic_polynomial(&path);
    let mut roots = chi.nonneg_integer_roots().unwrap();
    roots.sort_unstable();
    assert_eq!(result.exponents.iter().map(|&e| e as u64).collect::<Vec<_>>(), roots);

    let (a, b, c, d, e) = (1, 2, 3, 4, 5);
    let vs = [a, b, c, d, e];
    let pos: Vec<_> = gen::all_pairs(&vs).into_iter().filter(|&p| p != (b, e)).collect();
    let left = SignedGraph::new(vs, pos, [(a, b), (a, c), (a, d), (a, e)], vs).unwrap();
    assert_eq!(main_theorem_decide(&left).unwrap().free, Ternary::Yes);

    let partial = graph(3, &[(1, 2), (2, 3)], &[(1, 2)], &[]);
    assert_eq!(main_theorem_decide(&partial).unwrap().free, Ternary::Unknown);
    assert!(main_theorem_decide(&graph(2, &[], &[(1, 2)], &[])).is_err());
}

#[test]
fn zaslavsky_examples() {
    let b3 = gen::complete_signed(1..=3);
    assert!(matches!(
        zaslavsky_ss_decide(&b3).supersolvable_certificate,
        Some(SupersolvableCertificate::EliminationOrdering { .. })
    ));

    // D₃ followed by a vertex adjacent positively to everything and looped
    // nowhere: signed simplicial since D₃ has every pair in E⁺.
    let d3 = gen::d3();
    let ext = d3.with_vertex(4, &BTreeSet::from([1, 2, 3]), &BTreeSet::new(), false).unwrap();
    let v = zaslavsky_ss_decide(&ext);
    assert_eq!(v.supersolvable, Ternary::Yes);
    match v.supersolvable_certificate {
        Some(SupersolvableCertificate::Extension { ref base, ref extension }) => {
            assert_eq!(base, &vec![BasePart::D3 { vertices: vec![1, 2, 3] }]);
            assert_eq!(extension, &vec![4]);
        }
        ref other => panic!("{other:?}"),
    }
    assert!(is_supersolvable_lattice(&realize(&ext)).unwrap().supersolvable);

    let chorded_square = graph(4, &[(1, 4), (3, 4), (1, 3), (1, 2), (2, 3)], &[(1, 2), (3, 4)], &[]);
    assert_eq!(zaslavsky_ss_decide(&chorded_square).supersolvable, Ternary::No);

    let star = graph(4, &[(1, 2), (2, 3), (3, 4), (2, 4)], &[(1, 2)], &[]);
    let switched = star.switched(&SwitchingFunction::negating(&star, &BTreeSet::from([2]))).unwrap();
    for g in [star, switched] {
        let v = zaslavsky_ss_decide(&g);
        assert_eq!(v.supersolvable, is_supersolvable_lattice(&realize(&g)).unwrap().supersolvable.into());
    }
}

#[test]
fn disconnected_bases_are_decided_per_component() {
    let pairs = graph(4, &[(1, 4), (2, 3)], &[(1, 4), (2, 3)], &[]);
    let v = zaslavsky_ss_decide(&pairs);
    assert_eq!(v.supersolvable, Ternary::Yes);
    match v.supersolvable_certificate {
        Some(SupersolvableCertificate::Extension { ref base, .. }) => assert_eq!(base.len(), 2),
        ref other => panic!("{other:?}"),
    }
    assert!(is_supersolvable_lattice(&realize(&pairs)).unwrap().supersolvable);
}

#[test]
fn d3_matching() {
    assert!(is_d3(&gen::d3()));
    let relabelled = gen::d3().relabel(&BTreeMap::from([(1, 7), (2, 5), (3, 9)])).unwrap();
    assert!(is_d3(&relabelled));
    assert!(!is_d3(&gen::complete_signed(1..=3)));
    assert!(!is_d3(&gen::complete_positive(3)));
}

#[test]
fn frame_circuit_examples() {
    let square = graph(4, &[(1, 4), (2, 3)], &[(1, 2), (3, 4)], &[]);
    let chorded_square = graph(4, &[(1, 4), (3, 4), (1, 3), (1, 2), (2, 3)], &[(1, 2), (3, 4)], &[]);
    let f1_edges: Vec<_> = {
        let mut e = square.edges();
        e.sort();
        e
    };
    for g in [&square, &chorded_square] {
        let v = frame_circuit_refute(g).unwrap();
        assert_eq!(v.free, Ternary::No);
        match v.certificate {
            Some(Certificate::FrameCircuitFlat { circuit }) => {
                assert_eq!(circuit.kind, FrameCircuitKind::BalancedCycle);
                assert_eq!(circuit.edges, f1_edges);
            }
            other => panic!("{other:?}"),
        }
    }

    let handcuff = graph(3, &[(1, 2), (1, 3)], &[(1, 2), (1, 3)], &[]);
    match frame_circuit_refute(&handcuff).unwrap().certificate {
        Some(Certificate::FrameCircuitFlat { circuit }) => assert_eq!(circuit.kind, FrameCircuitKind::TightHandcuff),
        other => panic!("{other:?}"),
    }
    let chorded_handcuff = graph(4, &[(1, 4), (3, 4), (1, 3), (1, 2), (2, 3)], &[(1, 2), (1, 4)], &[]);
    assert_eq!(frame_circuit_refute(&chorded_handcuff).unwrap().free, Ternary::No);
    let tight = [Edge::positive(1, 2), Edge::negative(1, 2), Edge::positive(1, 4), Edge::negative(1, 4)].into();
    assert!(is_flat_subgraph(&chorded_handcuff, &tight).unwrap());

    let tree = graph(4, &[(1, 2), (2, 3), (2, 4)], &[], &[]);
    assert!(frame_circuit_refute(&tree).is_none());
}

#[test]
fn unknown_outside_every_theorem() {
    let opts = DecideOptions { oracle_fallback: false, ..DecideOptions::default() };
    let mut found = None;
    'search: for n in 3..=5 {
        for g in gen::enumerate(n, GraphClass::NegativeWithinPositive, LoopPolicy::None) {
            if g.negative_pairs().is_empty() || !is_balanced_chordal(&g) {
                continue;
            }
            let v = decide_with(&g, &opts).unwrap();
            if v.free == Ternary::Unknown {
                found = Some((g, v));
                break 'search;
            }
        }
    }
    let (g, v) = found.expect("an instance outside every theorem");
    assert_eq!(v.provenance, Provenance::Unknown);
    assert!(v.balanced_chordal);
    let with_oracle = decide(&g);
    assert_eq!(with_oracle.provenance, Provenance::OracleFallback);
}

#[test]
fn verified_dispatch_agrees_with_oracle_exhaustively() {
    let opts = DecideOptions { verify: true, ..DecideOptions::default() };
    for n in 1..=3 {
        for g in gen::enumerate(n, GraphClass::General, LoopPolicy::Random) {
            let v = decide_with(&g, &opts).unwrap_or_else(|e| panic!("{g}: {e}"));
            assert!(v.cross_checked);
            assert!(v.respects_implications(), "{g}");
            assert_ne!(v.free, Ternary::Unknown);
        }
    }
}

#[test]
fn contraction_chain_reaches_complete_graph() {
    let mut r = gen::rng(21);
    let mut built = 0;
    for _ in 0..200 {
        let g = gen::random_graph(&mut r, 5, GraphClass::NegativeWithinPositive, LoopPolicy::Full);
        if !is_balanced_chordal(&g) {
            continue;
        }
        let chain = divisional_contraction_chain(&g).unwrap().expect("chain exists");
        built += usize::from(!chain.is_empty());
    }
    assert!(built > 10);
}
