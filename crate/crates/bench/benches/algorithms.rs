use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sga_bench::random_graphs;
use sga_core::gen::{self, GraphClass, LoopPolicy};
use sga_core::oracle::{freeness_decide, realize};
use sga_core::poly::chromatic_polynomial;
use sga_core::signed::is_balanced_chordal;
use sga_core::{decide, Ternary};

fn chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_polynomial");
    for n in [4, 6, 8] {
        let graphs = random_graphs(1, n, GraphClass::General, LoopPolicy::Random, 8);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(|g| chromatic_polynomial(black_box(g)).degree()).max())
        });
    }
    group.finish();
}

fn balanced_chordal(c: &mut Criterion) {
    let mut group = c.benchmark_group("balanced_chordal");
    for n in [6, 10, 14] {
        let graphs = random_graphs(2, n, GraphClass::NegativeWithinPositive, LoopPolicy::Full, 16);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| gs.iter().filter(|g| is_balanced_chordal(black_box(g))).count())
        });
    }
    group.finish();
}

fn freeness_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("freeness_oracle");
    group.sample_size(10);
    for n in [3, 4] {
        let graphs = random_graphs(3, n, GraphClass::NegativeWithinPositive, LoopPolicy::Full, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| gs.iter().filter(|g| freeness_decide(&realize(black_box(g))).is_ok()).count())
        });
    }
    group.bench_function("b3", |b| b.iter(|| freeness_decide(&realize(black_box(&gen::complete_signed(1..=3))))));
    group.finish();
}

fn dispatch(c: &mut Criterion) {
    let graphs = random_graphs(4, 7, GraphClass::NegativeWithinPositive, LoopPolicy::Random, 16);
    c.bench_function("decide_n7", |b| {
        b.iter(|| graphs.iter().filter(|g| decide(black_box(g)).free == Ternary::Yes).count())
    });
}

criterion_group!(benches, chromatic, balanced_chordal, freeness_oracle, dispatch);
criterion_main!(benches);
