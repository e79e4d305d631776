use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use semicomplex::{chain, enumerate, ideal_extensions, oracle, NumericalSemigroup, ThetaMap};
use semicomplex_bench::fixtures;

fn bench_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("from_generators");
    for (name, s) in fixtures() {
        let gens = s.generators().to_vec();
        group.bench_with_input(BenchmarkId::from_parameter(name), &gens, |b, gens| {
            b.iter(|| NumericalSemigroup::from_generators(black_box(gens)).unwrap())
        });
    }
    group.finish();
}

fn bench_invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("pseudo_frobenius");
    for (name, s) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, s| {
            b.iter(|| black_box(s).pseudo_frobenius().unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("ideal_extensions");
    for (name, s) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, s| {
            b.iter(|| ideal_extensions(black_box(s)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("gamma_chain");
    for (name, s) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, s| {
            b.iter(|| chain(ThetaMap::Gamma, black_box(s)))
        });
    }
    group.finish();
}

fn bench_tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (m, cx) in [(3, 8), (4, 6), (5, 5), (6, 4)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("m{m}_c{cx}")),
            &(m, cx),
            |b, &(m, cx)| b.iter(|| enumerate(m, cx).unwrap()),
        );
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("genus_catalog");
    group.sample_size(10);
    for g in [8, 10, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| {
            b.iter(|| oracle::enumerate_by_genus(g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_construction,
    bench_invariants,
    bench_tree,
    bench_oracle
);
criterion_main!(benches);
