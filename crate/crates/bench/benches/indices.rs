use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use reducibility_bench::{groups, ideals, polynomials};
use reducibility_core::abelian::{
    sum_reducibility_index_bruteforce, sum_reducibility_index_formula,
};
use reducibility_core::bass::reducibility_index_by_bass;
use reducibility_core::decompose::decompose;
use reducibility_core::univariate::factor;

fn monomial(c: &mut Criterion) {
    let mut group = c.benchmark_group("monomial");
    for (name, ideal) in ideals() {
        group.bench_with_input(BenchmarkId::new("decompose", name), &ideal, |b, i| {
            b.iter(|| decompose(i).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("bass", name), &ideal, |b, i| {
            b.iter(|| reducibility_index_by_bass(i).unwrap())
        });
    }
    group.finish();
}

fn univariate(c: &mut Criterion) {
    let mut group = c.benchmark_group("factor");
    for (name, field, f) in polynomials() {
        group.bench_function(BenchmarkId::new("degree-8", name), |b| {
            b.iter(|| factor(&field, &f).unwrap())
        });
    }
    group.finish();
}

fn abelian(c: &mut Criterion) {
    let mut group = c.benchmark_group("abelian");
    group.sample_size(10);
    for g in groups() {
        group.bench_function(BenchmarkId::new("bruteforce", g.to_string()), |b| {
            b.iter(|| sum_reducibility_index_bruteforce(&g).unwrap())
        });
        group.bench_function(BenchmarkId::new("formula", g.to_string()), |b| {
            b.iter(|| sum_reducibility_index_formula(&g))
        });
    }
    group.finish();
}

criterion_group!(benches, monomial, univariate, abelian);
criterion_main!(benches);
