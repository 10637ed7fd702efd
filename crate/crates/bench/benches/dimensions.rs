use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ghost5::ghost::GhostCoefficient;
use ghost5::{d_unr_oracle, sweep, WeightComponent, ORACLE_WEIGHT_CAP};

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("d_unr_oracle");
    group.sample_size(10);
    for k in [26i64, 50, 74] {
        let wc = WeightComponent::new(k, 0).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(k), &wc, |b, &wc| {
            b.iter(|| d_unr_oracle(wc, ORACLE_WEIGHT_CAP).unwrap())
        });
    }
    group.finish();
}

fn ghost(c: &mut Criterion) {
    c.bench_function("ghost_coefficients_1_to_20", |b| {
        b.iter(|| (1..=20).map(|n| GhostCoefficient::compute(n, black_box(0)).valuation_at(90)).collect::<Vec<_>>())
    });
}

fn table_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("corank_sweep");
    group.sample_size(10);
    group.bench_function("a0_k0_3_to_20_n_2_to_10", |b| b.iter(|| sweep(&[0], 3..=20, 2..=10, None).unwrap()));
    group.finish();
}

criterion_group!(benches, oracle, ghost, table_sweep);
criterion_main!(benches);
