//! Sequential against rayon-parallel execution of the main sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use domtab::sieving::{orbits_with, verify_csp_with, DEFAULT_EXHAUSTIVE_CAP};
use domtab::tableaux::{enumerate_tableaux_with, maj_polynomial_with, Partition};
use domtab::Strategy;

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_tableaux");
    for (label, shape) in [
        ("2x12", Partition::two_row(12)),
        ("4x4", Partition::rectangle(4, 4)),
        ("4x5", Partition::rectangle(4, 5)),
        ("4x6", Partition::rectangle(4, 6)),
    ] {
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, label), &shape, |b, shape| {
                b.iter(|| enumerate_tableaux_with(black_box(shape), strategy))
            });
        }
    }
    group.finish();
}

fn maj_generating_function(c: &mut Criterion) {
    let mut group = c.benchmark_group("maj_polynomial");
    let shape = Partition::two_row(14);
    for (name, strategy) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| maj_polynomial_with(black_box(&shape), strategy))
        });
    }
    group.finish();
}

fn sieving(c: &mut Criterion) {
    let mut group = c.benchmark_group("sieving");
    group.sample_size(20);
    for (name, strategy) in STRATEGIES {
        group.bench_function(BenchmarkId::new("verify_csp", name), |b| {
            b.iter(|| verify_csp_with(black_box(12), DEFAULT_EXHAUSTIVE_CAP, strategy).unwrap())
        });
        group.bench_function(BenchmarkId::new("orbits", name), |b| {
            b.iter(|| orbits_with(black_box(12), strategy).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, maj_generating_function, sieving);
criterion_main!(benches);
