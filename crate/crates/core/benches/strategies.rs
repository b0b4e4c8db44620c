//! Sequential versus parallel execution of the fan-out kernels.
//!
//! Without the `parallel` feature both rows run the sequential path.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lexcount_core::biwords::{count_biwords, enumerate_biwords_with};
use lexcount_core::lpp::count_matrices_with;
use lexcount_core::moments::{a_factor_with, moment_partition_sum_with, MomentQuery};
use lexcount_core::Strategy;

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn matrices(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_matrices");
    for (m, n) in [(2u32, 6u64), (3, 3)] {
        for (name, s) in STRATEGIES {
            group.bench_with_input(
                BenchmarkId::new(name, format!("m{m}_N{n}")),
                &(m, n),
                |b, &(m, n)| b.iter(|| count_matrices_with(black_box(m), black_box(n), s)),
            );
        }
    }
    group.finish();
}

fn arrays(c: &mut Criterion) {
    let mut group = c.benchmark_group("biwords");
    group.sample_size(20);
    for (name, s) in STRATEGIES {
        group.bench_function(
            BenchmarkId::new(format!("enumerate_{name}"), "m3_N3"),
            |b| b.iter(|| enumerate_biwords_with(black_box(3), black_box(3), s)),
        );
        group.bench_function(BenchmarkId::new(format!("count_{name}"), "m3_N3"), |b| {
            b.iter(|| count_biwords(black_box(3), black_box(3), s))
        });
    }
    group.finish();
}

fn partition_sum(c: &mut Criterion) {
    let mut group = c.benchmark_group("moment_partition_sum");
    for (m, n) in [(4u32, 6u64), (5, 8)] {
        for (name, s) in STRATEGIES {
            group.bench_with_input(
                BenchmarkId::new(name, format!("m{m}_N{n}")),
                &(m, n),
                |b, &(m, n)| {
                    b.iter(|| {
                        moment_partition_sum_with(MomentQuery::new(black_box(m), black_box(n)), s)
                    })
                },
            );
        }
    }
    group.finish();
}

fn euler_factor(c: &mut Criterion) {
    let mut group = c.benchmark_group("a_factor");
    group.sample_size(10);
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::new(name, "m2_p1e5"), |b| {
            b.iter(|| a_factor_with(black_box(2), 100_000, 64, 128, s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, matrices, arrays, partition_sum, euler_factor);
criterion_main!(benches);
