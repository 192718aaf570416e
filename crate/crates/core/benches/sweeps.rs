use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use edgeq::bounds::{count_consistent, cra_report_matching, zero_certificate};
use edgeq::harness::{run_experiment_with, ExperimentConfig, LearnerKind};
use edgeq::{CostModel, Exec, Family};

const STRATEGIES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn quicksort_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("quicksort_sweep");
    group.sample_size(10);
    let cfg = ExperimentConfig::new(
        Family::HalfGraph,
        LearnerKind::Quicksort,
        CostModel::Sampling,
        vec![64, 128, 256, 512],
        16,
    );
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| run_experiment_with(black_box(&cfg), exec).unwrap())
        });
    }
    group.finish();
}

fn binary_search_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("binary_search_sweep");
    group.sample_size(10);
    let cfg = ExperimentConfig::new(
        Family::ColPermuted,
        LearnerKind::BinarySearch,
        CostModel::Unit,
        vec![256, 1024],
        32,
    );
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| run_experiment_with(black_box(&cfg), exec).unwrap())
        });
    }
    group.finish();
}

fn certificate_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("certificate_n6");
    group.sample_size(10);
    let cert = zero_certificate(6).unwrap();
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| count_consistent(black_box(&cert), exec).unwrap())
        });
    }
    group.finish();
}

fn cra_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("cra_n5");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| cra_report_matching(black_box(5), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    quicksort_sweep,
    binary_search_sweep,
    certificate_enumeration,
    cra_enumeration
);
criterion_main!(benches);
