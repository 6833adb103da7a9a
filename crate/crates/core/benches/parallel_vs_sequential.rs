use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use twopath::interferometer::{linspace, PhaseAngle};
use twopath::measurement::{sequential_experiment, sequential_experiment_partitioned, Order, RandomStream, SequentialStats};
use twopath::par;
use twopath::uncertainty::duality_report;

const WORKERS: usize = 8;

fn partitioned_sequentially(shots: u64, seed: u64) -> SequentialStats {
    let base = RandomStream::new(seed);
    let phi = PhaseAngle::new(0.9).unwrap();
    let per = shots / WORKERS as u64;
    (0..WORKERS)
        .map(|i| sequential_experiment(Order::WThenP, phi, PhaseAngle::ZERO, per, &mut base.substream(i as u64)).unwrap())
        .reduce(|a, b| a.merge(&b))
        .unwrap()
}

fn monte_carlo(c: &mut Criterion) {
    let phi = PhaseAngle::new(0.9).unwrap();
    let shots = 400_000;
    assert_eq!(
        partitioned_sequentially(shots, 11),
        sequential_experiment_partitioned(Order::WThenP, phi, PhaseAngle::ZERO, shots, 11, WORKERS).unwrap(),
        "both paths must agree bit for bit"
    );
    let mut g = c.benchmark_group("sequential_experiment");
    g.sample_size(10);
    g.bench_function(BenchmarkId::new("sequential", shots), |b| {
        b.iter(|| partitioned_sequentially(black_box(shots), 11))
    });
    g.bench_function(BenchmarkId::new(if par::is_parallel() { "rayon" } else { "fallback" }, shots), |b| {
        b.iter(|| {
            sequential_experiment_partitioned(Order::WThenP, phi, PhaseAngle::ZERO, black_box(shots), 11, WORKERS)
                .unwrap()
        })
    });
    g.finish();
}

fn uncertainty_sweep(c: &mut Criterion) {
    let grid = linspace(-10.0, 10.0, 200_000).unwrap();
    let phi0 = PhaseAngle::new(0.3).unwrap();
    let mut g = c.benchmark_group("duality_sweep");
    g.bench_function("sequential", |b| {
        b.iter(|| par::map_sequential(black_box(&grid), |&phi| duality_report(phi, phi0).gap))
    });
    g.bench_function(if par::is_parallel() { "rayon" } else { "fallback" }, |b| {
        b.iter(|| par::map(black_box(&grid), |&phi| duality_report(phi, phi0).gap))
    });
    g.finish();
}

criterion_group!(benches, monte_carlo, uncertainty_sweep);
criterion_main!(benches);
