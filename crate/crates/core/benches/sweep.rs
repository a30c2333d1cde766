use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jacsplit_core::halving::enumerate_halves;
use jacsplit_core::oracle::{self, SweepConfig};
use jacsplit_core::{Curve, Execution};

fn sweep_execution(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        let mut config = SweepConfig::new(vec![7, 11], vec![1, 2], 1);
        config.max_root_sets = 4;
        config.execution = exec;
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &config, |b, cfg| {
            b.iter(|| oracle::sweep(black_box(cfg)).unwrap())
        });
    }
    group.finish();
}

fn halving(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_halves");
    for (p, g, roots) in [
        (13u64, 1usize, vec![0i64, 1, 3]),
        (13, 2, vec![1, 4, 6, 9, 12]),
        (13, 3, vec![0, 1, 2, 5, 7, 8, 11]),
    ] {
        let curve = Curve::from_ints(p, g, &roots).unwrap();
        let point = curve.point_with_canonical_b(curve.field().from_u64(3)).unwrap();
        group.bench_function(BenchmarkId::from_parameter(format!("g{g}")), |b| {
            b.iter(|| enumerate_halves(&curve, black_box(&point), false).unwrap())
        });
    }
    group.finish();
}

fn cantor(c: &mut Criterion) {
    let curve = Curve::from_ints(13, 3, &[0, 1, 2, 5, 7, 8, 11]).unwrap();
    let f = curve.field();
    let x = curve.point_to_mumford(&curve.point_with_canonical_b(f.from_u64(3)).unwrap());
    let y = curve.scalar_mul(5, &x);
    c.bench_function("cantor_add_g3", |b| b.iter(|| curve.cantor_add(black_box(&x), black_box(&y))));
}

criterion_group!(benches, sweep_execution, halving, cantor);
criterion_main!(benches);
