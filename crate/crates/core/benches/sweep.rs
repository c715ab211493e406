use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gray_unit_distance::embedding::{sweep_sequential, SweepSpec};
use gray_unit_distance::symmetry::{automorphism_count, find_isomorphism};
use gray_unit_distance::{gray_graph, grid3_configuration, levi_graph};

fn sweep_backends(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for steps in [8usize, 16] {
        let spec = SweepSpec {
            steps_h: steps,
            steps_theta: steps,
            ..SweepSpec::default()
        };
        group.bench_with_input(BenchmarkId::new("sequential", steps), &spec, |b, s| {
            b.iter(|| sweep_sequential(black_box(s)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", steps), &spec, |b, s| {
            b.iter(|| gray_unit_distance::embedding::sweep_parallel(black_box(s)))
        });
    }
    group.finish();
}

fn symmetry(c: &mut Criterion) {
    let gray = gray_graph();
    let levi = levi_graph(&grid3_configuration(3));
    c.bench_function("find_isomorphism levi -> lcf", |b| {
        b.iter(|| find_isomorphism(black_box(&levi), black_box(&gray)))
    });
    c.bench_function("automorphism_count gray", |b| {
        b.iter(|| automorphism_count(black_box(&gray)))
    });
}

criterion_group!(benches, sweep_backends, symmetry);
criterion_main!(benches);
