//! Sequential against parallel assembly and elimination of the combined
//! differential. Build with `--no-default-features` to see the fallback
//! path alone.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_rational::BigRational;

use rbleibniz::cohomology::{d_matrix_with, degree_summary, ComplexKind};
use rbleibniz::linalg::rank_with;
use rbleibniz::par::Exec;
use rbleibniz::repr::self_representation;
use rbleibniz::samples;

fn strategies() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn assembly(c: &mut Criterion) {
    let a = samples::solvable3_rb(BigRational::from_integer(2.into()), BigRational::from_integer((-3).into()));
    let r = self_representation(&a);
    let mut group = c.benchmark_group("d_matrix");
    group.sample_size(10);
    for n in [2, 3] {
        for (name, exec) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| d_matrix_with(black_box(&a), &r, n, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn elimination(c: &mut Criterion) {
    let a = samples::solvable3_rb(BigRational::from_integer(1.into()), BigRational::from_integer(1.into()));
    let r = self_representation(&a);
    let m = d_matrix_with(&a, &r, 3, Exec::Parallel).unwrap();
    let mut group = c.benchmark_group("rank");
    group.sample_size(10);
    for (name, exec) in strategies() {
        group.bench_function(BenchmarkId::new(name, "d3"), |b| b.iter(|| rank_with(black_box(&m), exec)));
    }
    group.finish();

    let mut group = c.benchmark_group("cohomology_degree");
    group.sample_size(10);
    for (name, exec) in strategies() {
        group.bench_function(BenchmarkId::new(name, "rbla_h2"), |b| {
            b.iter(|| degree_summary(black_box(&a), &r, 2, ComplexKind::Rbla, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, assembly, elimination);
criterion_main!(benches);
