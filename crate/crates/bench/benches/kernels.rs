use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use octoeig::projection::{six_way, six_way_with};
use octoeig::spectral::{eigensystem, k_vector};
use octoeig::verify::{verify, VerifyOptions};
use octoeig::{MatrixClassTag, DEFAULT_TOLERANCE};
use octoeig_bench::{matrix, octonion_pair, vector};

fn algebra(c: &mut Criterion) {
    let (p, q) = octonion_pair(1);
    c.bench_function("octonion mul", |b| b.iter(|| black_box(p) * black_box(q)));
    let a = matrix(2, MatrixClassTag::Octonionic);
    c.bench_function("det", |b| b.iter(|| black_box(&a).det()));
    let x = vector(3);
    c.bench_function("k_vector", |b| b.iter(|| k_vector(black_box(&a), black_box(&x))));
}

fn spectral(c: &mut Criterion) {
    let o = matrix(4, MatrixClassTag::Octonionic);
    let q = matrix(5, MatrixClassTag::Quaternionic);
    let z = matrix(6, MatrixClassTag::Complex);
    c.bench_function("eigensystem octonionic", |b| b.iter(|| eigensystem(black_box(&o)).unwrap()));
    c.bench_function("eigensystem quaternionic", |b| b.iter(|| eigensystem(black_box(&q)).unwrap()));
    c.bench_function("eigensystem complex", |b| b.iter(|| eigensystem(black_box(&z)).unwrap()));
}

fn projection(c: &mut Criterion) {
    let a = matrix(7, MatrixClassTag::Octonionic);
    let x = vector(8);
    let sys = eigensystem(&a).unwrap();
    c.bench_function("six_way with cached eigensystem", |b| b.iter(|| six_way_with(&a, &sys, black_box(&x))));
    c.bench_function("six_way from scratch", |b| b.iter(|| six_way(black_box(&a), black_box(&x)).unwrap()));
}

fn harness(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("one sample", |b| b.iter(|| verify(&VerifyOptions::new(42, 1, DEFAULT_TOLERANCE))));
    group.finish();
}

criterion_group!(benches, algebra, spectral, projection, harness);
criterion_main!(benches);
