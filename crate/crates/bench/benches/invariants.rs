use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use torzar::positivity::{pair, positive_product, restricted_volume, vol, zariski};
use torzar::verifier::{check_diskant, check_theorem_a, run_suite, SuiteKind};
use torzar::{mixed_volume, Polytope};
use torzar_bench::{blowup, random_nef_pair, random_pair};

fn fixtures(c: &mut Criterion) {
    let (h, e) = blowup();
    let big = h.add(&e).unwrap();
    c.bench_function("zariski/blowup", |b| b.iter(|| zariski(black_box(&big)).unwrap()));
    c.bench_function("pair/blowup", |b| b.iter(|| pair(&[black_box(&h)], black_box(&e)).unwrap()));
    c.bench_function("restricted/blowup", |b| b.iter(|| restricted_volume(black_box(&h), 3).unwrap()));
}

fn volumes(c: &mut Criterion) {
    let mut g = c.benchmark_group("volume");
    for dim in [2usize, 3] {
        let (a, _) = random_pair(5, dim);
        g.bench_with_input(BenchmarkId::new("vol", dim), &a, |b, a| {
            b.iter(|| {
                // A fresh copy so the cached Newton polytope is rebuilt.
                let fresh = a.scale(&torzar::rational::int(1));
                vol(&fresh)
            })
        });
        let list = vec![&a; dim];
        g.bench_with_input(BenchmarkId::new("positive_product", dim), &list, |b, l| {
            b.iter(|| positive_product(l).unwrap())
        });
    }
    g.finish();
}

fn mixed(c: &mut Criterion) {
    let cube: Vec<Vec<_>> = (0..8)
        .map(|i| (0..3).map(|k| torzar::rational::int(((i >> k) & 1) as i64)).collect())
        .collect();
    let simplex: Vec<Vec<_>> = (0..4)
        .map(|i| (0..3).map(|k| torzar::rational::int((i == k + 1) as i64)).collect())
        .collect();
    let p = Polytope::hull(&cube).unwrap();
    let q = Polytope::hull(&simplex).unwrap();
    c.bench_function("mixed_volume/cube-cube-simplex", |b| b.iter(|| mixed_volume(&[&p, &p, &q]).unwrap()));
}

fn checks(c: &mut Criterion) {
    let mut g = c.benchmark_group("checks");
    g.sample_size(20);
    for dim in [2usize, 3] {
        let (a, gamma) = random_pair(9, dim);
        g.bench_with_input(BenchmarkId::new("theorem_a", dim), &(a, gamma), |b, (a, gamma)| {
            b.iter(|| check_theorem_a(a, gamma).unwrap())
        });
        let (x, y) = random_nef_pair(9, dim);
        g.bench_with_input(BenchmarkId::new("diskant", dim), &(x, y), |b, (x, y)| {
            b.iter(|| check_diskant(x, y, 60).unwrap())
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("orthogonality/20", |b| b.iter(|| run_suite(SuiteKind::Orthogonality, 2, 20, 0)));
    g.finish();
}

criterion_group!(benches, fixtures, volumes, mixed, checks, suites);
criterion_main!(benches);
