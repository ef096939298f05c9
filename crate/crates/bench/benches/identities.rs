use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use schurpaths::exact_ring::PolyMatrix;
use schurpaths::identities::{verify_kuperberg, verify_q_binet_cauchy};
use schurpaths::paths::watermelon_genfunc;
use schurpaths::planepartitions::zq;
use schurpaths::qcombinat::qbinomial;
use schurpaths::schur::{bialternant, tableau_sum};
use schurpaths::{GeometricPoint, Partition};

fn schur_routes(c: &mut Criterion) {
    let lam = Partition::new(vec![3, 2, 1]).unwrap();
    let pt = GeometricPoint::principal(4);
    let mut g = c.benchmark_group("schur_321_m4");
    g.bench_function("bialternant", |b| b.iter(|| bialternant(black_box(&lam), &pt).unwrap()));
    g.bench_function("tableaux", |b| b.iter(|| tableau_sum(black_box(&lam), &pt).unwrap()));
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("qbinomial_det");
    for n in [3usize, 5] {
        let m = PolyMatrix::from_fn(n, n, |i, j| qbinomial((2 * n + i) as i64, (n + j) as i64));
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| m.det()));
    }
    g.finish();
}

fn identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("identities");
    g.bench_function("q_binet_cauchy_4_4", |b| b.iter(|| verify_q_binet_cauchy(4, 4).unwrap()));
    g.bench_function("kuperberg_4_4", |b| b.iter(|| verify_kuperberg(4, 4).unwrap()));
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration_3_3_3");
    g.sample_size(20);
    g.bench_function("watermelons", |b| b.iter(|| watermelon_genfunc(3, 3, 0).unwrap()));
    g.bench_function("plane_partitions", |b| b.iter(|| zq(3, 3, 3)));
    g.finish();
}

criterion_group!(benches, schur_routes, determinants, identities, enumeration);
criterion_main!(benches);
