//! Single-threaded pool against the default rayon pool on the heavier
//! kernels. Each iteration builds a fresh ring so the per-ring equation
//! cache starts cold.

use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use liecohom::catalog::rings_on;
use liecohom::cohomology::h2;
use liecohom::schur::schur_multiplier;
use liecohom::{FinAbGroup, LieRing};

type Build = fn() -> LieRing;

fn heis2() -> LieRing {
    LieRing::heisenberg(2).unwrap()
}

fn elem_abelian_16() -> LieRing {
    LieRing::abelian(&[2, 2, 2, 2]).unwrap()
}

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let seq = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let par = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("sequential", seq), ("parallel", par)]
}

fn bench_h2(c: &mut Criterion) {
    let mut group = c.benchmark_group("h2");
    group.sample_size(10);
    let cases: [(&str, Build, u64); 2] = [("heis2_z2", heis2, 2), ("z2^4_z4", elem_abelian_16, 4)];
    for (name, pool) in pools() {
        for (case, build, m) in cases {
            let coeff = FinAbGroup::cyclic(m);
            group.bench_with_input(BenchmarkId::new(name, case), &coeff, |b, coeff| {
                b.iter_batched(
                    build,
                    |l| pool.install(|| h2(&l, coeff).unwrap()),
                    BatchSize::SmallInput,
                )
            });
        }
    }
    group.finish();
}

fn bench_schur(c: &mut Criterion) {
    let mut group = c.benchmark_group("schur");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new(name, "heis2"), |b| {
            b.iter_batched(
                heis2,
                |l| pool.install(|| schur_multiplier(&l).unwrap()),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_catalog(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new(name, "rings_on_2x2x2"), |b| {
            b.iter(|| pool.install(|| rings_on(&[2, 2, 2])))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_h2, bench_schur, bench_catalog);
criterion_main!(benches);
