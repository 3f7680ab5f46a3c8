use criterion::{criterion_group, criterion_main, Criterion};
use macx_core::homology::{betti_z, homology_r};
use macx_core::SimplicialComplex;
use std::hint::black_box;

fn cycles(c: &mut Criterion) {
    for p in [6, 8, 10] {
        let k = SimplicialComplex::cycle(p).unwrap();
        c.bench_function(&format!("homology_r C_{p}"), |b| b.iter(|| homology_r(black_box(&k))));
    }
    let k = SimplicialComplex::cycle(6).unwrap().join(&SimplicialComplex::simplex(2).unwrap()).unwrap();
    c.bench_function("betti_z C_6 * simplex", |b| b.iter(|| betti_z(black_box(&k))));
}

fn sweep(c: &mut Criterion) {
    let cfg = macx_core::enumeration::SweepConfig::new(5).unwrap();
    c.bench_function("sweep n<=5", |b| b.iter(|| macx_core::enumeration::run_sweep(black_box(&cfg)).unwrap()));
}

criterion_group!(benches, cycles, sweep);
criterion_main!(benches);
