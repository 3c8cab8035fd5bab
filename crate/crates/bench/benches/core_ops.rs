use criterion::{criterion_group, criterion_main, Criterion};

use belted_core::{
    betti_bigraded, c60, canonical_code, dodecahedron, generate, k_belts, BettiMode,
};

fn bench_belts(c: &mut Criterion) {
    let p = c60();
    c.bench_function("k_belts c60 k=5", |b| b.iter(|| k_belts(&p, 5)));
    c.bench_function("k_belts c60 k=3", |b| b.iter(|| k_belts(&p, 3)));
}

fn bench_canonical(c: &mut Criterion) {
    let p = c60();
    c.bench_function("canonical_code c60", |b| b.iter(|| canonical_code(&p, true)));
}

fn bench_betti(c: &mut Criterion) {
    let p = dodecahedron();
    let mut g = c.benchmark_group("betti");
    g.sample_size(10);
    g.bench_function("full sweep dodecahedron", |b| {
        b.iter(|| betti_bigraded(&p, BettiMode::Full).unwrap())
    });
    g.bench_function("shortcuts c60", |b| {
        let q = c60();
        b.iter(|| betti_bigraded(&q, BettiMode::BeltShortcuts).unwrap())
    });
    g.finish();
}

fn bench_generate(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    g.sample_size(10);
    g.bench_function("p6<=3", |b| b.iter(|| generate(3, false)));
    g.finish();
}

criterion_group!(benches, bench_belts, bench_canonical, bench_betti, bench_generate);
criterion_main!(benches);
