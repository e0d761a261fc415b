use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use schurmatch::{
    build_graph, enumerate_matchings, equivalence_class, forward, inverse, reduce, schur_expand,
    shift_expand, bessel_theta, ShapeVectorCache,
};
use schurmatch_bench::{nested_matching, short_vector};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate M(10,0)", |b| {
        b.iter(|| enumerate_matchings(black_box(10), black_box(0)))
    });
    c.bench_function("enumerate M(11,3)", |b| {
        b.iter(|| enumerate_matchings(black_box(11), black_box(3)))
    });
}

fn bench_reduction(c: &mut Criterion) {
    let m = nested_matching();
    c.bench_function("reduce nested 12-ring", |b| b.iter(|| reduce(black_box(&m))));
    let all = enumerate_matchings(10, 0);
    c.bench_function("roundtrip M(10,0)", |b| {
        b.iter(|| {
            for m in &all {
                let (core, t) = forward(black_box(m));
                black_box(inverse(&core, &t).unwrap());
            }
        })
    });
}

fn bench_expansion(c: &mut Criterion) {
    let v = short_vector(10, 0);
    let cache = ShapeVectorCache::in_memory();
    // Warm the cache so the loop measures elimination, not enumeration.
    schur_expand(&v, &cache).unwrap();
    c.bench_function("schur_expand M(10,0)", |b| {
        b.iter(|| schur_expand(black_box(&v), &cache).unwrap())
    });
}

fn bench_classes(c: &mut Criterion) {
    let m: schurmatch::Matching = "{(1,2),(3,4),(5,6),(7,8),(9,10)}".parse().unwrap();
    c.bench_function("equivalence class of the 10-chain", |b| {
        b.iter(|| equivalence_class(black_box(&m)))
    });
}

fn bench_schreier(c: &mut Criterion) {
    c.bench_function("build Schreier graph 2n=8", |b| {
        b.iter(|| build_graph(black_box(8)).unwrap())
    });
}

fn bench_bessel(c: &mut Criterion) {
    c.bench_function("theta_40 shifted to x=-1", |b| {
        b.iter(|| shift_expand(&bessel_theta(black_box(40)), -1))
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_reduction,
    bench_expansion,
    bench_classes,
    bench_schreier,
    bench_bessel
);
criterion_main!(benches);
