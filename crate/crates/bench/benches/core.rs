use braidorb::braid::{free_tuple, hurwitz_act, pure_sigma_ij};
use braidorb::charvar::orbit_of_rep;
use braidorb::classify::gate;
use braidorb::cyclo::z;
use braidorb::reflgrp::{g25, ReflGroup, Stratifier, Which};
use braidorb::Cyclotomic;
use braidorb_bench::{icosahedral_generic, seven_punctures};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn cyclotomic(c: &mut Criterion) {
    let a = &z(12, 1) + &z(12, 5);
    let b = &z(9, 2) - &Cyclotomic::from_int(3);
    c.bench_function("cyclotomic mul, mixed conductors", |x| x.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("cyclotomic inverse", |x| x.iter(|| black_box(&a).inv()));
}

fn orbits(c: &mut Criterion) {
    let ico = icosahedral_generic();
    c.bench_function("orbit of icosahedral generic row", |x| x.iter(|| orbit_of_rep(black_box(&ico), 10_000).unwrap()));
    let seven = seven_punctures();
    c.bench_function("gate on seven punctures", |x| x.iter(|| gate(black_box(&seven)).unwrap()));
}

fn braids(c: &mut Criterion) {
    let w = pure_sigma_ij(7, 2, 6).unwrap();
    let t = free_tuple(7);
    c.bench_function("Hurwitz action of a pure generator", |x| x.iter(|| hurwitz_act(black_box(&w), black_box(&t))));
}

fn groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("reflection groups");
    g.sample_size(10);
    g.bench_function("order-648 closure", |x| x.iter(|| ReflGroup::closure(Which::G25, &g25(), 10_000).unwrap()));
    let s = Stratifier::new(ReflGroup::closure(Which::G25, &g25(), 10_000).unwrap()).unwrap();
    let v = vec![Cyclotomic::from_int(1), Cyclotomic::from_int(2), Cyclotomic::from_int(5)];
    g.bench_function("stratify a generic line", |x| x.iter(|| s.stratify(black_box(&v)).unwrap()));
    g.finish();
}

criterion_group!(benches, cyclotomic, orbits, braids, groups);
criterion_main!(benches);
