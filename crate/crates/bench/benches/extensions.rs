use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use forge_bench::{toroid, two_hat_cube};
use forge_core::automorphisms::AutomorphismGroup;
use forge_core::extender::is_polytopal;
use forge_core::friendly::friendly_group;
use forge_core::universal::UniversalBall;

fn derive(c: &mut Criterion) {
    let ext = two_hat_cube();
    c.bench_function("derive two-hat cube", |b| b.iter(|| black_box(&ext).derive()));
}

fn checks(c: &mut Criterion) {
    let t = toroid(6, 6);
    c.bench_function("is_maniplex toroid 6x6", |b| b.iter(|| black_box(&t).is_maniplex()));
    c.bench_function("is_polytopal toroid 6x6", |b| b.iter(|| is_polytopal(black_box(&t.graph))));
    c.bench_function("automorphisms toroid 6x6", |b| {
        b.iter(|| AutomorphismGroup::of(black_box(&t.graph)).unwrap())
    });
}

fn pre_extender(c: &mut Criterion) {
    let ext = two_hat_cube();
    c.bench_function("friendly group two-hat cube", |b| b.iter(|| friendly_group(black_box(ext.pre())).unwrap()));
    c.bench_function("universal ball radius 3", |b| {
        b.iter(|| UniversalBall::new(black_box(ext.pre()), 3).unwrap())
    });
}

criterion_group!(benches, derive, checks, pre_extender);
criterion_main!(benches);
