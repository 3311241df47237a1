use criterion::{criterion_group, criterion_main, Criterion};
use gamma2d::{
    boost_operator, boost_spinor, build_representation, conjugate_representation, find_intertwiner,
    full_check, so3_random, spinor, BoostAxis, Branch, GammaRep, Mat2, Momentum,
};
use std::hint::black_box;

fn rep(seed: u64) -> GammaRep {
    build_representation(&so3_random(seed)).unwrap()
}

fn representations(c: &mut Criterion) {
    let params = so3_random(1);
    c.bench_function("so3_random", |b| b.iter(|| so3_random(black_box(7))));
    c.bench_function("build_representation", |b| {
        b.iter(|| build_representation(black_box(&params)))
    });
    let r = rep(1);
    c.bench_function("full_check", |b| {
        b.iter(|| full_check(black_box(&r), 1e-12))
    });
}

fn spinors(c: &mut Criterion) {
    let r = rep(2);
    let mom = Momentum::new(0.3, -1.2, 0.8).unwrap();
    c.bench_function("spinor", |b| {
        b.iter(|| spinor(black_box(&r), black_box(&mom), Branch::Positive))
    });
    let sol = spinor(&r, &mom, Branch::Negative).unwrap();
    c.bench_function("boost_operator", |b| {
        b.iter(|| boost_operator(black_box(&r), 1.3, BoostAxis::X2))
    });
    let op = boost_operator(&r, 1.3, BoostAxis::X2).unwrap();
    c.bench_function("boost_spinor", |b| {
        b.iter(|| boost_spinor(black_box(&op), black_box(&sol)))
    });
}

fn intertwiners(c: &mut Criterion) {
    let (a, b_rep) = (rep(3), rep(4));
    c.bench_function("find_intertwiner", |b| {
        b.iter(|| find_intertwiner(black_box(&a), black_box(&b_rep), 1e-9))
    });
    let m = Mat2::real(2.0, 0.5, -0.3, 1.0);
    let target =
        GammaRep::from_parts_unchecked(*a.params(), conjugate_representation(&a, &m).unwrap());
    c.bench_function("find_intertwiner_planted", |b| {
        b.iter(|| find_intertwiner(black_box(&a), black_box(&target), 1e-9))
    });
}

criterion_group!(benches, representations, spinors, intertwiners);
criterion_main!(benches);
