use criterion::{black_box, criterion_group, criterion_main, Criterion};
use killing_lie::centralizer::hermitian_generator;
use killing_lie::weyl::{rho, weyl_orbit};
use killing_lie::{
    ad_squared_eigenspaces, build_algebra_basis, classify_hermitian_pair, AlgebraKind, RootKind,
    RootSystem,
};

fn root_systems(c: &mut Criterion) {
    c.bench_function("build E7", |b| {
        b.iter(|| RootSystem::build(black_box(RootKind::E7), 7).unwrap())
    });
    c.bench_function("build D8", |b| {
        b.iter(|| RootSystem::build(black_box(RootKind::D), 8).unwrap())
    });
}

fn orbits(c: &mut Criterion) {
    let e6 = RootSystem::build(RootKind::E6, 6).unwrap();
    let r = rho(&e6);
    let mut g = c.benchmark_group("orbit");
    g.sample_size(10);
    g.bench_function("E6 rho (51840 points)", |b| {
        b.iter(|| weyl_orbit(&e6, black_box(&r)).unwrap())
    });
    let e7 = RootSystem::build(RootKind::E7, 7).unwrap();
    let z = hermitian_generator(&e7, 6).unwrap();
    g.bench_function("E7 Hermitian generator", |b| {
        b.iter(|| weyl_orbit(&e7, black_box(&z)).unwrap())
    });
    g.finish();
}

fn classification(c: &mut Criterion) {
    let e7 = RootSystem::build(RootKind::E7, 7).unwrap();
    let z = hermitian_generator(&e7, 6).unwrap();
    c.bench_function("classify E7", |b| {
        b.iter(|| classify_hermitian_pair(&e7, black_box(&z)).unwrap())
    });
    let d6 = RootSystem::build(RootKind::D, 6).unwrap();
    let z = hermitian_generator(&d6, 5).unwrap();
    c.bench_function("classify D6", |b| {
        b.iter(|| classify_hermitian_pair(&d6, black_box(&z)).unwrap())
    });
}

fn eigenspaces(c: &mut Criterion) {
    let mut g = c.benchmark_group("matrix");
    g.sample_size(10);
    g.bench_function("basis so(8)", |b| {
        b.iter(|| build_algebra_basis(AlgebraKind::So, black_box(8)).unwrap())
    });
    let basis = build_algebra_basis(AlgebraKind::Su, 5).unwrap();
    let h = hermitian_generator(basis.root_system(), 1).unwrap();
    let z = basis.cartan_element(&h).unwrap();
    g.bench_function("eigenspaces su(5)", |b| {
        b.iter(|| ad_squared_eigenspaces(&basis, black_box(&z)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, root_systems, orbits, classification, eigenspaces);
criterion_main!(benches);
