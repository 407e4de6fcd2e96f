use criterion::{criterion_group, criterion_main, Criterion};

use favdist::{
    build_digraph, build_extremal, detect_suspension, newman_enumerate, optimal_radii, DEFAULT_TOL,
};

fn bench_construction(c: &mut Criterion) {
    c.bench_function("build_extremal_100", |b| {
        b.iter(|| build_extremal(std::hint::black_box(100)).unwrap())
    });
    let ps = build_extremal(100).unwrap();
    c.bench_function("count_arcs_100", |b| {
        b.iter(|| build_digraph(std::hint::black_box(&ps), DEFAULT_TOL).unwrap().arc_count())
    });
}

fn bench_mode_oracle(c: &mut Criterion) {
    let ps = build_extremal(100).unwrap();
    c.bench_function("optimal_radii_100", |b| {
        b.iter(|| optimal_radii(std::hint::black_box(&ps.points), DEFAULT_TOL).unwrap())
    });
}

fn bench_detection(c: &mut Criterion) {
    let ps = build_extremal(100).unwrap();
    c.bench_function("detect_suspension_100", |b| {
        b.iter(|| detect_suspension(std::hint::black_box(&ps), 1e-6, 64, 0).unwrap())
    });
}

fn bench_newman(c: &mut Criterion) {
    c.bench_function("newman_enumerate_32", |b| {
        b.iter(|| newman_enumerate(std::hint::black_box(32), 1e-12).unwrap())
    });
}

criterion_group!(benches, bench_construction, bench_mode_oracle, bench_detection, bench_newman);
criterion_main!(benches);
