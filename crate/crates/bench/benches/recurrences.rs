use apery_core::analytic::catalan_digits;
use apery_core::certificate::verify_telescoping;
use apery_core::hypergeom::partial_fractions;
use apery_core::sequences::{pairs, Family};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn sequences(c: &mut Criterion) {
    let mut group = c.benchmark_group("pairs");
    for family in Family::ALL {
        group.bench_with_input(BenchmarkId::new(family.name(), 200), &family, |b, &f| {
            b.iter(|| pairs(f, black_box(200)).len())
        });
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    c.bench_function("partial_fractions/10", |b| b.iter(|| partial_fractions(black_box(10))));
    c.bench_function("verify_telescoping/10", |b| b.iter(|| verify_telescoping(black_box(10)).unwrap()));
}

fn digits(c: &mut Criterion) {
    c.bench_function("catalan_digits/200", |b| b.iter(|| catalan_digits(black_box(200))));
}

criterion_group!(benches, sequences, decomposition, digits);
criterion_main!(benches);
