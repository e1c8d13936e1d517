use criterion::{criterion_group, criterion_main, Criterion};
use puzzles_core::{count, triangle_boundary, weight_sum, BinaryString, PieceSet};

fn side(text: &str) -> BinaryString {
    text.parse().unwrap()
}

fn bench_counts(c: &mut Criterion) {
    let b = triangle_boundary(
        &side("10101010"),
        &side("01010101"),
        &side("00110101"),
    )
    .unwrap();
    c.bench_function("count classical n=8", |bench| {
        bench.iter(|| count(std::hint::black_box(&b), &PieceSet::classical()))
    });
    c.bench_function("weight equivariant n=8", |bench| {
        bench.iter(|| weight_sum(std::hint::black_box(&b), &PieceSet::with_equivariant()))
    });
}

criterion_group!(benches, bench_counts);
criterion_main!(benches);
