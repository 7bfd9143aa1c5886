use criterion::{black_box, criterion_group, criterion_main, Criterion};

use bitree_bench::{long_path, long_path_code};
use bitree_core::{
    breakdown, canonical_code, decode, elementary_move, enumerate_all, lex, parity_census,
    Direction, VertexRef, DEFAULT_MAX_TREES,
};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_3_3", |b| {
        b.iter(|| enumerate_all(black_box(3), black_box(3), DEFAULT_MAX_TREES).unwrap())
    });
    c.bench_function("parity_census_3_3", |b| {
        b.iter(|| parity_census(black_box(3), black_box(3), DEFAULT_MAX_TREES).unwrap())
    });
}

fn bench_codec(c: &mut Criterion) {
    let text = long_path_code(24);
    c.bench_function("lex_decode_path_48", |b| {
        b.iter(|| decode(&lex(black_box(&text)).unwrap()).unwrap())
    });
    let tree = long_path(24);
    c.bench_function("canonical_code_path_48", |b| {
        b.iter(|| canonical_code(black_box(&tree)))
    });
}

fn bench_parity(c: &mut Criterion) {
    let code = lex(&long_path_code(24)).unwrap();
    c.bench_function("breakdown_path_48", |b| {
        b.iter(|| breakdown(black_box(&code)).unwrap())
    });
}

fn bench_moves(c: &mut Criterion) {
    let tree = long_path(24);
    let leaf = VertexRef::black(24);
    c.bench_function("elementary_move_path_48", |b| {
        b.iter(|| elementary_move(black_box(&tree), leaf, Direction::Ccw).unwrap())
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_codec,
    bench_parity,
    bench_moves
);
criterion_main!(benches);
