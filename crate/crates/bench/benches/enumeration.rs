use criterion::{criterion_group, criterion_main, Criterion};
use tomescu_core::conjecture::enumerate_connected;
use tomescu_core::graph::Graph;

fn enumeration_benches(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("connected_order_6", |b| {
        b.iter(|| enumerate_connected(std::hint::black_box(6), |_| true).unwrap())
    });
    group.finish();

    let paley9 = Graph::new(
        9,
        &[
            (0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 7), (7, 8), (8, 6),
            (0, 3), (3, 6), (6, 0), (1, 4), (4, 7), (7, 1), (2, 5), (5, 8), (8, 2),
        ],
    )
    .unwrap();
    let mut group = c.benchmark_group("canonical_form");
    group.bench_function("paley_9", |b| {
        b.iter(|| std::hint::black_box(&paley9).canonical_form())
    });
    group.bench_function("complete_12", |b| {
        let k12 = Graph::complete(12);
        b.iter(|| std::hint::black_box(&k12).canonical_form())
    });
    group.finish();
}

criterion_group!(benches, enumeration_benches);
criterion_main!(benches);
