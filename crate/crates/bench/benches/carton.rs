use std::hint::black_box;

use carton_bench::heaviest_triple;
use carton_core::growth::infusion;
use carton_core::jdt::{evacuation, rectification};
use carton_core::{canonical_tableaux, count, enumerate_cartons_generic, Rectangle, SkewShape, StandardTableau};
use criterion::{criterion_group, criterion_main, Criterion};

fn counting(c: &mut Criterion) {
    for (ell, k) in [(3, 3), (3, 4), (4, 4)] {
        let rect = Rectangle::new(ell, k).unwrap();
        let [l, m, n] = heaviest_triple(rect);
        c.bench_function(&format!("count {rect} {l} {m} {n}"), |b| {
            b.iter(|| count(rect, black_box(&l), black_box(&m), black_box(&n), None).unwrap())
        });
    }
}

fn generic(c: &mut Criterion) {
    let rect = Rectangle::new(3, 3).unwrap();
    let [l, m, n] = heaviest_triple(rect);
    let ts = canonical_tableaux(&l, &m, &n);
    c.bench_function(&format!("generic search {rect} {l} {m} {n}"), |b| {
        b.iter(|| enumerate_cartons_generic(rect, &ts[0], &ts[1], &ts[2]).unwrap())
    });
}

fn sliding(c: &mut Criterion) {
    let outer = carton_core::Partition::new(vec![5, 4, 3, 1]).unwrap();
    let inner = carton_core::Partition::new(vec![3, 1]).unwrap();
    let skew = SkewShape::new(outer.clone(), inner.clone()).unwrap();
    let t = StandardTableau::superstandard(&skew);
    c.bench_function("rectify 13/4", |b| b.iter(|| rectification(black_box(&t))));

    let straight = StandardTableau::superstandard(&SkewShape::straight(outer));
    c.bench_function("evacuate (5,4,3,1)", |b| b.iter(|| evacuation(black_box(&straight))));

    let u = StandardTableau::superstandard(&SkewShape::straight(inner));
    c.bench_function("infuse (3,1) with 13/4", |b| b.iter(|| infusion(black_box(&u), black_box(&t)).unwrap()));
}

criterion_group!(benches, counting, generic, sliding);
criterion_main!(benches);
