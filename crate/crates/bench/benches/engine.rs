use criterion::{black_box, criterion_group, criterion_main, Criterion};

use linfold_bench::{example, generic};
use linfold_core::fold::fold_ideal;
use linfold_core::groebner::buchberger;
use linfold_core::ot2::ot2_ideal;
use linfold_core::{minimal_free_resolution, Budget};

fn groebner(c: &mut Criterion) {
    let a = generic(3, 6);
    let f = fold_ideal(&a, 4);
    c.bench_function("buchberger I_4 generic(3,6)", |b| {
        b.iter(|| buchberger(a.ring(), black_box(f.gens()), &Budget::default()).unwrap())
    });
}

fn resolution(c: &mut Criterion) {
    let a = example();
    c.bench_function("resolution I_2 example", |b| {
        b.iter(|| minimal_free_resolution(&fold_ideal(black_box(&a), 2).ideal).unwrap())
    });
    let g = generic(3, 6);
    c.bench_function("resolution I_4 generic(3,6)", |b| {
        b.iter(|| minimal_free_resolution(&fold_ideal(black_box(&g), 4).ideal).unwrap())
    });
}

fn fiber(c: &mut Criterion) {
    let a = example();
    c.bench_function("ot2 example", |b| b.iter(|| ot2_ideal(black_box(&a)).unwrap()));
    let g = generic(3, 5);
    c.bench_function("ot2 generic(3,5)", |b| b.iter(|| ot2_ideal(black_box(&g)).unwrap()));
}

criterion_group! {
    name = engine;
    config = Criterion::default().sample_size(10);
    targets = groebner, resolution, fiber
}
criterion_main!(engine);
