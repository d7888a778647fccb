use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use goodmap_core::{
    image_preserves_constructible, is_good_characterization, is_good_definition, is_weak_good,
    run_sweep, FiniteSpace, SizeCap, SpaceMap, SweepConfig,
};

fn maps_up_to(n: usize) -> Vec<SpaceMap> {
    let spaces: Vec<Arc<FiniteSpace>> = (0..=n)
        .flat_map(FiniteSpace::all_preorders)
        .map(Arc::new)
        .collect();
    let mut maps = Vec::new();
    for x in &spaces {
        for y in &spaces {
            for a in x.monotone_assignments(y) {
                maps.push(SpaceMap::new(x.clone(), y.clone(), a).unwrap());
            }
        }
    }
    maps
}

fn deciders(c: &mut Criterion) {
    let cap = SizeCap::DEFAULT;
    let maps = maps_up_to(2);
    let mut group = c.benchmark_group("all maps on <= 2 points");
    group.bench_function("definition", |b| {
        b.iter(|| {
            maps.iter()
                .filter(|f| is_good_definition(f, cap).unwrap().is_good())
                .count()
        })
    });
    group.bench_function("characterization", |b| {
        b.iter(|| {
            maps.iter()
                .filter(|f| is_good_characterization(f, cap).unwrap())
                .count()
        })
    });
    group.bench_function("constructible transfer", |b| {
        b.iter(|| {
            maps.iter()
                .filter(|f| image_preserves_constructible(f, cap).unwrap())
                .count()
        })
    });
    group.bench_function("weak good", |b| {
        b.iter(|| {
            maps.iter()
                .filter(|f| is_weak_good(f, cap).unwrap().is_weak_good())
                .count()
        })
    });
    group.finish();

    let big = Arc::new(FiniteSpace::discrete(8));
    let f = SpaceMap::identity(big);
    c.bench_function("definition on discrete 8-point identity", |b| {
        b.iter(|| is_good_definition(black_box(&f), cap).unwrap())
    });
}

fn sweep(c: &mut Criterion) {
    let mut config = SweepConfig::new(42);
    config.sampled_pairs = 50;
    config.composition_pairs = 100;
    config.oracle_points = 3;
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("reduced default sweep", |b| {
        b.iter(|| run_sweep(black_box(config)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, deciders, sweep);
criterion_main!(benches);
