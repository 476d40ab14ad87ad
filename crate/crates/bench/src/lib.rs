//! Benchmark bodies shared by the bench targets.

use std::hint::black_box;

use criterion::Criterion;
use nonstoch_core::region::DEFAULT_BUDGET;
use nonstoch_core::{
    capacity_region, nc_info, nonstochastic_info, oracle_region, presets, single_user_capacity, synthesize_code, tuple,
    Bounds, Channel, CooperationStructure, Strategy, StructureEntry, World, DEFAULT_WORLD_CAP,
};

/// The strong square of the pentagon with the codebook `{(i, 2i mod 5)}`.
fn pentagon_square_structure() -> CooperationStructure {
    let a = (0..5)
        .map(|i| tuple(&[&i.to_string(), &(2 * i % 5).to_string()]).unwrap())
        .collect();
    let b = [tuple(&["0", "0"]).unwrap()].into_iter().collect();
    CooperationStructure::new(
        2,
        vec![StructureEntry {
            label: "u1".into(),
            a,
            b,
        }],
    )
    .unwrap()
}

/// A dense four-variable world on four symbols.
fn grid_world() -> World {
    let mut outcomes = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let d = (a + b * c) % 4;
                let t: Vec<String> = [a, b, c, d].iter().map(u8::to_string).collect();
                let refs: Vec<&str> = t.iter().map(String::as_str).collect();
                outcomes.push(tuple(&refs).unwrap());
            }
        }
    }
    World::new(&["A", "B", "C", "D"], outcomes).unwrap()
}

pub fn regions(c: &mut Criterion) {
    let corpus: Vec<(&str, Channel)> = presets::corpus();
    let mut group = c.benchmark_group("region");
    for (name, ch) in &corpus {
        group.bench_function(format!("exhaustive/{name}/1"), |b| {
            b.iter(|| capacity_region(black_box(ch), 1, &Bounds::default(), Strategy::Exhaustive).unwrap())
        });
        group.bench_function(format!("packing/{name}/2"), |b| {
            b.iter(|| capacity_region(black_box(ch), 2, &Bounds::default(), Strategy::Packing).unwrap())
        });
    }
    group.sample_size(10);
    let adder = presets::binary_adder();
    group.bench_function("oracle/adder/2", |b| {
        b.iter(|| oracle_region(black_box(&adder), 2, None, DEFAULT_BUDGET).unwrap())
    });
    group.finish();

    let pentagon = presets::pentagon();
    let structure = pentagon_square_structure();
    c.bench_function("synthesize/pentagon/2", |b| {
        b.iter(|| synthesize_code(black_box(&pentagon), &structure, DEFAULT_WORLD_CAP).unwrap())
    });
    c.bench_function("single_user/pentagon/2", |b| {
        b.iter(|| single_user_capacity(black_box(&pentagon), 2, DEFAULT_BUDGET).unwrap())
    });
}

pub fn information(c: &mut Criterion) {
    let w = grid_world();
    c.bench_function("info/grid", |b| {
        b.iter(|| nonstochastic_info(black_box(&w), &["A", "B"], &["C", "D"]).unwrap())
    });
    c.bench_function("nc_info/grid", |b| {
        b.iter(|| nc_info(black_box(&w), &["A"], &["B"], &["C", "D"]).unwrap())
    });
}
