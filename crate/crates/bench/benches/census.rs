use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quadmap::census::{burnside_count, formula_counts, orbit_count, FixedSource, OrbitOptions};
use quadmap::complete::{decode, fixed_maps_count, parse_code, twist_class_fixed_count};
use quadmap::map::{automorphism_group, canonical_form};
use quadmap::{BetaVariant, CycleType, Permutation, SurfaceKind};

fn formulas(c: &mut Criterion) {
    let mut group = c.benchmark_group("formula_counts");
    for n in [5usize, 11, 29] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| formula_counts(black_box(n), BetaVariant::Proof))
        });
    }
    group.finish();
}

fn fixed_counts(c: &mut Criterion) {
    let id5 = Permutation::identity(5);
    c.bench_function("fixed_maps_count/n5_identity_orientable", |b| {
        b.iter(|| fixed_maps_count(5, black_box(&id5), false, SurfaceKind::Orientable))
    });
    c.bench_function("fixed_maps_count/n5_identity_non_orientable", |b| {
        b.iter(|| fixed_maps_count(5, black_box(&id5), false, SurfaceKind::NonOrientable))
    });
    let g = CycleType::new(vec![1, 3, 3]).unwrap().representative();
    c.bench_function("twist_class_fixed_count/n7_133", |b| {
        b.iter(|| twist_class_fixed_count(7, black_box(&g), SurfaceKind::LocallyOrientable))
    });
}

fn censuses(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("burnside/n5_locally_orientable", |b| {
        b.iter(|| burnside_count(5, SurfaceKind::LocallyOrientable, FixedSource::Dfs, BetaVariant::Proof))
    });
    group.bench_function("orbit/n4_locally_orientable", |b| {
        b.iter(|| orbit_count(4, SurfaceKind::LocallyOrientable, &OrbitOptions::default()))
    });
    group.bench_function("orbit/n5_orientable", |b| {
        b.iter(|| orbit_count(5, SurfaceKind::Orientable, &OrbitOptions::default()))
    });
    group.finish();
}

fn maps(c: &mut Criterion) {
    let code = parse_code("kn v1; n=5; rot[1]=2+ 3+ 4+ 5+; rot[2]=1+ 3+ 5+ 4+; rot[3]=1+ 2+ 4+ 5+; rot[4]=1+ 3+ 2+ 5+; rot[5]=1+ 2+ 4+ 3+")
        .unwrap();
    let m = decode(&code);
    c.bench_function("canonical_form/k5", |b| b.iter(|| canonical_form(black_box(&m))));
    c.bench_function("automorphism_group/k5", |b| b.iter(|| automorphism_group(black_box(&m))));
}

criterion_group!(benches, formulas, fixed_counts, censuses, maps);
criterion_main!(benches);
