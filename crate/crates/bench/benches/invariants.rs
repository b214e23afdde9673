use bandcalc_core::braid::torus_braid;
use bandcalc_core::diagram::{attach_band, closure, orient, pinch_band_spec};
use bandcalc_core::invariants::{
    alexander_from_diagram, determinant_from_diagram, invariant_profile, jones,
    signature_from_diagram,
};
use bandcalc_core::pinch::batson_table;
use bandcalc_core::search::{enumerate_bands, search_to_profile, SearchBudget};
use bandcalc_core::table::knot_profile;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bench_invariants(c: &mut Criterion) {
    let t94 = orient(&closure(&torus_braid(9, 4).unwrap()));
    c.bench_function("jones_t94", |b| {
        b.iter(|| jones(black_box(&t94)).unwrap())
    });
    c.bench_function("alexander_t94", |b| {
        b.iter(|| alexander_from_diagram(black_box(&t94)).unwrap())
    });
    c.bench_function("signature_t94", |b| {
        b.iter(|| signature_from_diagram(black_box(&t94)).unwrap())
    });
    c.bench_function("determinant_t94", |b| {
        b.iter(|| determinant_from_diagram(black_box(&t94)).unwrap())
    });
    c.bench_function("profile_t94", |b| {
        b.iter(|| invariant_profile(black_box(&t94)).unwrap())
    });
}

fn bench_band(c: &mut Criterion) {
    let t94 = orient(&closure(&torus_braid(9, 4).unwrap()));
    let band = pinch_band_spec(&t94, 1).unwrap();
    c.bench_function("pinch_band_t94", |b| {
        b.iter(|| attach_band(black_box(&t94), black_box(&band)).unwrap())
    });
}

fn bench_pinch_table(c: &mut Criterion) {
    c.bench_function("batson_table_30", |b| {
        b.iter(|| batson_table(black_box(30), black_box(30)).unwrap())
    });
}

fn bench_search(c: &mut Criterion) {
    let t94 = orient(&closure(&torus_braid(9, 4).unwrap()));
    let budget = SearchBudget {
        path_len: 0,
        twists: 0,
        ..SearchBudget::default()
    };
    c.bench_function("enumerate_t94_l0", |b| {
        b.iter(|| enumerate_bands(black_box(&t94), black_box(&budget)))
    });
    let target = knot_profile("6_1").unwrap();
    let budget_l1 = SearchBudget {
        path_len: 1,
        twists: 1,
        ..SearchBudget::default()
    };
    c.bench_function("search_t94_to_6_1_l1w1", |b| {
        b.iter(|| {
            search_to_profile(
                black_box(&t94),
                black_box(&target),
                black_box(&budget_l1),
                "t94",
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, bench_invariants, bench_band, bench_pinch_table, bench_search);
criterion_main!(benches);
