use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use rcwb_bench::bench_model;
use rcwb_core::classical::{classical_pair, join_via_amp};
use rcwb_core::kleisli::KleisliModel;
use rcwb_core::rescat::{laws, Budget, Model};
use rcwb_core::suites::{run_finpar, Selection};

fn hom_enumeration(c: &mut Criterion) {
    let model = bench_model(3, 24);
    let objs = model.objects();
    let a = objs.iter().find(|o| o.size() == 3).expect("a size-3 object").clone();
    c.bench_function("hom_enumeration_3_to_3", |b| {
        b.iter(|| {
            let mut count = 0usize;
            for n in 0..model.hom_size(&a, &a) {
                count += model.hom_nth(&a, &a, n).defined_count();
            }
            count
        })
    });
}

fn classical_constructions(c: &mut Criterion) {
    let model = bench_model(3, 24);
    let a = model.lookup_object("X").expect("atom").clone();
    let maps = model.hom(&a, &a);
    c.bench_function("classical_pair_2x2", |b| {
        b.iter_batched(
            || (maps[5].clone(), maps[7].clone()),
            |(f, g)| classical_pair(&model, &f, &g).expect("pairing"),
            BatchSize::SmallInput,
        )
    });
    let f = &maps[1];
    let g = &maps[3];
    if f.compatible(g).expect("parallel") {
        c.bench_function("join_via_amp_2x2", |b| {
            b.iter(|| join_via_amp(&model, f, g).expect("compatible"))
        });
    }
}

fn axiom_suite(c: &mut Criterion) {
    let model = bench_model(2, 12);
    let budget = Budget {
        max_size: 2,
        max_tuples: 20_000,
        samples: 2_000,
        unique_samples: 60,
        ..Budget::default()
    };
    c.bench_function("restriction_axioms_small", |b| {
        b.iter(|| laws::restriction_suite(&model, &budget))
    });
    c.bench_function("kleisli_axioms_small", |b| {
        let km = KleisliModel::new(model.clone());
        b.iter(|| laws::restriction_suite(&km, &budget))
    });
    c.bench_function("classical_selection_small", |b| {
        b.iter(|| run_finpar(&model, Selection::Classical, &budget))
    });
}

criterion_group!(benches, hom_enumeration, classical_constructions, axiom_suite);
criterion_main!(benches);
