//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Everything is checked exactly (set equality of graphs), with
//! enumeration exhaustive at the stated sizes.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rcwb_core::classical::{
    classical_pair, classical_projection, complement, join_via_amp, join_via_amp_decision,
    relcomp_via_amp,
};
use rcwb_core::finpar::{FinParModel, FinSet, PartialMap};
use rcwb_core::kleisli;
use rcwb_core::mutation::Mutation;
use rcwb_core::oracle::{
    self, join_tables, relcomp_tables, verify_coproduct, verify_decision, verify_product,
    CoproductWitness, ProductWitness,
};
use rcwb_core::rescat::{laws, Budget, LawStatus, Model};
use rcwb_core::splitting::{restriction_coproduct_from_amp, restriction_product_from_amp, split_idempotent};
use rcwb_core::suites::{run_finpar, thm2_suite, Selection};
use rcwb_core::Error;

fn atom(name: &str, n: usize) -> FinSet {
    let labels: Vec<String> = (0..n).map(|i| format!("{}{}", name.to_lowercase(), i)).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    FinSet::atom(name, &refs).expect("atom")
}

/// Structured objects of every size up to 2, including constructed ones.
fn family2() -> Vec<FinSet> {
    let x = atom("X", 2);
    let y = atom("Y", 1);
    vec![
        FinSet::zero(),
        FinSet::one(),
        y.clone(),
        x.clone(),
        FinSet::coprod(&[FinSet::one(), y.clone()]),
        x.prod(&FinSet::one()),
    ]
}

/// Structured objects of every size up to 3.
fn family3() -> Vec<FinSet> {
    let mut f = family2();
    f.push(atom("W", 3));
    f.push(FinSet::coprod(&[atom("X", 2), atom("Y", 1)]));
    f
}

fn assert_all_pass(reports: &[rcwb_core::rescat::LawReport], what: &str) {
    for r in reports {
        assert_ne!(
            r.status,
            LawStatus::Fail,
            "{what}: {}/{} failed: {:?}",
            r.suite,
            r.law,
            r.counterexample
        );
    }
}

/// Criterion 1: restriction axioms and the standard identities over the
/// closed universe of two atoms, depth 2, sizes at most 3, within a minute.
#[test]
fn criterion_1_axiom_suite() {
    let start = Instant::now();
    let atoms = vec![atom("X", 2), atom("Y", 1)];
    let model = FinParModel::closed(atoms, 2, 3, 48);
    assert!(model.universe().len() >= 24, "closure should be rich");
    let budget = Budget::default();
    let mut reports = laws::restriction_suite(&model, &budget);
    reports.extend(laws::restriction_identities_suite(&model, &budget));
    reports.extend(laws::category_suite(&model, &budget));
    assert_all_pass(&reports, "criterion 1");
    let r1 = reports.iter().find(|r| r.law == "R1").expect("R1 ran");
    assert!(r1.checked > 10_000 && !r1.sampled, "R1 exhaustive: {r1:?}");
    for r in &reports {
        assert!(r.checked > 0, "{}/{} checked nothing", r.suite, r.law);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "axiom suite took {elapsed:?}");
    println!("criterion 1 (axiom suite, {} laws in {elapsed:?}): PASS", reports.len());
}

/// Criterion 2: the pairing into `A + B + (A * B)` satisfies both
/// projection equations and is unique, exhaustively at sizes up to 2.
#[test]
fn criterion_2_main_theorem_forward() {
    let model = FinParModel::demo();
    let budget = Budget::default();
    let family = family2();
    let mut pairs_checked = 0u64;
    for a in &family {
        for b in &family {
            let witness = ProductWitness {
                obj: a.amp(b),
                p0: classical_projection(&model, a, b, 0).expect("projection"),
                p1: classical_projection(&model, a, b, 1).expect("projection"),
                pair: Box::new(|f, g| classical_pair(&FinParModel::demo(), f, g)),
                lax: false,
            };
            for c in &family {
                assert!(
                    model.hom_size(c, &witness.obj) <= 4096,
                    "uniqueness stays within the stated hom budget"
                );
                let check = verify_product(&model, a, b, &witness, &budget, &[c.clone()]);
                assert!(
                    check.passed() && check.skipped == 0,
                    "criterion 2 at A={a}, B={b}, C={c}: {:?}",
                    check.counterexample
                );
                pairs_checked += check.checked;
            }
        }
    }
    assert!(pairs_checked > 4_000);
    println!("criterion 2 (classical product universal property, {pairs_checked} spans): PASS");
}

/// Criterion 3: the derived join and relative complement agree with the
/// pointwise table oracles: exhaustively at sizes up to 3 and on seeded
/// random pairs at size 4.
#[test]
fn criterion_3_main_theorem_reverse() {
    let model = FinParModel::demo();
    let mut joins = 0u64;
    let mut relcomps = 0u64;
    for a in &family3() {
        for b in &family3() {
            let count = model.hom_size(a, b);
            for i in 0..count {
                let f = model.hom_nth(a, b, i);
                for j in 0..count {
                    let g = model.hom_nth(a, b, j);
                    if f.compatible(&g).expect("parallel") {
                        let derived = join_via_amp(&model, &f, &g).expect("compatible");
                        let oracle = join_tables(&f, &g).expect("compatible");
                        assert_eq!(derived, oracle, "join mismatch at f={f}, g={g}");
                        assert_eq!(derived, f.join(&g).expect("compatible"));
                        let via_dec = join_via_amp_decision(&model, &f, &g).expect("compatible");
                        assert_eq!(via_dec, oracle);
                        joins += 1;
                    } else {
                        assert_eq!(join_via_amp(&model, &f, &g), Err(Error::Incompatible(0, 1)));
                    }
                    if f.leq(&g).expect("parallel") {
                        let derived = relcomp_via_amp(&model, &g, &f).expect("ordered");
                        let oracle = relcomp_tables(&g, &f).expect("ordered");
                        assert_eq!(derived, oracle, "relative complement mismatch at f={f}, g={g}");
                        assert_eq!(derived, g.relative_complement(&f).expect("ordered"));
                        relcomps += 1;
                    } else {
                        assert_eq!(relcomp_via_amp(&model, &g, &f), Err(Error::NotBelow));
                    }
                }
            }
        }
    }
    // seeded random pairs at size 4
    let p = atom("P", 4);
    let q = atom("Q", 4);
    let mut rng = ChaCha8Rng::seed_from_u64(rcwb_core::rescat::DEFAULT_SEED);
    for _ in 0..1_000 {
        // a compatible pair: per point, undefined/only-f/only-g/both-equal
        let mut fg = (vec![None; 4], vec![None; 4]);
        for i in 0..4 {
            match rng.gen_range(0..4) {
                0 => {}
                1 => fg.0[i] = Some(rng.gen_range(0..4u32)),
                2 => fg.1[i] = Some(rng.gen_range(0..4u32)),
                _ => {
                    let v = Some(rng.gen_range(0..4u32));
                    fg.0[i] = v;
                    fg.1[i] = v;
                }
            }
        }
        let f = PartialMap::new(p.clone(), q.clone(), fg.0).expect("graph");
        let g = PartialMap::new(p.clone(), q.clone(), fg.1).expect("graph");
        let derived = join_via_amp(&model, &f, &g).expect("compatible by construction");
        assert_eq!(derived, join_tables(&f, &g).expect("compatible"));
        joins += 1;
        // an ordered pair below the join
        let below = f.restriction().compose(&derived).expect("composable");
        let derived_rc = relcomp_via_amp(&model, &derived, &below).expect("ordered");
        assert_eq!(derived_rc, relcomp_tables(&derived, &below).expect("ordered"));
        relcomps += 1;
    }
    assert!(joins >= 1_000 && relcomps >= 1_000);
    println!("criterion 3 (derived vs pointwise: {joins} joins, {relcomps} relative complements): PASS");
}

/// Criterion 4: both decision axioms and uniqueness, exhaustively for every
/// map into a binary coproduct at the stated sizes.
#[test]
fn criterion_4_decisions() {
    let model = FinParModel::demo();
    let budget = Budget::default();
    let doms = [FinSet::zero(), FinSet::one(), atom("X", 2), atom("W", 3)];
    let parts = [FinSet::zero(), FinSet::one(), atom("B", 2), FinSet::coprod(&[FinSet::one(), FinSet::one()])];
    let mut checked = 0u64;
    for a in &doms {
        for b0 in &parts {
            for b1 in &parts {
                let sum = FinSet::coprod(&[b0.clone(), b1.clone()]);
                for n in 0..model.hom_size(a, &sum) {
                    let f = model.hom_nth(a, &sum, n);
                    let check = verify_decision(&model, &f, &budget);
                    assert!(
                        check.passed() && check.skipped == 0,
                        "criterion 4 at f={f}: {:?}",
                        check.counterexample
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 1_000);
    println!("criterion 4 (decisions on {checked} maps): PASS");
}

/// Criterion 5: the splitting bridges recover the restriction product and
/// coproduct with exact splitting equations, and the recovered structures
/// pass the universal-property oracle.
#[test]
fn criterion_5_splitting_bridges() {
    let model = FinParModel::demo();
    let budget = Budget::default();
    let family = family2();
    for a in &family {
        for b in &family {
            let p0 = classical_projection(&model, a, b, 0).expect("projection");
            let p1 = classical_projection(&model, a, b, 1).expect("projection");
            // product bridge: split p0-bar p1-bar
            let meet = p0.restriction().compose(&p1.restriction()).expect("composable");
            let split = split_idempotent(&meet).expect("idempotent");
            assert_eq!(split.retraction.compose(&split.section).expect("composable"), meet);
            assert_eq!(
                split.section.compose(&split.retraction).expect("composable"),
                PartialMap::identity(&split.mid)
            );
            let (mid, pi0, pi1) = restriction_product_from_amp(&model, a, b).expect("bridge");
            assert!(pi0.is_total() && pi1.is_total());
            let retraction = split.retraction.clone();
            let witness = ProductWitness {
                obj: mid.clone(),
                p0: pi0,
                p1: pi1,
                pair: Box::new(move |f, g| {
                    classical_pair(&FinParModel::demo(), f, g)?.compose(&retraction)
                }),
                lax: true,
            };
            let check = verify_product(&model, a, b, &witness, &budget, &family);
            assert!(
                check.passed() && check.skipped == 0,
                "recovered product at A={a}, B={b}: {:?}",
                check.counterexample
            );
            // coproduct bridge: split p0-bar^c v p1-bar^c
            let p0c = complement(&model, &p0.restriction()).expect("idempotent");
            let p1c = complement(&model, &p1.restriction()).expect("idempotent");
            let joined = p0c.join(&p1c).expect("disjoint");
            let csplit = split_idempotent(&joined).expect("idempotent");
            assert_eq!(csplit.retraction.compose(&csplit.section).expect("composable"), joined);
            assert_eq!(
                csplit.section.compose(&csplit.retraction).expect("composable"),
                PartialMap::identity(&csplit.mid)
            );
            let (cmid, i0, i1) = restriction_coproduct_from_amp(&model, a, b).expect("bridge");
            assert!(i0.is_total() && i1.is_total());
            assert_eq!(cmid.size(), a.size() + b.size());
            let section = csplit.section.clone();
            let (r0, r1) = (
                p1c.compose(&p0).expect("composable"),
                p0c.compose(&p1).expect("composable"),
            );
            let witness = CoproductWitness {
                obj: cmid.clone(),
                i0,
                i1,
                copair: Box::new(move |f, g| {
                    let piece_f = r0.compose(f)?;
                    let piece_g = r1.compose(g)?;
                    section.compose(&piece_f.join(&piece_g)?)
                }),
            };
            let check = verify_coproduct(&model, a, b, &witness, &budget, &family);
            assert!(
                check.passed() && check.skipped == 0,
                "recovered coproduct at A={a}, B={b}: {:?}",
                check.counterexample
            );
        }
    }
    println!("criterion 5 (splitting bridges over {} object pairs): PASS", family.len() * family.len());
}

/// Criterion 6: the exception monad, the full restriction-category suite on
/// the Kleisli model, the projection formula, and the round trip — the four
/// equivalences realized as passing suites.
#[test]
fn criterion_6_kleisli() {
    let atoms = vec![atom("X", 2), atom("Y", 1)];
    let model = FinParModel::closed(atoms, 2, 2, 14);
    let budget = Budget {
        max_size: 2,
        max_tuples: 60_000,
        samples: 8_000,
        ..Budget::default()
    };
    let mut reports = kleisli::monad_suite(&model, &budget);
    reports.extend(kleisli::kleisli_suite(&model, &budget));
    reports.extend(kleisli::kleisli_rescat_suite(&model, &budget));
    reports.extend(thm2_suite(&model, &budget));
    assert_all_pass(&reports, "criterion 6");
    for law in ["proj-formula", "roundtrip-partial", "roundtrip-kleisli", "rest-preserved"] {
        let r = reports
            .iter()
            .find(|r| r.law == law && r.suite == "kleisli")
            .unwrap_or_else(|| panic!("{law} ran"));
        assert!(r.checked > 0 && !r.sampled, "{law} exhaustive");
    }
    println!("criterion 6 (exception monad and Kleisli suites, {} laws): PASS", reports.len());
}

/// Criterion 7: spectrum duality transports the whole classical structure
/// to the ring model, agreeing with the closed-form formulas, at sizes up
/// to 3.
#[test]
fn criterion_7_duality() {
    let model = FinParModel::new(vec![atom("X", 2), atom("W", 3), atom("Y", 1)]);
    let budget = Budget::default();
    let reports = rcwb_core::calg::duality_suite(&model, &budget);
    assert_all_pass(&reports, "criterion 7");
    for r in &reports {
        assert!(!r.sampled, "{}/{} should be exhaustive at these sizes", r.suite, r.law);
    }
    let formula_reports =
        rcwb_core::calg::calg_formula_suite(&rcwb_core::calg::CalgModel::new(3), &budget);
    assert_all_pass(&formula_reports, "criterion 7 formulas");
    println!(
        "criterion 7 (spectrum duality, {} transport laws and {} formula laws): PASS",
        reports.len(),
        formula_reports.len()
    );
}

/// Criterion 8: negative controls. The plain coproduct of two points is not
/// a product of them, and each mutation fixture flips exactly its targeted
/// law.
#[test]
fn criterion_8_negative_controls() {
    let model = FinParModel::demo();
    let budget = Budget::default();
    let a = atom("A", 1);
    let b = atom("B", 1);
    let parts = [a.clone(), b.clone()];
    let witness = ProductWitness {
        obj: FinSet::coprod(&parts),
        p0: PartialMap::qproj(&parts, 0).expect("quasi-projection"),
        p1: PartialMap::qproj(&parts, 1).expect("quasi-projection"),
        pair: Box::new(|f: &PartialMap, g: &PartialMap| {
            // the best pairing available without the product summand
            let m = FinParModel::demo();
            let parts = [f.cod().clone(), g.cod().clone()];
            let gc = complement(&m, &g.restriction())?;
            let fc = complement(&m, &f.restriction())?;
            let only_f = gc.compose(f)?.compose(&PartialMap::inj(&parts, 0)?)?;
            let only_g = fc.compose(g)?.compose(&PartialMap::inj(&parts, 1)?)?;
            only_f.join(&only_g)
        }),
        lax: false,
    };
    let c = atom("C", 2);
    let check = verify_product(&model, &a, &b, &witness, &budget, &[c]);
    assert!(!check.passed(), "the plain coproduct must fail the product check");
    let cex = check.counterexample.expect("carries a witness");
    assert!(cex.contains("map f") && cex.contains("map g"), "{cex}");

    // corrupting a correct witness flips the oracle outcome
    let good_p0 = classical_projection(&model, &a, &b, 0).expect("projection");
    let good = ProductWitness {
        obj: a.amp(&b),
        p0: good_p0.clone(),
        p1: classical_projection(&model, &a, &b, 1).expect("projection"),
        pair: Box::new(|f, g| classical_pair(&FinParModel::demo(), f, g)),
        lax: false,
    };
    let c = atom("C", 2);
    assert!(verify_product(&model, &a, &b, &good, &budget, &[c.clone()]).passed());
    let corrupted = ProductWitness {
        obj: a.amp(&b),
        p0: oracle::corrupt_one_entry(&good_p0, 1),
        p1: classical_projection(&model, &a, &b, 1).expect("projection"),
        pair: Box::new(|f, g| classical_pair(&FinParModel::demo(), f, g)),
        lax: false,
    };
    assert!(!verify_product(&model, &a, &b, &corrupted, &budget, &[c]).passed());

    // each mutation fixture flips exactly its targeted law
    let fixture_model = FinParModel::closed(vec![atom("X", 2), atom("Y", 1)], 1, 2, 16);
    let fixture_budget = Budget {
        max_size: 2,
        max_tuples: 20_000,
        ..Budget::default()
    };
    for mutation in Mutation::all() {
        let mutated = rcwb_core::mutation::MutatedModel::new(fixture_model.clone(), mutation);
        let reports = match mutation.targeted_suite() {
            "restriction" => laws::restriction_suite(&mutated, &fixture_budget),
            "category" => laws::category_suite(&mutated, &fixture_budget),
            "decisions" => rcwb_core::classical::decisions_suite(&mutated, &fixture_budget),
            other => panic!("unexpected suite {other}"),
        };
        for r in &reports {
            assert_eq!(
                r.status == LawStatus::Fail,
                r.law == mutation.targeted_law(),
                "fixture {} law {}: {:?}",
                mutation.name(),
                r.law,
                r.counterexample
            );
        }
    }
    println!("criterion 8 (negative controls): PASS");
}

/// The headline run: everything the command line exposes, green at the
/// default budget on a small closed model.
#[test]
fn full_stack_smoke() {
    let atoms = vec![atom("X", 2), atom("Y", 1)];
    let model = FinParModel::closed(atoms, 1, 2, 12);
    let budget = Budget {
        max_size: 2,
        max_tuples: 40_000,
        samples: 4_000,
        unique_samples: 80,
        ..Budget::default()
    };
    let reports = run_finpar(&model, Selection::All, &budget);
    assert_all_pass(&reports, "full stack");
    assert!(reports.len() > 200);
}
