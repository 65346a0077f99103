//! Brute-force verification of universal properties and uniqueness claims.
//!
//! Every construction in the crate can be handed to `verify_*` together
//! with its witnesses; existence is checked by evaluating the construction
//! and uniqueness by enumerating the whole relevant hom-set. Enumerations
//! over the cap are reported as skipped, never silently passed. The module
//! also carries pointwise table oracles for joins, relative complements and
//! complements, kept independent of the categorical constructions so the
//! two routes can referee each other.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::finpar::{Elem, PartialMap};
use crate::rescat::{is_total, Budget, Model};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

/// Result of one universal-property check.
#[derive(Clone, Debug, Serialize)]
pub struct UniversalCheck {
    pub kind: String,
    pub subject: String,
    pub outcome: Outcome,
    /// Pairs (existence) or candidates (uniqueness) examined.
    pub checked: u64,
    /// Sites whose uniqueness enumeration exceeded the budget.
    pub skipped: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl UniversalCheck {
    fn pass(kind: &str, subject: String, checked: u64, skipped: u64) -> UniversalCheck {
        UniversalCheck {
            kind: kind.to_string(),
            subject,
            outcome: Outcome::Pass,
            checked,
            skipped,
            counterexample: None,
        }
    }

    fn fail(kind: &str, subject: String, checked: u64, witness: String) -> UniversalCheck {
        UniversalCheck {
            kind: kind.to_string(),
            subject,
            outcome: Outcome::Fail,
            checked,
            skipped: 0,
            counterexample: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Candidate product structure handed to the oracle: an object, two
/// projections out of it, and the pairing operation under test.
pub struct ProductWitness<'a, M: Model> {
    pub obj: M::Obj,
    pub p0: M::Map,
    pub p1: M::Map,
    pub pair: Box<dyn Fn(&M::Map, &M::Map) -> Result<M::Map, Error> + 'a>,
    /// Lax products satisfy `h p0 = g-bar f`; genuine products `h p0 = f`.
    pub lax: bool,
}

/// Candidate coproduct structure: an object, two injections into it, and
/// the copairing operation under test.
pub struct CoproductWitness<'a, M: Model> {
    pub obj: M::Obj,
    pub i0: M::Map,
    pub i1: M::Map,
    pub copair: Box<dyn Fn(&M::Map, &M::Map) -> Result<M::Map, Error> + 'a>,
}

fn print_map<M: Model>(m: &M, role: &str, f: &M::Map) -> String {
    format!("map {} : {} -> {} {}", role, m.dom(f), m.cod(f), f)
}

/// Verify that a candidate (object, projections, pairing) is a product of
/// `a` and `b`: for every span out of every test object, the pairing
/// satisfies the defining equations and is the only map that does.
pub fn verify_product<M: Model>(
    m: &M,
    a: &M::Obj,
    b: &M::Obj,
    witness: &ProductWitness<'_, M>,
    budget: &Budget,
    test_objects: &[M::Obj],
) -> UniversalCheck {
    let kind = if witness.lax { "restriction-product" } else { "product" };
    let subject = format!("{} with candidate {}", kind_subject(a, b), witness.obj);
    let mut checked = 0u64;
    let mut skipped = 0u64;
    for c in test_objects {
        if m.obj_size(c) > budget.max_size {
            continue;
        }
        let candidates = if m.hom_size(c, &witness.obj) <= budget.uniqueness_cap {
            Some(m.hom(c, &witness.obj))
        } else {
            skipped += 1;
            None
        };
        for f in m.hom(c, a) {
            for g in m.hom(c, b) {
                checked += 1;
                let (want0, want1) = if witness.lax {
                    (
                        m.compose(&m.restriction(&g), &f).expect("composable"),
                        m.compose(&m.restriction(&f), &g).expect("composable"),
                    )
                } else {
                    (f.clone(), g.clone())
                };
                let satisfies = |h: &M::Map| {
                    m.compose(h, &witness.p0).expect("composable") == want0
                        && m.compose(h, &witness.p1).expect("composable") == want1
                };
                let built = match (witness.pair)(&f, &g) {
                    Ok(h) => h,
                    Err(e) => {
                        return UniversalCheck::fail(
                            kind,
                            subject,
                            checked,
                            format!(
                                "{}; {}; construction failed: {e}",
                                print_map(m, "f", &f),
                                print_map(m, "g", &g)
                            ),
                        )
                    }
                };
                if !satisfies(&built) {
                    return UniversalCheck::fail(
                        kind,
                        subject,
                        checked,
                        format!(
                            "{}; {}; {} does not satisfy the projection equations",
                            print_map(m, "f", &f),
                            print_map(m, "g", &g),
                            print_map(m, "h", &built)
                        ),
                    );
                }
                if let Some(all) = &candidates {
                    let hits = all.iter().filter(|h| satisfies(h)).count();
                    if hits != 1 {
                        return UniversalCheck::fail(
                            kind,
                            subject,
                            checked,
                            format!(
                                "{}; {}; {} mediating maps instead of exactly one",
                                print_map(m, "f", &f),
                                print_map(m, "g", &g),
                                hits
                            ),
                        );
                    }
                }
            }
        }
    }
    UniversalCheck::pass(kind, subject, checked, skipped)
}

/// Verify that a candidate (object, injections, copairing) is a restriction
/// coproduct of `a` and `b`: injections total, copairing restricts to the
/// legs, and the copairing is unique.
pub fn verify_coproduct<M: Model>(
    m: &M,
    a: &M::Obj,
    b: &M::Obj,
    witness: &CoproductWitness<'_, M>,
    budget: &Budget,
    test_objects: &[M::Obj],
) -> UniversalCheck {
    let kind = "coproduct";
    let subject = format!("{} with candidate {}", kind_subject(a, b), witness.obj);
    let mut checked = 0u64;
    let mut skipped = 0u64;
    if !is_total(m, &witness.i0) || !is_total(m, &witness.i1) {
        return UniversalCheck::fail(kind, subject, 0, "injections are not total".to_string());
    }
    for c in test_objects {
        if m.obj_size(c) > budget.max_size {
            continue;
        }
        let candidates = if m.hom_size(&witness.obj, c) <= budget.uniqueness_cap {
            Some(m.hom(&witness.obj, c))
        } else {
            skipped += 1;
            None
        };
        for f in m.hom(a, c) {
            for g in m.hom(b, c) {
                checked += 1;
                let satisfies = |h: &M::Map| {
                    m.compose(&witness.i0, h).expect("composable") == f
                        && m.compose(&witness.i1, h).expect("composable") == g
                };
                let built = match (witness.copair)(&f, &g) {
                    Ok(h) => h,
                    Err(e) => {
                        return UniversalCheck::fail(
                            kind,
                            subject,
                            checked,
                            format!(
                                "{}; {}; construction failed: {e}",
                                print_map(m, "f", &f),
                                print_map(m, "g", &g)
                            ),
                        )
                    }
                };
                if !satisfies(&built) {
                    return UniversalCheck::fail(
                        kind,
                        subject,
                        checked,
                        format!(
                            "{}; {}; {} does not restrict to the legs",
                            print_map(m, "f", &f),
                            print_map(m, "g", &g),
                            print_map(m, "h", &built)
                        ),
                    );
                }
                if let Some(all) = &candidates {
                    let hits = all.iter().filter(|h| satisfies(h)).count();
                    if hits != 1 {
                        return UniversalCheck::fail(
                            kind,
                            subject,
                            checked,
                            format!(
                                "{}; {}; {} mediating maps instead of exactly one",
                                print_map(m, "f", &f),
                                print_map(m, "g", &g),
                                hits
                            ),
                        );
                    }
                }
            }
        }
    }
    UniversalCheck::pass(kind, subject, checked, skipped)
}

/// Verify the two decision axioms and uniqueness for one map into a
/// coproduct.
pub fn verify_decision<M: Model>(m: &M, f: &M::Map, budget: &Budget) -> UniversalCheck {
    let kind = "decision";
    let subject = print_map(m, "f", f);
    let parts = match m.coproduct_parts(&m.cod(f)) {
        Some(p) if !p.is_empty() => p,
        _ => {
            return UniversalCheck::fail(kind, subject, 0, "codomain is not a coproduct".into());
        }
    };
    let a = m.dom(f);
    let n = parts.len();
    let copies: Vec<M::Obj> = (0..n).map(|_| a.clone()).collect();
    let sum_a = m.coproduct(&copies).expect("coproduct witness");
    let ones: Vec<M::Map> = (0..n).map(|_| m.identity(&a)).collect();
    let fold = m.copair(&ones).expect("copairing");
    let sum_b = m.cod(f);
    let copies_b: Vec<M::Obj> = (0..n).map(|_| sum_b.clone()).collect();
    let f_legs: Vec<M::Map> = (0..n)
        .map(|j| {
            m.compose(f, &m.injection(&copies_b, j).expect("coproduct witness"))
                .expect("composable")
        })
        .collect();
    let f_oplus = m.copair(&f_legs).expect("copairing");
    let inj_legs: Vec<M::Map> = (0..n)
        .map(|j| {
            let ij = m.injection(&parts, j).expect("coproduct witness");
            m.compose(&ij, &m.injection(&copies_b, j).expect("coproduct witness"))
                .expect("composable")
        })
        .collect();
    let inj_oplus = m.copair(&inj_legs).expect("copairing");
    let rhs_d2 = m.compose(f, &inj_oplus).expect("composable");
    let fbar = m.restriction(f);
    let satisfies = |d: &M::Map| {
        m.compose(d, &fold).expect("composable") == fbar
            && m.compose(d, &f_oplus).expect("composable") == rhs_d2
    };
    let built = match m.decision(f) {
        Ok(d) => d,
        Err(e) => {
            return UniversalCheck::fail(kind, subject, 0, format!("construction failed: {e}"))
        }
    };
    if !satisfies(&built) {
        return UniversalCheck::fail(
            kind,
            subject,
            1,
            format!("{} violates a decision axiom", print_map(m, "d", &built)),
        );
    }
    if m.hom_size(&a, &sum_a) > budget.uniqueness_cap {
        return UniversalCheck::pass(kind, subject, 1, 1);
    }
    let mut checked = 1u64;
    for cand in m.hom(&a, &sum_a) {
        checked += 1;
        if satisfies(&cand) && cand != built {
            return UniversalCheck::fail(
                kind,
                subject,
                checked,
                format!("{} also satisfies both axioms", print_map(m, "d'", &cand)),
            );
        }
    }
    UniversalCheck::pass(kind, subject, checked, 0)
}

/// Verify the classifier factorization for one map: the classifying
/// factorization is total, recovers the map, and is the unique total map
/// doing so.
pub fn verify_classifier<M: Model>(
    m: &M,
    f: &M::Map,
    classifier: &M::Map,
    eps: &M::Map,
    budget: &Budget,
) -> UniversalCheck {
    let kind = "classifier";
    let subject = print_map(m, "f", f);
    if !is_total(m, classifier) {
        return UniversalCheck::fail(kind, subject, 0, "classifying map is not total".into());
    }
    if m.compose(classifier, eps).expect("composable") != *f {
        return UniversalCheck::fail(
            kind,
            subject,
            1,
            format!("{} does not recover f", print_map(m, "T", classifier)),
        );
    }
    let a = m.dom(f);
    let target = m.cod(classifier);
    if m.hom_size(&a, &target) > budget.uniqueness_cap {
        return UniversalCheck::pass(kind, subject, 1, 1);
    }
    let mut checked = 1u64;
    for cand in m.hom(&a, &target) {
        checked += 1;
        if is_total(m, &cand)
            && m.compose(&cand, eps).expect("composable") == *f
            && cand != *classifier
        {
            return UniversalCheck::fail(
                kind,
                subject,
                checked,
                format!("{} also classifies f", print_map(m, "T'", &cand)),
            );
        }
    }
    UniversalCheck::pass(kind, subject, checked, 0)
}

/// Verify that a map is the least upper bound of a compatible family: an
/// upper bound below every other upper bound in the hom-set.
pub fn verify_join_lub<M: Model>(
    m: &M,
    family: &[M::Map],
    a: &M::Obj,
    b: &M::Obj,
    candidate: &M::Map,
    budget: &Budget,
) -> UniversalCheck {
    let kind = "join-lub";
    let subject = format!("family of {} at {} -> {}", family.len(), a, b);
    let mut checked = 0u64;
    for f in family {
        checked += 1;
        if !crate::rescat::leq(m, f, candidate).expect("parallel") {
            return UniversalCheck::fail(
                kind,
                subject,
                checked,
                format!("{} is not below the candidate", print_map(m, "f", f)),
            );
        }
    }
    if m.hom_size(a, b) > budget.uniqueness_cap {
        return UniversalCheck::pass(kind, subject, checked, 1);
    }
    for h in m.hom(a, b) {
        checked += 1;
        let upper = family
            .iter()
            .all(|f| crate::rescat::leq(m, f, &h).expect("parallel"));
        if upper && !crate::rescat::leq(m, candidate, &h).expect("parallel") {
            return UniversalCheck::fail(
                kind,
                subject,
                checked,
                format!("{} is an upper bound below the candidate", print_map(m, "h", &h)),
            );
        }
    }
    UniversalCheck::pass(kind, subject, checked, 0)
}

fn kind_subject<O: std::fmt::Display>(a: &O, b: &O) -> String {
    format!("objects {a}, {b}")
}

// ---------------------------------------------------------------------
// Pointwise table oracles, independent of the categorical constructions.
// ---------------------------------------------------------------------

fn table_of(f: &PartialMap) -> BTreeMap<Elem, Elem> {
    f.dom()
        .elements()
        .iter()
        .filter_map(|e| f.apply(e).map(|v| (e.clone(), v.clone())))
        .collect()
}

fn from_table(
    dom: &PartialMap,
    table: BTreeMap<Elem, Elem>,
) -> PartialMap {
    let pairs: Vec<(Elem, Elem)> = table.into_iter().collect();
    PartialMap::from_pairs(dom.dom().clone(), dom.cod().clone(), &pairs).expect("oracle table")
}

/// Join as the union of graph tables; the tables must agree on shared keys.
pub fn join_tables(f: &PartialMap, g: &PartialMap) -> Result<PartialMap, Error> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::mismatch("join oracle", f.dom().name(), g.dom().name()));
    }
    let mut table = table_of(f);
    for (k, v) in table_of(g) {
        if let Some(old) = table.get(&k) {
            if *old != v {
                return Err(Error::Incompatible(0, 1));
            }
        }
        table.insert(k, v);
    }
    Ok(from_table(f, table))
}

/// Relative complement as table difference: keep the entries of `g` whose
/// keys `f` does not define. Requires the table of `f` to sit inside `g`.
pub fn relcomp_tables(g: &PartialMap, f: &PartialMap) -> Result<PartialMap, Error> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::mismatch("relative complement oracle", g.dom().name(), f.dom().name()));
    }
    let gt = table_of(g);
    let ft = table_of(f);
    for (k, v) in &ft {
        if gt.get(k) != Some(v) {
            return Err(Error::NotBelow);
        }
    }
    let table = gt.into_iter().filter(|(k, _)| !ft.contains_key(k)).collect();
    Ok(from_table(g, table))
}

/// Complement as the domain complement of a partial identity.
pub fn complement_tables(e: &PartialMap) -> Result<PartialMap, Error> {
    if !e.is_restriction_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let et = table_of(e);
    let table = e
        .dom()
        .elements()
        .iter()
        .filter(|x| !et.contains_key(x))
        .map(|x| (x.clone(), x.clone()))
        .collect();
    Ok(from_table(e, table))
}

/// Corrupt one graph entry of a map, deterministically in the salt. Used to
/// confirm that the oracle rejects broken witnesses.
pub fn corrupt_one_entry(f: &PartialMap, salt: u64) -> PartialMap {
    let n = f.dom().size();
    if n == 0 {
        return f.clone();
    }
    let i = (salt as usize) % n;
    let m = f.cod().size();
    let mut graph: Vec<Option<u32>> = f.graph().to_vec();
    graph[i] = match graph[i] {
        None => Some(0),
        Some(v) if m >= 2 => Some((v + 1) % m as u32),
        Some(_) => None,
    };
    PartialMap::new(f.dom().clone(), f.cod().clone(), graph).expect("corrupted graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;
    use crate::finpar::{FinParModel, FinSet};

    #[test]
    fn pointwise_oracles_match_primitives() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let y = FinSet::atom("Y", &["y0", "y1"]).unwrap();
        let f = PartialMap::new(x.clone(), y.clone(), vec![Some(0), None]).unwrap();
        let g = PartialMap::new(x.clone(), y.clone(), vec![None, Some(1)]).unwrap();
        let j = join_tables(&f, &g).unwrap();
        assert_eq!(j, f.join(&g).unwrap());
        assert_eq!(relcomp_tables(&j, &f).unwrap(), g);
        let e = f.restriction();
        assert_eq!(complement_tables(&e).unwrap(), e.complement().unwrap());
        // RC.2 through the oracle route
        assert_eq!(join_tables(&relcomp_tables(&j, &f).unwrap(), &f).unwrap(), j);
        // double complement
        assert_eq!(
            complement_tables(&complement_tables(&e).unwrap()).unwrap(),
            e
        );
    }

    #[test]
    fn product_oracle_accepts_the_classical_product() {
        let m = FinParModel::demo();
        let a = FinSet::atom("A", &["a"]).unwrap();
        let b = FinSet::atom("B", &["b"]).unwrap();
        let witness = ProductWitness {
            obj: a.amp(&b),
            p0: classical::classical_projection(&m, &a, &b, 0).unwrap(),
            p1: classical::classical_projection(&m, &a, &b, 1).unwrap(),
            pair: Box::new(|f, g| classical::classical_pair(&m, f, g)),
            lax: false,
        };
        let c = FinSet::atom("C", &["c0", "c1"]).unwrap();
        let check = verify_product(&m, &a, &b, &witness, &Budget::default(), &[c]);
        assert!(check.passed(), "{:?}", check.counterexample);
    }

    #[test]
    fn product_oracle_rejects_the_plain_coproduct() {
        let m = FinParModel::demo();
        let a = FinSet::atom("A", &["a"]).unwrap();
        let b = FinSet::atom("B", &["b"]).unwrap();
        let parts = [a.clone(), b.clone()];
        let sum = FinSet::coprod(&parts);
        let witness = ProductWitness {
            obj: sum,
            p0: PartialMap::qproj(&parts, 0).unwrap(),
            p1: PartialMap::qproj(&parts, 1).unwrap(),
            pair: Box::new(|f: &PartialMap, g: &PartialMap| {
                // best effort without the product summand
                let m = FinParModel::demo();
                let i0 = PartialMap::inj(
                    &[f.cod().clone(), g.cod().clone()],
                    0,
                )
                .unwrap();
                let i1 = PartialMap::inj(
                    &[f.cod().clone(), g.cod().clone()],
                    1,
                )
                .unwrap();
                let gc = classical::complement(&m, &g.restriction())?;
                let fc = classical::complement(&m, &f.restriction())?;
                let only_f = gc.compose(f)?.compose(&i0)?;
                let only_g = fc.compose(g)?.compose(&i1)?;
                only_f.join(&only_g)
            }),
            lax: false,
        };
        let c = FinSet::atom("C", &["c0"]).unwrap();
        let check = verify_product(&m, &a, &b, &witness, &Budget::default(), &[c]);
        assert!(!check.passed());
        // the counterexample names a concrete span
        assert!(check.counterexample.unwrap().contains("map f"));
    }

    #[test]
    fn corrupting_a_witness_flips_the_outcome() {
        let m = FinParModel::demo();
        let a = FinSet::atom("A", &["a0", "a1"]).unwrap();
        let b = FinSet::atom("B", &["b"]).unwrap();
        let good = ProductWitness {
            obj: a.amp(&b),
            p0: classical::classical_projection(&m, &a, &b, 0).unwrap(),
            p1: classical::classical_projection(&m, &a, &b, 1).unwrap(),
            pair: Box::new(|f, g| classical::classical_pair(&m, f, g)),
            lax: false,
        };
        let c = FinSet::atom("C", &["c"]).unwrap();
        let ok = verify_product(&m, &a, &b, &good, &Budget::default(), &[c.clone()]);
        assert!(ok.passed());
        let corrupted = ProductWitness {
            obj: a.amp(&b),
            p0: corrupt_one_entry(&classical::classical_projection(&m, &a, &b, 0).unwrap(), 3),
            p1: classical::classical_projection(&m, &a, &b, 1).unwrap(),
            pair: Box::new(|f, g| classical::classical_pair(&m, f, g)),
            lax: false,
        };
        let bad = verify_product(&m, &a, &b, &corrupted, &Budget::default(), &[c]);
        assert!(!bad.passed());
    }

    #[test]
    fn decision_and_classifier_oracles() {
        let m = FinParModel::demo();
        let x = m.lookup_object("X").unwrap().clone();
        let y = m.lookup_object("Y").unwrap().clone();
        let sum = FinSet::coprod(&[y.clone(), y.clone()]);
        for n in 0..m.hom_size(&x, &sum) {
            let f = m.hom_nth(&x, &sum, n);
            assert!(verify_decision(&m, &f, &Budget::default()).passed());
        }
        let f = m.lookup_map("f").unwrap();
        let t = classical::classify(&m, f).unwrap();
        let eps = PartialMap::qproj(&[y.clone(), FinSet::one()], 0).unwrap();
        assert!(verify_classifier(&m, f, &t, &eps, &Budget::default()).passed());
        // a corrupted classifier is rejected
        let bad = corrupt_one_entry(&t, 1);
        assert!(!verify_classifier(&m, f, &bad, &eps, &Budget::default()).passed());
    }
}
