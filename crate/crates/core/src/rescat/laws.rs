//! Generic law suites: category laws, the four restriction axioms, the
//! standard restriction identities, the order relations, and the defining
//! equations of every declared structural witness.
//!
//! All suites run against any [`Model`]; laws whose structure a model does
//! not supply are reported as skipped.

use super::comp;
use super::quantify::{violation, LawResult, Quant};
use super::report::{Budget, LawReport};
use super::{compatible, disjoint, is_restriction_idempotent, is_total, leq, Model};

pub(crate) fn w<M: Model>(m: &M, role: &str, f: &M::Map) -> String {
    format!("map {} : {} -> {} {}", role, m.dom(f), m.cod(f), f)
}

/// Category laws: identities and associativity.
pub fn category_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "category";
    vec![
        q.maps1(s, "identity-left", |f| {
            let lhs = comp!(m, &m.identity(&m.dom(f)), f);
            if lhs == *f {
                LawResult::Holds
            } else {
                violation("identity-left", vec![w(m, "f", f)], &lhs, f)
            }
        }),
        q.maps1(s, "identity-right", |f| {
            let lhs = comp!(m, f, &m.identity(&m.cod(f)));
            if lhs == *f {
                LawResult::Holds
            } else {
                violation("identity-right", vec![w(m, "f", f)], &lhs, f)
            }
        }),
        q.chain3(s, "associativity", |f, g, h| {
            let lhs = comp!(m, &comp!(m, f, g), h);
            let rhs = comp!(m, f, &comp!(m, g, h));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation(
                    "associativity",
                    vec![w(m, "f", f), w(m, "g", g), w(m, "h", h)],
                    &lhs,
                    &rhs,
                )
            }
        }),
    ]
}

/// The four restriction axioms.
pub fn restriction_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "restriction";
    vec![
        q.maps1(s, "R1", |f| {
            let lhs = comp!(m, &m.restriction(f), f);
            if lhs == *f {
                LawResult::Holds
            } else {
                violation("R1", vec![w(m, "f", f)], &lhs, f)
            }
        }),
        q.shared_dom2(s, "R2", |f, g| {
            let (fb, gb) = (m.restriction(f), m.restriction(g));
            let lhs = comp!(m, &fb, &gb);
            let rhs = comp!(m, &gb, &fb);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("R2", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.shared_dom2(s, "R3", |f, g| {
            let gb = m.restriction(g);
            let lhs = m.restriction(&comp!(m, &gb, f));
            let rhs = comp!(m, &gb, &m.restriction(f));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("R3", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.chain2(s, "R4", |f, g| {
            let lhs = comp!(m, f, &m.restriction(g));
            let rhs = comp!(m, &m.restriction(&comp!(m, f, g)), f);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("R4", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
    ]
}

/// The standard consequences of the restriction axioms.
pub fn restriction_identities_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "restriction-identities";
    vec![
        q.chain2(s, "bar-compose", |f, g| {
            let lhs = m.restriction(&comp!(m, f, g));
            let rhs = m.restriction(&comp!(m, f, &m.restriction(g)));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("bar-compose", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.chain2(s, "total-post", |f, g| {
            if !is_total(m, g) {
                return LawResult::Vacuous;
            }
            let lhs = m.restriction(&comp!(m, f, g));
            let rhs = m.restriction(f);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("total-post", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        // Monic maps are total: equivalently, every non-total map is split
        // apart by its own restriction against the identity.
        q.maps1(s, "nontotal-nonmonic", |f| {
            if is_total(m, f) {
                return LawResult::Vacuous;
            }
            let fb = m.restriction(f);
            let one = m.identity(&m.dom(f));
            if fb != one && comp!(m, &fb, f) == comp!(m, &one, f) {
                LawResult::Holds
            } else {
                violation(
                    "nontotal-nonmonic",
                    vec![w(m, "f", f)],
                    &fb,
                    "a non-identity map equalizing f",
                )
            }
        }),
        q.endo1(s, "idem-compose", |e| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let lhs = comp!(m, e, e);
            if lhs == *e {
                LawResult::Holds
            } else {
                violation("idem-compose", vec![w(m, "e", e)], &lhs, e)
            }
        }),
        q.endo2(s, "idem-commute", |e1, e2| {
            if !is_restriction_idempotent(m, e1) || !is_restriction_idempotent(m, e2) {
                return LawResult::Vacuous;
            }
            let lhs = comp!(m, e1, e2);
            let rhs = comp!(m, e2, e1);
            if lhs == rhs && is_restriction_idempotent(m, &lhs) {
                LawResult::Holds
            } else {
                violation("idem-commute", vec![w(m, "e1", e1), w(m, "e2", e2)], &lhs, &rhs)
            }
        }),
        q.chain2(s, "idem-left-bar", |e, f| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let lhs = m.restriction(&comp!(m, e, f));
            let mid = comp!(m, e, &m.restriction(f));
            let rhs = comp!(m, &m.restriction(f), e);
            if lhs == mid && mid == rhs {
                LawResult::Holds
            } else {
                violation("idem-left-bar", vec![w(m, "e", e), w(m, "f", f)], &lhs, &mid)
            }
        }),
        q.chain2(s, "idem-r4", |f, e| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let fe = comp!(m, f, e);
            let rhs = comp!(m, &m.restriction(&fe), f);
            if fe == rhs {
                LawResult::Holds
            } else {
                violation("idem-r4", vec![w(m, "f", f), w(m, "e", e)], &fe, &rhs)
            }
        }),
        q.maps1(s, "bar-idempotent", |f| {
            let fb = m.restriction(f);
            if m.restriction(&fb) == fb && comp!(m, &fb, &fb) == fb {
                LawResult::Holds
            } else {
                violation("bar-idempotent", vec![w(m, "f", f)], m.restriction(&fb), &fb)
            }
        }),
    ]
}

/// The order `<=`, compatibility and disjointness.
pub fn order_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "order";
    let has_zero = {
        let objs = q.objs.clone();
        objs.first().map(|a| m.zero(a, a).is_some()).unwrap_or(true)
    };
    let mut reports = vec![
        q.maps1(s, "leq-reflexive", |f| {
            if leq(m, f, f).expect("parallel") {
                LawResult::Holds
            } else {
                violation("leq-reflexive", vec![w(m, "f", f)], "f <= f", "false")
            }
        }),
        q.parallel3(s, "leq-transitive", |f, g, h| {
            if !(leq(m, f, g).expect("parallel") && leq(m, g, h).expect("parallel")) {
                return LawResult::Vacuous;
            }
            if leq(m, f, h).expect("parallel") {
                LawResult::Holds
            } else {
                violation(
                    "leq-transitive",
                    vec![w(m, "f", f), w(m, "g", g), w(m, "h", h)],
                    "f <= h",
                    "false",
                )
            }
        }),
        q.parallel2(s, "leq-antisymmetric", |f, g| {
            if !(leq(m, f, g).expect("parallel") && leq(m, g, f).expect("parallel")) {
                return LawResult::Vacuous;
            }
            if f == g {
                LawResult::Holds
            } else {
                violation("leq-antisymmetric", vec![w(m, "f", f), w(m, "g", g)], f, g)
            }
        }),
    ];
    if has_zero {
        reports.push(q.parallel2(s, "disjoint-implies-compatible", |f, g| {
            if !disjoint(m, f, g).expect("zeroes present") {
                return LawResult::Vacuous;
            }
            if compatible(m, f, g).expect("parallel") {
                LawResult::Holds
            } else {
                violation(
                    "disjoint-implies-compatible",
                    vec![w(m, "f", f), w(m, "g", g)],
                    "f ~ g",
                    "false",
                )
            }
        }));
        reports.push(q.endo2(s, "idem-disjoint-iff-zero", |e1, e2| {
            if !is_restriction_idempotent(m, e1) || !is_restriction_idempotent(m, e2) {
                return LawResult::Vacuous;
            }
            let zero = m.zero(&m.dom(e1), &m.dom(e1)).expect("zeroes present");
            let dis = disjoint(m, e1, e2).expect("zeroes present");
            let prod_zero = comp!(m, e1, e2) == zero;
            if dis == prod_zero {
                LawResult::Holds
            } else {
                violation(
                    "idem-disjoint-iff-zero",
                    vec![w(m, "e1", e1), w(m, "e2", e2)],
                    dis,
                    prod_zero,
                )
            }
        }));
    } else {
        reports.push(q.skip(s, "disjoint-implies-compatible", "model has no zeroes"));
        reports.push(q.skip(s, "idem-disjoint-iff-zero", "model has no zeroes"));
    }
    reports
}

/// Defining equations of the restriction terminal object.
pub fn terminal_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "terminal";
    if m.terminal().is_none() {
        return vec![q.skip(s, "bang-total", "model has no terminal object")];
    }
    vec![
        q.objects1(s, "bang-total", |a| {
            let t = m.bang(a).expect("terminal witness");
            if is_total(m, &t) {
                LawResult::Holds
            } else {
                violation("bang-total", vec![w(m, "t", &t)], "total", "partial")
            }
        }),
        q.maps1(s, "bang-natural", |f| {
            let tb = m.bang(&m.cod(f)).expect("terminal witness");
            let ta = m.bang(&m.dom(f)).expect("terminal witness");
            let lhs = comp!(m, f, &tb);
            let rhs = comp!(m, &m.restriction(f), &ta);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("bang-natural", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.objects1(s, "bang-unique", |a| {
            let one = m.terminal().expect("terminal witness");
            let t = m.bang(a).expect("terminal witness");
            if m.hom_size(a, &one) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let totals: Vec<M::Map> = m
                .hom(a, &one)
                .into_iter()
                .filter(|f| is_total(m, f))
                .collect();
            if totals.len() == 1 && totals[0] == t {
                LawResult::Holds
            } else {
                violation(
                    "bang-unique",
                    vec![format!("object {a}")],
                    totals.len(),
                    "exactly one total map into the terminal object",
                )
            }
        }),
    ]
}

/// Defining equations of binary restriction products.
pub fn products_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "products";
    let sample = q.objs.first().cloned();
    let supported = sample
        .as_ref()
        .map(|a| m.product(a, a).is_some())
        .unwrap_or(true);
    if !supported {
        return vec![q.skip(s, "pair-beta", "model has no restriction products")];
    }
    vec![
        q.objects2(s, "proj-total", |a, bb| {
            for i in 0..2 {
                let p = m.projection(a, bb, i).expect("product witness");
                if !is_total(m, &p) {
                    return violation(
                        "proj-total",
                        vec![w(m, "proj", &p)],
                        "total",
                        "partial",
                    );
                }
            }
            LawResult::Holds
        }),
        q.shared_dom2(s, "pair-beta", |f, g| {
            let (a, bb) = (m.cod(f), m.cod(g));
            let p0 = m.projection(&a, &bb, 0).expect("product witness");
            let p1 = m.projection(&a, &bb, 1).expect("product witness");
            let pair = m.pair(f, g).expect("pairing");
            let lhs0 = comp!(m, &pair, &p0);
            let rhs0 = comp!(m, &m.restriction(g), f);
            if lhs0 != rhs0 {
                return violation("pair-beta", vec![w(m, "f", f), w(m, "g", g)], &lhs0, &rhs0);
            }
            let lhs1 = comp!(m, &pair, &p1);
            let rhs1 = comp!(m, &m.restriction(f), g);
            if lhs1 != rhs1 {
                return violation("pair-beta", vec![w(m, "f", f), w(m, "g", g)], &lhs1, &rhs1);
            }
            LawResult::Holds
        }),
        q.objects2(s, "pair-eta", |a, bb| {
            let p0 = m.projection(a, bb, 0).expect("product witness");
            let p1 = m.projection(a, bb, 1).expect("product witness");
            let pair = m.pair(&p0, &p1).expect("pairing");
            let id = m.identity(&m.product(a, bb).expect("product witness"));
            if pair == id {
                LawResult::Holds
            } else {
                violation("pair-eta", vec![format!("objects {a}, {bb}")], &pair, &id)
            }
        }),
        q.shared_dom2_unique(s, "pair-unique", |f, g| {
            let (a, bb) = (m.cod(f), m.cod(g));
            let c = m.dom(f);
            let prod = m.product(&a, &bb).expect("product witness");
            if m.hom_size(&c, &prod) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let p0 = m.projection(&a, &bb, 0).expect("product witness");
            let p1 = m.projection(&a, &bb, 1).expect("product witness");
            let pair = m.pair(f, g).expect("pairing");
            let rhs0 = comp!(m, &m.restriction(g), f);
            let rhs1 = comp!(m, &m.restriction(f), g);
            let mut hits = 0u32;
            for h in m.hom(&c, &prod) {
                if comp!(m, &h, &p0) == rhs0 && comp!(m, &h, &p1) == rhs1 {
                    hits += 1;
                    if h != pair {
                        return violation(
                            "pair-unique",
                            vec![w(m, "f", f), w(m, "g", g), w(m, "h", &h)],
                            &h,
                            &pair,
                        );
                    }
                }
            }
            if hits == 1 {
                LawResult::Holds
            } else {
                violation(
                    "pair-unique",
                    vec![w(m, "f", f), w(m, "g", g)],
                    hits,
                    "exactly one mediating map",
                )
            }
        }),
    ]
}

/// Defining equations of binary restriction coproducts.
pub fn coproducts_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "coproducts";
    let sample = q.objs.first().cloned();
    let supported = sample
        .as_ref()
        .map(|a| m.coproduct(&[a.clone(), a.clone()]).is_some())
        .unwrap_or(true);
    if !supported {
        return vec![q.skip(s, "copair-beta", "model has no restriction coproducts")];
    }
    vec![
        q.objects2(s, "inj-total", |a, bb| {
            let parts = [a.clone(), bb.clone()];
            for j in 0..2 {
                let i = m.injection(&parts, j).expect("coproduct witness");
                if !is_total(m, &i) {
                    return violation("inj-total", vec![w(m, "inj", &i)], "total", "partial");
                }
            }
            LawResult::Holds
        }),
        q.shared_cod2(s, "copair-beta", |f, g| {
            let parts = [m.dom(f), m.dom(g)];
            let cp = m.copair(&[f.clone(), g.clone()]).expect("copairing");
            for (j, leg) in [f, g].into_iter().enumerate() {
                let i = m.injection(&parts, j).expect("coproduct witness");
                let lhs = comp!(m, &i, &cp);
                if lhs != *leg {
                    return violation(
                        "copair-beta",
                        vec![w(m, "f", f), w(m, "g", g)],
                        &lhs,
                        leg,
                    );
                }
            }
            LawResult::Holds
        }),
        q.objects2(s, "copair-eta", |a, bb| {
            let parts = [a.clone(), bb.clone()];
            let i0 = m.injection(&parts, 0).expect("coproduct witness");
            let i1 = m.injection(&parts, 1).expect("coproduct witness");
            let cp = m.copair(&[i0, i1]).expect("copairing");
            let id = m.identity(&m.coproduct(&parts).expect("coproduct witness"));
            if cp == id {
                LawResult::Holds
            } else {
                violation("copair-eta", vec![format!("objects {a}, {bb}")], &cp, &id)
            }
        }),
        // the restriction of a copairing is the coproduct of the restrictions
        q.shared_cod2(s, "copair-rest", |f, g| {
            let parts = [m.dom(f), m.dom(g)];
            let cp = m.copair(&[f.clone(), g.clone()]).expect("copairing");
            let lhs = m.restriction(&cp);
            let legs: Vec<M::Map> = [f, g]
                .into_iter()
                .enumerate()
                .map(|(j, leg)| {
                    let inj = m.injection(&parts, j).expect("coproduct witness");
                    comp!(m, &m.restriction(leg), &inj)
                })
                .collect();
            let rhs = m.copair(&legs).expect("copairing");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("copair-rest", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.shared_cod2_unique(s, "copair-unique", |f, g| {
            let parts = [m.dom(f), m.dom(g)];
            let c = m.cod(f);
            let sum = m.coproduct(&parts).expect("coproduct witness");
            if m.hom_size(&sum, &c) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let i0 = m.injection(&parts, 0).expect("coproduct witness");
            let i1 = m.injection(&parts, 1).expect("coproduct witness");
            let cp = m.copair(&[f.clone(), g.clone()]).expect("copairing");
            let mut hits = 0u32;
            for h in m.hom(&sum, &c) {
                if comp!(m, &i0, &h) == *f && comp!(m, &i1, &h) == *g {
                    hits += 1;
                    if h != cp {
                        return violation(
                            "copair-unique",
                            vec![w(m, "f", f), w(m, "g", g), w(m, "h", &h)],
                            &h,
                            &cp,
                        );
                    }
                }
            }
            if hits == 1 {
                LawResult::Holds
            } else {
                violation(
                    "copair-unique",
                    vec![w(m, "f", f), w(m, "g", g)],
                    hits,
                    "exactly one mediating map",
                )
            }
        }),
    ]
}

/// Restriction zeroes: nowhere-defined maps that absorb composition.
pub fn zeroes_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "zeroes";
    let sample = q.objs.first().cloned();
    let supported = sample
        .as_ref()
        .map(|a| m.zero(a, a).is_some())
        .unwrap_or(true);
    if !supported {
        return vec![q.skip(s, "zero-rest", "model has no zeroes")];
    }
    let objs = q.objs.clone();
    vec![
        q.objects2(s, "zero-rest", |a, bb| {
            let z = m.zero(a, bb).expect("zero witness");
            let zr = m.restriction(&z);
            let za = m.zero(a, a).expect("zero witness");
            if zr == za {
                LawResult::Holds
            } else {
                violation("zero-rest", vec![w(m, "0", &z)], &zr, &za)
            }
        }),
        q.maps1(s, "zero-absorb-right", |f| {
            for c in &objs {
                let z = m.zero(&m.cod(f), c).expect("zero witness");
                let lhs = comp!(m, f, &z);
                let want = m.zero(&m.dom(f), c).expect("zero witness");
                if lhs != want {
                    return violation("zero-absorb-right", vec![w(m, "f", f)], &lhs, &want);
                }
            }
            LawResult::Holds
        }),
        q.maps1(s, "zero-absorb-left", |f| {
            for c in &objs {
                let z = m.zero(c, &m.dom(f)).expect("zero witness");
                let lhs = comp!(m, &z, f);
                let want = m.zero(c, &m.cod(f)).expect("zero witness");
                if lhs != want {
                    return violation("zero-absorb-left", vec![w(m, "f", f)], &lhs, &want);
                }
            }
            LawResult::Holds
        }),
    ]
}

/// Quasi-projections of coproducts and their interaction with injections.
pub fn quasi_projection_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "quasi-projections";
    let sample = q.objs.first().cloned();
    let supported = sample
        .as_ref()
        .map(|a| m.coproduct(&[a.clone(), a.clone()]).is_some() && m.zero(a, a).is_some())
        .unwrap_or(true);
    if !supported {
        return vec![q.skip(s, "qproj-rest", "model lacks coproducts or zeroes")];
    }
    let qp = |parts: &[M::Obj], j: usize| -> M::Map {
        let legs: Vec<M::Map> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == j {
                    m.identity(p)
                } else {
                    m.zero(p, &parts[j]).expect("zero witness")
                }
            })
            .collect();
        m.copair(&legs).expect("copairing")
    };
    let mut reports = vec![
        q.objects2(s, "qproj-rest", |a, bb| {
            let parts = [a.clone(), bb.clone()];
            let sum = m.coproduct(&parts).expect("coproduct witness");
            for j in 0..2 {
                let qj = qp(&parts, j);
                let lhs = m.restriction(&qj);
                // the coproduct of one identity and zeroes, as a self-map
                let legs: Vec<M::Map> = parts
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        if i == j {
                            m.injection(&parts, j).expect("coproduct witness")
                        } else {
                            m.zero(p, &sum).expect("zero witness")
                        }
                    })
                    .collect();
                let rhs = m.copair(&legs).expect("copairing");
                if lhs != rhs {
                    return violation("qproj-rest", vec![w(m, "qproj", &qj)], &lhs, &rhs);
                }
            }
            LawResult::Holds
        }),
        q.objects2(s, "inj-qproj", |a, bb| {
            let parts = [a.clone(), bb.clone()];
            for i in 0..2 {
                for j in 0..2 {
                    let inj = m.injection(&parts, i).expect("coproduct witness");
                    let lhs = comp!(m, &inj, &qp(&parts, j));
                    let rhs = if i == j {
                        m.identity(&parts[i])
                    } else {
                        m.zero(&parts[i], &parts[j]).expect("zero witness")
                    };
                    if lhs != rhs {
                        return violation("inj-qproj", vec![w(m, "inj", &inj)], &lhs, &rhs);
                    }
                }
            }
            LawResult::Holds
        }),
        q.objects2(s, "qproj-inj", |a, bb| {
            let parts = [a.clone(), bb.clone()];
            for j in 0..2 {
                let qj = qp(&parts, j);
                let inj = m.injection(&parts, j).expect("coproduct witness");
                let lhs = comp!(m, &qj, &inj);
                let rhs = m.restriction(&qj);
                if lhs != rhs {
                    return violation("qproj-inj", vec![w(m, "qproj", &qj)], &lhs, &rhs);
                }
            }
            LawResult::Holds
        }),
        q.objects2(s, "qproj-rest-disjoint", |a, bb| {
            let parts = [a.clone(), bb.clone()];
            let sum = m.coproduct(&parts).expect("coproduct witness");
            let zero = m.zero(&sum, &sum).expect("zero witness");
            let r0 = m.restriction(&qp(&parts, 0));
            let r1 = m.restriction(&qp(&parts, 1));
            let lhs = comp!(m, &r0, &r1);
            if lhs == zero {
                LawResult::Holds
            } else {
                violation("qproj-rest-disjoint", vec![w(m, "r0", &r0), w(m, "r1", &r1)], &lhs, &zero)
            }
        }),
    ];
    if m.has_joins() {
        reports.push(q.objects2(s, "qproj-partition", |a, bb| {
            let parts = [a.clone(), bb.clone()];
            let sum = m.coproduct(&parts).expect("coproduct witness");
            let pieces: Vec<M::Map> = (0..2)
                .map(|j| {
                    let inj = m.injection(&parts, j).expect("coproduct witness");
                    comp!(m, &qp(&parts, j), &inj)
                })
                .collect();
            let lhs = m.join(&pieces, &sum, &sum).expect("disjoint pieces");
            let id = m.identity(&sum);
            if lhs == id {
                LawResult::Holds
            } else {
                violation("qproj-partition", vec![format!("objects {a}, {bb}")], &lhs, &id)
            }
        }));
    } else {
        reports.push(q.skip(s, "qproj-partition", "model has no joins"));
    }
    reports
}

/// The distributivity isomorphisms.
pub fn distributivity_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "distributivity";
    let sample = q.objs.first().cloned();
    let supported = sample
        .as_ref()
        .map(|a| m.distributivity(a, a, a).is_some())
        .unwrap_or(true);
    if !supported {
        return vec![q.skip(s, "dist-iso", "model has no distributivity witness")];
    }
    vec![
        q.objects3(s, "dist-canonical", |a, bb, c| {
            let (d, _) = m.distributivity(a, bb, c).expect("distributivity witness");
            let sum = m.coproduct(&[bb.clone(), c.clone()]).expect("coproduct witness");
            let legs: Vec<M::Map> = [bb, c]
                .into_iter()
                .enumerate()
                .map(|(j, x)| {
                    let p0 = m.projection(a, x, 0).expect("product witness");
                    let p1 = m.projection(a, x, 1).expect("product witness");
                    let inj = m.injection(&[bb.clone(), c.clone()], j).expect("coproduct witness");
                    let _ = sum;
                    m.pair(&p0, &comp!(m, &p1, &inj)).expect("pairing")
                })
                .collect();
            let canonical = m.copair(&legs).expect("copairing");
            if d == canonical {
                LawResult::Holds
            } else {
                violation("dist-canonical", vec![format!("objects {a}, {bb}, {c}")], &d, &canonical)
            }
        }),
        q.objects3(s, "dist-iso", |a, bb, c| {
            let (d, dinv) = m.distributivity(a, bb, c).expect("distributivity witness");
            let fwd = comp!(m, &d, &dinv);
            let bwd = comp!(m, &dinv, &d);
            if fwd == m.identity(&m.dom(&d)) && bwd == m.identity(&m.dom(&dinv)) {
                LawResult::Holds
            } else {
                violation("dist-iso", vec![w(m, "dist", &d)], &fwd, "identity")
            }
        }),
        q.objects1(s, "dist-zero", |a| {
            let zero_obj = match m.initial() {
                Some(z) => z,
                None => return LawResult::SkippedSite,
            };
            let prod = m.product(a, &zero_obj).expect("product witness");
            if m.obj_size(&prod) == 0 {
                LawResult::Holds
            } else {
                violation(
                    "dist-zero",
                    vec![format!("object {a}")],
                    m.obj_size(&prod),
                    0,
                )
            }
        }),
    ]
}

/// Everything above, in order.
pub fn axioms_and_structure<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let mut out = Vec::new();
    out.extend(category_suite(m, b));
    out.extend(restriction_suite(m, b));
    out.extend(restriction_identities_suite(m, b));
    out.extend(order_suite(m, b));
    out.extend(terminal_suite(m, b));
    out.extend(products_suite(m, b));
    out.extend(coproducts_suite(m, b));
    out.extend(zeroes_suite(m, b));
    out.extend(quasi_projection_suite(m, b));
    out.extend(distributivity_suite(m, b));
    out
}
