//! Idempotent splittings and the bridges between the genuine product
//! `A + B + (A * B)`, the restriction product, and the restriction
//! coproduct.
//!
//! Splitting the restriction idempotent `p0-bar p1-bar` recovers `A * B`;
//! splitting the complement join `p0-bar^c v p1-bar^c` recovers `A + B`; and
//! the three pieces together exhibit `A + B + (A * B)` as a restriction
//! coproduct with an explicit copairing.

use crate::classical::{
    classical_pair, classical_projection, complement, quasi_projection, AmpMemo,
};
use crate::error::Error;
use crate::finpar::{FinParModel, FinSet, PartialMap};
use crate::rescat::comp;
use crate::rescat::laws::w;
use crate::rescat::quantify::{violation, LawResult, Quant};
use crate::rescat::{disjoint, is_restriction_idempotent, is_total, Budget, LawReport, Model};

/// A splitting of a restriction idempotent: `retraction ; section = e` and
/// `section ; retraction = 1` on the middle object.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub idempotent: PartialMap,
    pub mid: FinSet,
    pub retraction: PartialMap,
    pub section: PartialMap,
}

/// Split a restriction idempotent of the partial-function model through the
/// canonical subset on which it is defined.
pub fn split_idempotent(e: &PartialMap) -> Result<Splitting, Error> {
    let (mid, retraction, section) = e.split()?;
    Ok(Splitting {
        idempotent: e.clone(),
        mid,
        retraction,
        section,
    })
}

/// Recover the restriction product of `a` and `b` by splitting
/// `p0-bar p1-bar` on `A + B + (A * B)`: the recovered projections are the
/// section followed by the classical projections.
pub fn restriction_product_from_amp(
    m: &FinParModel,
    a: &FinSet,
    b: &FinSet,
) -> Result<(FinSet, PartialMap, PartialMap), Error> {
    let p0 = classical_projection(m, a, b, 0)?;
    let p1 = classical_projection(m, a, b, 1)?;
    let e = p0.restriction().compose(&p1.restriction())?;
    let split = split_idempotent(&e)?;
    let pi0 = split.section.compose(&p0)?;
    let pi1 = split.section.compose(&p1)?;
    Ok((split.mid, pi0, pi1))
}

/// Recover the restriction coproduct of `a` and `b` by splitting
/// `p0-bar^c v p1-bar^c`: the recovered injections are the classical
/// pairings with a zero leg followed by the retraction.
pub fn restriction_coproduct_from_amp(
    m: &FinParModel,
    a: &FinSet,
    b: &FinSet,
) -> Result<(FinSet, PartialMap, PartialMap), Error> {
    let p0 = classical_projection(m, a, b, 0)?;
    let p1 = classical_projection(m, a, b, 1)?;
    let p0c = complement(m, &p0.restriction())?;
    let p1c = complement(m, &p1.restriction())?;
    let e = p0c.join(&p1c)?;
    let split = split_idempotent(&e)?;
    let zero_ab = PartialMap::zero(a, b);
    let zero_ba = PartialMap::zero(b, a);
    let i0 = classical_pair(m, &PartialMap::identity(a), &zero_ab)?.compose(&split.retraction)?;
    let i1 = classical_pair(m, &zero_ba, &PartialMap::identity(b))?.compose(&split.retraction)?;
    Ok((split.mid, i0, i1))
}

/// The injections exhibiting `A + B + (A * B)` as a restriction coproduct of
/// `A`, `B` and `A * B`, built from the classical pairing alone.
pub struct AmpCoproduct<M: Model> {
    pub inj0: M::Map,
    pub inj1: M::Map,
    pub inj2: M::Map,
}

pub fn amp_as_coproduct<M: Model>(m: &M, a: &M::Obj, b: &M::Obj) -> Result<AmpCoproduct<M>, Error> {
    let zero_ab = m.zero(a, b).ok_or(Error::NoZeroes)?;
    let zero_ba = m.zero(b, a).ok_or(Error::NoZeroes)?;
    let pi0 = m.projection(a, b, 0).ok_or(Error::Unsupported("products"))?;
    let pi1 = m.projection(a, b, 1).ok_or(Error::Unsupported("products"))?;
    Ok(AmpCoproduct {
        inj0: classical_pair(m, &m.identity(a), &zero_ab)?,
        inj1: classical_pair(m, &zero_ba, &m.identity(b))?,
        inj2: classical_pair(m, &pi0, &pi1)?,
    })
}

/// The splitting-bridge law suite.
pub fn splitting_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "splitting";
    if !m.has_joins() || !m.has_relative_complements() {
        return vec![q.skip(s, "prod-restprod-split", "model lacks joins or relative complements")];
    }
    let memo = AmpMemo::new();
    vec![
        // p0-bar p1-bar splits through A * B via <p0, p1> and the classical
        // pairing of the product projections.
        q.objects2(s, "prod-restprod-split", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let ebar = comp!(m, &m.restriction(&ctx.p0), &m.restriction(&ctx.p1));
            let r = m.pair(&ctx.p0, &ctx.p1).expect("pairing");
            let sct = classical_pair(m, &ctx.pi0, &ctx.pi1).expect("classical pairing");
            let rs = comp!(m, &r, &sct);
            if rs != ebar {
                return violation("prod-restprod-split", vec![w(m, "r", &r), w(m, "s", &sct)], &rs, &ebar);
            }
            let sr = comp!(m, &sct, &r);
            let id = m.identity(&m.product(a, bb).expect("product witness"));
            if sr != id {
                return violation("prod-restprod-split", vec![w(m, "r", &r), w(m, "s", &sct)], &sr, &id);
            }
            LawResult::Holds
        }),
        q.shared_dom2(s, "class-prod-pieces-rest", |f, g| {
            let ctx = memo.ctx(m, &m.cod(f), &m.cod(g));
            let pr = classical_pair(m, f, g).expect("classical pairing");
            let fc = complement(m, &m.restriction(f)).expect("idempotent");
            let gc = complement(m, &m.restriction(g)).expect("idempotent");
            let z = m.zero(&m.dom(f), &m.cod(f)).expect("zero witness");
            let zb = m.zero(&m.dom(f), &m.cod(g)).expect("zero witness");
            let lhs0 = comp!(m, &pr, &ctx.p0c);
            let rhs0 = classical_pair(m, &z, &comp!(m, &fc, g)).expect("classical pairing");
            if lhs0 != rhs0 {
                return violation("class-prod-pieces-rest", vec![w(m, "f", f), w(m, "g", g)], &lhs0, &rhs0);
            }
            let lhs1 = comp!(m, &pr, &ctx.p1c);
            let rhs1 = classical_pair(m, &comp!(m, &gc, f), &zb).expect("classical pairing");
            if lhs1 != rhs1 {
                return violation("class-prod-pieces-rest", vec![w(m, "f", f), w(m, "g", g)], &lhs1, &rhs1);
            }
            LawResult::Holds
        }),
        q.shared_dom2(s, "class-prod-pieces-proj", |f, g| {
            let ctx = memo.ctx(m, &m.cod(f), &m.cod(g));
            let pr = classical_pair(m, f, g).expect("classical pairing");
            let fc = complement(m, &m.restriction(f)).expect("idempotent");
            let gc = complement(m, &m.restriction(g)).expect("idempotent");
            let lhs0 = comp!(m, &comp!(m, &pr, &ctx.p0c), &ctx.p1);
            let rhs0 = comp!(m, &fc, g);
            if lhs0 != rhs0 {
                return violation("class-prod-pieces-proj", vec![w(m, "f", f), w(m, "g", g)], &lhs0, &rhs0);
            }
            let lhs1 = comp!(m, &comp!(m, &pr, &ctx.p1c), &ctx.p0);
            let rhs1 = comp!(m, &gc, f);
            if lhs1 != rhs1 {
                return violation("class-prod-pieces-proj", vec![w(m, "f", f), w(m, "g", g)], &lhs1, &rhs1);
            }
            LawResult::Holds
        }),
        q.objects2(s, "cproj-comp-disjoint", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            if disjoint(m, &ctx.p0c, &ctx.p1c).expect("zeroes present") {
                LawResult::Holds
            } else {
                violation("cproj-comp-disjoint", vec![w(m, "p0c", &ctx.p0c), w(m, "p1c", &ctx.p1c)], "disjoint", "overlapping")
            }
        }),
        q.objects2(s, "cproj-comp-join", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let lhs = m
                .join(&[ctx.p0c.clone(), ctx.p1c.clone()], &ctx.amp, &ctx.amp)
                .expect("disjoint idempotents");
            let rhs = classical_pair(m, &comp!(m, &ctx.p1c, &ctx.p0), &comp!(m, &ctx.p0c, &ctx.p1))
                .expect("classical pairing");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("cproj-comp-join", vec![format!("objects {a}, {bb}")], &lhs, &rhs)
            }
        }),
        q.objects2(s, "cproj-comp-pieces", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let za = m.zero(&ctx.amp, a).expect("zero witness");
            let zb = m.zero(&ctx.amp, bb).expect("zero witness");
            let left = classical_pair(m, &comp!(m, &ctx.p1c, &ctx.p0), &zb).expect("classical pairing");
            let right = classical_pair(m, &za, &comp!(m, &ctx.p0c, &ctx.p1)).expect("classical pairing");
            if !disjoint(m, &left, &right).expect("zeroes present") {
                return violation("cproj-comp-pieces", vec![w(m, "l", &left), w(m, "r", &right)], "disjoint", "overlapping");
            }
            let join = m.join(&[left, right], &ctx.amp, &ctx.amp).expect("disjoint pieces");
            let rhs = m
                .join(&[ctx.p0c.clone(), ctx.p1c.clone()], &ctx.amp, &ctx.amp)
                .expect("disjoint idempotents");
            if join == rhs {
                LawResult::Holds
            } else {
                violation("cproj-comp-pieces", vec![format!("objects {a}, {bb}")], &join, &rhs)
            }
        }),
        q.objects2(s, "cpair-unit-comp", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let ua = classical_pair(m, &m.identity(a), &m.zero(a, bb).expect("zero witness"))
                .expect("classical pairing");
            let ub = classical_pair(m, &m.zero(bb, a).expect("zero witness"), &m.identity(bb))
                .expect("classical pairing");
            let za = m.zero(a, &ctx.amp).expect("zero witness");
            let zb = m.zero(bb, &ctx.amp).expect("zero witness");
            if comp!(m, &ua, &ctx.p0c) != za {
                return violation("cpair-unit-comp", vec![w(m, "ua", &ua)], comp!(m, &ua, &ctx.p0c), &za);
            }
            if comp!(m, &ua, &ctx.p1c) != ua {
                return violation("cpair-unit-comp", vec![w(m, "ua", &ua)], comp!(m, &ua, &ctx.p1c), &ua);
            }
            if comp!(m, &ub, &ctx.p0c) != ub {
                return violation("cpair-unit-comp", vec![w(m, "ub", &ub)], comp!(m, &ub, &ctx.p0c), &ub);
            }
            if comp!(m, &ub, &ctx.p1c) != zb {
                return violation("cpair-unit-comp", vec![w(m, "ub", &ub)], comp!(m, &ub, &ctx.p1c), &zb);
            }
            LawResult::Holds
        }),
        // The complements split through B and A respectively.
        q.objects2(s, "comp-splits", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let ua = classical_pair(m, &m.identity(a), &m.zero(a, bb).expect("zero witness"))
                .expect("classical pairing");
            let ub = classical_pair(m, &m.zero(bb, a).expect("zero witness"), &m.identity(bb))
                .expect("classical pairing");
            let r0 = comp!(m, &ctx.p0c, &ctx.p1);
            if comp!(m, &r0, &ub) != ctx.p0c {
                return violation("comp-splits", vec![w(m, "r0", &r0)], comp!(m, &r0, &ub), &ctx.p0c);
            }
            if comp!(m, &ub, &r0) != m.identity(bb) {
                return violation("comp-splits", vec![w(m, "r0", &r0)], comp!(m, &ub, &r0), m.identity(bb));
            }
            let r1 = comp!(m, &ctx.p1c, &ctx.p0);
            if comp!(m, &r1, &ua) != ctx.p1c {
                return violation("comp-splits", vec![w(m, "r1", &r1)], comp!(m, &r1, &ua), &ctx.p1c);
            }
            if comp!(m, &ua, &r1) != m.identity(a) {
                return violation("comp-splits", vec![w(m, "r1", &r1)], comp!(m, &ua, &r1), m.identity(a));
            }
            LawResult::Holds
        }),
        // p0-bar^c v p1-bar^c splits through A + B, and the recovered
        // injections are total and canonical.
        q.objects2(s, "prod-restcoprod-split", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let parts = [a.clone(), bb.clone()];
            let sum = m.coproduct(&parts).expect("coproduct witness");
            let i0 = m.injection(&parts, 0).expect("coproduct witness");
            let i1 = m.injection(&parts, 1).expect("coproduct witness");
            let piece0 = comp!(m, &comp!(m, &ctx.p1c, &ctx.p0), &i0);
            let piece1 = comp!(m, &comp!(m, &ctx.p0c, &ctx.p1), &i1);
            let r = m.join(&[piece0, piece1], &ctx.amp, &sum).expect("disjoint pieces");
            let q0 = quasi_projection(m, &parts, 0).expect("zeroes present");
            let q1 = quasi_projection(m, &parts, 1).expect("zeroes present");
            let sct = classical_pair(m, &q0, &q1).expect("classical pairing");
            let rs = comp!(m, &r, &sct);
            let e = m
                .join(&[ctx.p0c.clone(), ctx.p1c.clone()], &ctx.amp, &ctx.amp)
                .expect("disjoint idempotents");
            if rs != e {
                return violation("prod-restcoprod-split", vec![w(m, "r", &r), w(m, "s", &sct)], &rs, &e);
            }
            let sr = comp!(m, &sct, &r);
            if sr != m.identity(&sum) {
                return violation("prod-restcoprod-split", vec![w(m, "r", &r), w(m, "s", &sct)], &sr, m.identity(&sum));
            }
            let ua = classical_pair(m, &m.identity(a), &m.zero(a, bb).expect("zero witness"))
                .expect("classical pairing");
            let rec0 = comp!(m, &ua, &r);
            if !is_total(m, &rec0) || rec0 != i0 {
                return violation("prod-restcoprod-split", vec![w(m, "rec0", &rec0)], &rec0, &i0);
            }
            let ub = classical_pair(m, &m.zero(bb, a).expect("zero witness"), &m.identity(bb))
                .expect("classical pairing");
            let rec1 = comp!(m, &ub, &r);
            if !is_total(m, &rec1) || rec1 != i1 {
                return violation("prod-restcoprod-split", vec![w(m, "rec1", &rec1)], &rec1, &i1);
            }
            LawResult::Holds
        }),
        // The copairing through the splitting agrees with the canonical one.
        q.shared_cod2(s, "coprod-copair-via-split", |f, g| {
            let (a, bb) = (m.dom(f), m.dom(g));
            let ctx = memo.ctx(m, &a, &bb);
            let parts = [a.clone(), bb.clone()];
            let q0 = quasi_projection(m, &parts, 0).expect("zeroes present");
            let q1 = quasi_projection(m, &parts, 1).expect("zeroes present");
            let sct = classical_pair(m, &q0, &q1).expect("classical pairing");
            let piece_f = comp!(m, &comp!(m, &ctx.p1c, &ctx.p0), f);
            let piece_g = comp!(m, &comp!(m, &ctx.p0c, &ctx.p1), g);
            let joined = m
                .join(&[piece_f, piece_g], &ctx.amp, &m.cod(f))
                .expect("disjoint pieces");
            let via_split = comp!(m, &sct, &joined);
            let canonical = m.copair(&[f.clone(), g.clone()]).expect("copairing");
            if via_split == canonical {
                LawResult::Holds
            } else {
                violation("coprod-copair-via-split", vec![w(m, "f", f), w(m, "g", g)], &via_split, &canonical)
            }
        }),
        q.objects2(s, "coprodsplit-partition", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let meet = comp!(m, &m.restriction(&ctx.p0), &m.restriction(&ctx.p1));
            for (x, y) in [(&ctx.p1c, &ctx.p0c), (&ctx.p1c, &meet), (&ctx.p0c, &meet)] {
                if !disjoint(m, x, y).expect("zeroes present") {
                    return violation("coprodsplit-partition", vec![w(m, "x", x), w(m, "y", y)], "disjoint", "overlapping");
                }
            }
            let join = m
                .join(&[ctx.p1c.clone(), ctx.p0c.clone(), meet], &ctx.amp, &ctx.amp)
                .expect("disjoint idempotents");
            if join == m.identity(&ctx.amp) {
                LawResult::Holds
            } else {
                violation("coprodsplit-partition", vec![format!("objects {a}, {bb}")], &join, m.identity(&ctx.amp))
            }
        }),
        // The classical pairings with unit legs are the canonical injections.
        q.objects2(s, "amp-injections", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let wit = amp_as_coproduct(m, a, bb).expect("classical structure");
            for (built, canonical) in [
                (&wit.inj0, &ctx.i0),
                (&wit.inj1, &ctx.i1),
                (&wit.inj2, &ctx.i2),
            ] {
                if built != canonical {
                    return violation("amp-injections", vec![w(m, "built", built)], built, canonical);
                }
            }
            LawResult::Holds
        }),
        q.shared_cod2_unique(s, "amp-copair3-beta", |f, g| {
            let (a, bb) = (m.dom(f), m.dom(g));
            let c = m.cod(f);
            let prod = m.product(&a, &bb).expect("product witness");
            if m.hom_size(&prod, &c) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let ctx = memo.ctx(m, &a, &bb);
            for h in m.hom(&prod, &c) {
                let cp = crate::classical::amp_copair3(m, &a, &bb, f, g, &h).expect("copairing");
                if comp!(m, &ctx.i0, &cp) != *f
                    || comp!(m, &ctx.i1, &cp) != *g
                    || comp!(m, &ctx.i2, &cp) != h
                {
                    return violation(
                        "amp-copair3-beta",
                        vec![w(m, "f", f), w(m, "g", g), w(m, "h", &h)],
                        &cp,
                        "a copairing restricting to its legs",
                    );
                }
                let canonical = m.copair(&[f.clone(), g.clone(), h.clone()]).expect("copairing");
                if cp != canonical {
                    return violation(
                        "amp-copair3-beta",
                        vec![w(m, "f", f), w(m, "g", g), w(m, "h", &h)],
                        &cp,
                        &canonical,
                    );
                }
            }
            LawResult::Holds
        }),
        q.objects3(s, "amp-copair3-zero", |a, bb, c| {
            let ctx = memo.ctx(m, a, bb);
            let za = m.zero(a, c).expect("zero witness");
            let zb = m.zero(bb, c).expect("zero witness");
            let zp = m.zero(&ctx.parts[2], c).expect("zero witness");
            let cp = crate::classical::amp_copair3(m, a, bb, &za, &zb, &zp).expect("copairing");
            let z = m.zero(&ctx.amp, c).expect("zero witness");
            if cp == z {
                LawResult::Holds
            } else {
                violation("amp-copair3-zero", vec![format!("objects {a}, {bb}, {c}")], &cp, &z)
            }
        }),
        q.objects2(s, "amp-proj-copair", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let za = m.zero(bb, a).expect("zero witness");
            let zb = m.zero(a, bb).expect("zero witness");
            let built0 = crate::classical::amp_copair3(m, a, bb, &m.identity(a), &za, &ctx.pi0)
                .expect("copairing");
            if built0 != ctx.p0 {
                return violation("amp-proj-copair", vec![format!("objects {a}, {bb}")], &built0, &ctx.p0);
            }
            let built1 = crate::classical::amp_copair3(m, a, bb, &zb, &m.identity(bb), &ctx.pi1)
                .expect("copairing");
            if built1 != ctx.p1 {
                return violation("amp-proj-copair", vec![format!("objects {a}, {bb}")], &built1, &ctx.p1);
            }
            LawResult::Holds
        }),
    ]
}

/// FinPar-specific splitting laws: every restriction idempotent splits
/// through its canonical subset.
pub fn finpar_splitting_suite(m: &FinParModel, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "splitting";
    vec![q.endo1(s, "split-idempotents", |e| {
        if !is_restriction_idempotent(m, e) {
            return LawResult::Vacuous;
        }
        let split = split_idempotent(e).expect("restriction idempotent");
        let rs = comp!(m, &split.retraction, &split.section);
        if rs != *e {
            return violation("split-idempotents", vec![w(m, "e", e)], &rs, e);
        }
        let sr = comp!(m, &split.section, &split.retraction);
        let id = m.identity(&split.mid);
        if sr != id {
            return violation("split-idempotents", vec![w(m, "e", e)], &sr, &id);
        }
        LawResult::Holds
    })]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_recovered_from_amp() {
        let m = FinParModel::demo();
        let a = FinSet::atom("A", &["a"]).unwrap();
        let b = FinSet::atom("B", &["b"]).unwrap();
        let (mid, pi0, pi1) = restriction_product_from_amp(&m, &a, &b).unwrap();
        assert_eq!(mid.size(), 1);
        assert!(pi0.is_total() && pi1.is_total());
        // splitting equations on the canonical split maps
        let p0 = classical_projection(&m, &a, &b, 0).unwrap();
        let p1 = classical_projection(&m, &a, &b, 1).unwrap();
        let e = p0.restriction().compose(&p1.restriction()).unwrap();
        let split = split_idempotent(&e).unwrap();
        assert_eq!(split.retraction.compose(&split.section).unwrap(), e);
        assert_eq!(
            split.section.compose(&split.retraction).unwrap(),
            PartialMap::identity(&split.mid)
        );
    }

    #[test]
    fn coproduct_recovered_from_amp() {
        let m = FinParModel::demo();
        let x = m.lookup_object("X").unwrap().clone();
        let y = m.lookup_object("Y").unwrap().clone();
        let (mid, i0, i1) = restriction_coproduct_from_amp(&m, &x, &y).unwrap();
        assert_eq!(mid.size(), x.size() + y.size());
        assert!(i0.is_total() && i1.is_total());
    }
}
