//! The opposite of finite Boolean rings with non-unital morphisms.
//!
//! Objects are rings of bit-vectors of a fixed rank under pointwise xor and
//! and; every element is idempotent. A map `A -> B` of the model is carried
//! by a non-unital ring homomorphism from the carrier of `B` to the carrier
//! of `A`, so composition reads backwards through the tables and the
//! corestriction of the underlying homomorphism plays the role of the
//! restriction. Spectrum duality identifies this model with the
//! partial-function model at matching sizes and is used as a cross-model
//! oracle throughout.

use std::fmt;

use crate::classical;
use crate::error::Error;
use crate::finpar::{FinParModel, FinSet, PartialMap};
use crate::rescat::comp;
use crate::rescat::laws::w;
use crate::rescat::quantify::{violation, LawResult, Quant};
use crate::rescat::{
    compatible, disjoint, is_restriction_idempotent, is_total, leq, Budget, LawReport, Model,
};

/// A finite Boolean ring: bit-vectors of length `rank` with pointwise xor
/// as addition and pointwise and as multiplication; the unit is all-ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BoolRing {
    rank: u8,
}

impl BoolRing {
    pub fn new(rank: u8) -> BoolRing {
        assert!(rank <= 12, "carrier tables are dense; keep ranks small");
        BoolRing { rank }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn carrier_size(&self) -> usize {
        1usize << self.rank
    }

    pub fn unit(&self) -> u16 {
        (self.carrier_size() - 1) as u16
    }

    pub fn carrier(&self) -> impl Iterator<Item = u16> {
        0..self.carrier_size() as u16
    }

    fn print_elem(&self, v: u16) -> String {
        (0..self.rank)
            .map(|i| if v & (1 << i) != 0 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BoolRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bring({})", self.rank)
    }
}

/// A map of the model, stored as the value table of the underlying
/// non-unital homomorphism `carrier(cod) -> carrier(dom)`. Additivity and
/// multiplicativity are checked over the full carrier on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CalgMap {
    dom: BoolRing,
    cod: BoolRing,
    table: Vec<u16>,
}

impl fmt::Display for CalgMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (v, w) in self.table.iter().enumerate() {
            if v > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{} -> {}",
                self.cod.print_elem(v as u16),
                self.dom.print_elem(*w)
            )?;
        }
        write!(f, "}}")
    }
}

impl CalgMap {
    pub fn new(dom: BoolRing, cod: BoolRing, table: Vec<u16>) -> Result<CalgMap, Error> {
        if table.len() != cod.carrier_size() {
            return Err(Error::Invalid(format!(
                "hom table must cover the full carrier of {cod}"
            )));
        }
        if table.iter().any(|&w| w > dom.unit()) {
            return Err(Error::Invalid(format!("hom table value outside {dom}")));
        }
        for x in cod.carrier() {
            for y in cod.carrier() {
                let add = table[(x ^ y) as usize];
                if add != table[x as usize] ^ table[y as usize] {
                    return Err(Error::Invalid(format!(
                        "table is not additive at {} and {}",
                        cod.print_elem(x),
                        cod.print_elem(y)
                    )));
                }
                let mul = table[(x & y) as usize];
                if mul != table[x as usize] & table[y as usize] {
                    return Err(Error::Invalid(format!(
                        "table is not multiplicative at {} and {}",
                        cod.print_elem(x),
                        cod.print_elem(y)
                    )));
                }
            }
        }
        Ok(CalgMap { dom, cod, table })
    }

    /// Build from the images of the codomain basis vectors. The images must
    /// be pairwise disjoint, which is exactly multiplicativity.
    pub fn from_basis(dom: BoolRing, cod: BoolRing, images: &[u16]) -> Result<CalgMap, Error> {
        if images.len() != cod.rank() as usize {
            return Err(Error::Invalid(format!(
                "expected {} basis images for {cod}",
                cod.rank()
            )));
        }
        for (i, x) in images.iter().enumerate() {
            if *x > dom.unit() {
                return Err(Error::Invalid(format!("basis image outside {dom}")));
            }
            for y in images.iter().skip(i + 1) {
                if x & y != 0 {
                    return Err(Error::Invalid(
                        "basis images must be pairwise disjoint".to_string(),
                    ));
                }
            }
        }
        let table = (0..cod.carrier_size() as u16)
            .map(|v| {
                (0..cod.rank())
                    .filter(|j| v & (1 << j) != 0)
                    .fold(0u16, |acc, j| acc ^ images[j as usize])
            })
            .collect();
        Ok(CalgMap { dom, cod, table })
    }

    pub fn dom(&self) -> BoolRing {
        self.dom
    }

    pub fn cod(&self) -> BoolRing {
        self.cod
    }

    pub fn value(&self, v: u16) -> u16 {
        self.table[v as usize]
    }

    /// The image of the unit: the idempotent element carrying the
    /// corestriction.
    pub fn unit_image(&self) -> u16 {
        self.table[self.cod.unit() as usize]
    }

    pub fn basis_image(&self, j: u8) -> u16 {
        self.table[1usize << j]
    }
}

/// The corestriction of the underlying homomorphism: multiplication by the
/// image of the unit.
pub fn corestriction(f: &CalgMap) -> CalgMap {
    let u = f.unit_image();
    let table = f.dom.carrier().map(|v| u & v).collect();
    CalgMap {
        dom: f.dom,
        cod: f.dom,
        table,
    }
}

/// The join formula of the model: `f(a) + g(a) + g(1)f(a)` pointwise.
pub fn calg_join(f: &CalgMap, g: &CalgMap) -> Result<CalgMap, Error> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::mismatch("join", f.dom.to_string(), g.dom.to_string()));
    }
    if !calg_compatible(f, g)? {
        return Err(Error::Incompatible(0, 1));
    }
    let g1 = g.unit_image();
    let table = f
        .table
        .iter()
        .zip(g.table.iter())
        .map(|(&fv, &gv)| fv ^ gv ^ (g1 & fv))
        .collect();
    Ok(CalgMap {
        dom: f.dom,
        cod: f.cod,
        table,
    })
}

/// The relative-complement formula: `g(a) + f(1)g(a)` pointwise.
pub fn calg_relative_complement(g: &CalgMap, f: &CalgMap) -> Result<CalgMap, Error> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::mismatch("relative complement", g.dom.to_string(), f.dom.to_string()));
    }
    if !calg_leq(f, g)? {
        return Err(Error::NotBelow);
    }
    let f1 = f.unit_image();
    let table = g.table.iter().map(|&gv| gv ^ (f1 & gv)).collect();
    Ok(CalgMap {
        dom: g.dom,
        cod: g.cod,
        table,
    })
}

/// The complement formula for a corestriction idempotent `e_u`: the
/// idempotent of the element `1 + u`.
pub fn calg_complement(e: &CalgMap) -> Result<CalgMap, Error> {
    if e.dom != e.cod {
        return Err(Error::NotIdempotent);
    }
    let u = e.unit_image();
    let idem = e.dom.carrier().all(|v| e.value(v) == u & v);
    if !idem {
        return Err(Error::NotIdempotent);
    }
    let cu = e.dom.unit() ^ u;
    let table = e.dom.carrier().map(|v| cu & v).collect();
    Ok(CalgMap {
        dom: e.dom,
        cod: e.dom,
        table,
    })
}

/// The order formula: `f <= g` iff `f(1)g(a) = f(a)` for every `a`.
pub fn calg_leq(f: &CalgMap, g: &CalgMap) -> Result<bool, Error> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::mismatch("order", f.dom.to_string(), g.dom.to_string()));
    }
    let f1 = f.unit_image();
    Ok(f
        .table
        .iter()
        .zip(g.table.iter())
        .all(|(&fv, &gv)| f1 & gv == fv))
}

/// The compatibility formula: `g(1)f(a) = f(1)g(a)` for every `a`.
pub fn calg_compatible(f: &CalgMap, g: &CalgMap) -> Result<bool, Error> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::mismatch("compatibility", f.dom.to_string(), g.dom.to_string()));
    }
    let (f1, g1) = (f.unit_image(), g.unit_image());
    Ok(f
        .table
        .iter()
        .zip(g.table.iter())
        .all(|(&fv, &gv)| g1 & fv == f1 & gv))
}

/// The disjointness formula: `g(1)f(a) = 0` for every `a`.
pub fn calg_disjoint(f: &CalgMap, g: &CalgMap) -> Result<bool, Error> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::mismatch("disjointness", f.dom.to_string(), g.dom.to_string()));
    }
    let (f1, g1) = (f.unit_image(), g.unit_image());
    Ok(f
        .table
        .iter()
        .zip(g.table.iter())
        .all(|(&fv, &gv)| g1 & fv == 0 && f1 & gv == 0))
}

/// The classifier formula: the unital homomorphism
/// `(a, r) -> f(a) + r + r f(1)` out of the product with the base ring,
/// packaged as a total map into `B + 1`.
pub fn calg_classify(f: &CalgMap) -> CalgMap {
    let rb = f.cod.rank();
    let target = BoolRing::new(rb + 1);
    let unit_a = f.dom.unit();
    let f1 = f.unit_image();
    let mask = (1u16 << rb) - 1;
    let table = target
        .carrier()
        .map(|w| {
            let v = w & mask;
            let r = (w >> rb) & 1;
            if r == 1 {
                f.value(v) ^ unit_a ^ f1
            } else {
                f.value(v)
            }
        })
        .collect();
    CalgMap {
        dom: f.dom,
        cod: target,
        table,
    }
}

// ---------------------------------------------------------------------
// Spectrum duality with the partial-function model.
// ---------------------------------------------------------------------

/// The ring of subsets of a finite object.
pub fn dual_object(x: &FinSet) -> Result<BoolRing, Error> {
    if x.size() > 12 {
        return Err(Error::BudgetExceeded(format!(
            "object {x} is too large to dualize"
        )));
    }
    Ok(BoolRing::new(x.size() as u8))
}

/// Dualize a partial map into the inverse-image homomorphism.
pub fn dualize(f: &PartialMap) -> Result<CalgMap, Error> {
    let dom = dual_object(f.dom())?;
    let cod = dual_object(f.cod())?;
    let images: Vec<u16> = (0..cod.rank())
        .map(|j| {
            let mut mask = 0u16;
            for (i, v) in f.graph().iter().enumerate() {
                if *v == Some(j as u32) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    CalgMap::from_basis(dom, cod, &images)
}

/// Recover the partial map a homomorphism came from.
pub fn undualize(h: &CalgMap, x: &FinSet, y: &FinSet) -> Result<PartialMap, Error> {
    if h.dom.rank() as usize != x.size() || h.cod.rank() as usize != y.size() {
        return Err(Error::mismatch(
            "undualize",
            format!("bring({}) -> bring({})", x.size(), y.size()),
            format!("{} -> {}", h.dom, h.cod),
        ));
    }
    let graph = (0..x.size())
        .map(|i| {
            (0..h.cod.rank()).find_map(|j| {
                if h.basis_image(j) & (1 << i) != 0 {
                    Some(j as u32)
                } else {
                    None
                }
            })
        })
        .collect();
    PartialMap::new(x.clone(), y.clone(), graph)
}

// ---------------------------------------------------------------------
// The model.
// ---------------------------------------------------------------------

/// The opposite of finite Boolean rings with non-unital morphisms, with
/// objects of every rank up to a bound.
#[derive(Clone, Debug)]
pub struct CalgModel {
    max_rank: u8,
}

impl CalgModel {
    pub fn new(max_rank: u8) -> CalgModel {
        CalgModel { max_rank }
    }
}

impl Model for CalgModel {
    type Obj = BoolRing;
    type Map = CalgMap;

    fn model_name(&self) -> String {
        "calg".to_string()
    }

    fn objects(&self) -> Vec<BoolRing> {
        (0..=self.max_rank).map(BoolRing::new).collect()
    }

    fn obj_size(&self, a: &BoolRing) -> usize {
        a.rank() as usize
    }

    fn hom_size(&self, a: &BoolRing, b: &BoolRing) -> u128 {
        ((b.rank() + 1) as u128).pow(a.rank() as u32)
    }

    fn hom_nth(&self, a: &BoolRing, b: &BoolRing, n: u128) -> CalgMap {
        let width = (b.rank() + 1) as u128;
        let mut k = n;
        let mut images = vec![0u16; b.rank() as usize];
        for i in 0..a.rank() {
            let digit = (k % width) as u16;
            k /= width;
            if digit > 0 {
                images[(digit - 1) as usize] |= 1 << i;
            }
        }
        CalgMap::from_basis(*a, *b, &images).expect("disjoint basis images")
    }

    fn dom(&self, f: &CalgMap) -> BoolRing {
        f.dom
    }

    fn cod(&self, f: &CalgMap) -> BoolRing {
        f.cod
    }

    fn identity(&self, a: &BoolRing) -> CalgMap {
        CalgMap {
            dom: *a,
            cod: *a,
            table: a.carrier().collect(),
        }
    }

    fn compose(&self, f: &CalgMap, g: &CalgMap) -> Result<CalgMap, Error> {
        if f.cod != g.dom {
            return Err(Error::mismatch(
                "composition",
                f.cod.to_string(),
                g.dom.to_string(),
            ));
        }
        let table = g.cod.carrier().map(|w| f.value(g.value(w))).collect();
        Ok(CalgMap {
            dom: f.dom,
            cod: g.cod,
            table,
        })
    }

    fn restriction(&self, f: &CalgMap) -> CalgMap {
        corestriction(f)
    }

    fn terminal(&self) -> Option<BoolRing> {
        Some(BoolRing::new(1))
    }

    fn bang(&self, a: &BoolRing) -> Option<CalgMap> {
        Some(CalgMap {
            dom: *a,
            cod: BoolRing::new(1),
            table: vec![0, a.unit()],
        })
    }

    fn initial(&self) -> Option<BoolRing> {
        Some(BoolRing::new(0))
    }

    fn from_initial(&self, a: &BoolRing) -> Option<CalgMap> {
        Some(CalgMap {
            dom: BoolRing::new(0),
            cod: *a,
            table: vec![0; a.carrier_size()],
        })
    }

    fn zero(&self, a: &BoolRing, b: &BoolRing) -> Option<CalgMap> {
        Some(CalgMap {
            dom: *a,
            cod: *b,
            table: vec![0; b.carrier_size()],
        })
    }

    fn product(&self, a: &BoolRing, b: &BoolRing) -> Option<BoolRing> {
        Some(BoolRing::new(a.rank() * b.rank()))
    }

    fn projection(&self, a: &BoolRing, b: &BoolRing, i: usize) -> Option<CalgMap> {
        let prod = self.product(a, b)?;
        let (ra, rb) = (a.rank(), b.rank());
        let target = if i == 0 { a } else { b };
        let images: Vec<u16> = (0..target.rank())
            .map(|t| {
                let mut mask = 0u16;
                for ia in 0..ra {
                    for ib in 0..rb {
                        let hit = if i == 0 { ia == t } else { ib == t };
                        if hit {
                            mask |= 1 << (ia * rb + ib);
                        }
                    }
                }
                mask
            })
            .collect();
        CalgMap::from_basis(prod, *target, &images).ok()
    }

    fn pair(&self, f: &CalgMap, g: &CalgMap) -> Result<CalgMap, Error> {
        if f.dom != g.dom {
            return Err(Error::mismatch("pairing", f.dom.to_string(), g.dom.to_string()));
        }
        let prod = BoolRing::new(f.cod.rank() * g.cod.rank());
        let rb = g.cod.rank();
        let mut images = vec![0u16; prod.rank() as usize];
        for i in 0..f.cod.rank() {
            for j in 0..rb {
                images[(i * rb + j) as usize] = f.basis_image(i) & g.basis_image(j);
            }
        }
        CalgMap::from_basis(f.dom, prod, &images)
    }

    fn coproduct(&self, parts: &[BoolRing]) -> Option<BoolRing> {
        Some(BoolRing::new(parts.iter().map(|p| p.rank()).sum()))
    }

    fn injection(&self, parts: &[BoolRing], j: usize) -> Option<CalgMap> {
        if j >= parts.len() {
            return None;
        }
        let sum = self.coproduct(parts)?;
        let offset: u8 = parts[..j].iter().map(|p| p.rank()).sum();
        let images: Vec<u16> = (0..sum.rank())
            .map(|k| {
                if k >= offset && k < offset + parts[j].rank() {
                    1u16 << (k - offset)
                } else {
                    0
                }
            })
            .collect();
        CalgMap::from_basis(parts[j], sum, &images).ok()
    }

    fn copair(&self, fs: &[CalgMap]) -> Result<CalgMap, Error> {
        let first = fs.first().ok_or(Error::Unsupported("empty copairing"))?;
        for f in fs {
            if f.cod != first.cod {
                return Err(Error::mismatch(
                    "copairing",
                    first.cod.to_string(),
                    f.cod.to_string(),
                ));
            }
        }
        let parts: Vec<BoolRing> = fs.iter().map(|f| f.dom).collect();
        let sum = self.coproduct(&parts).expect("rank sum");
        let table = first
            .cod
            .carrier()
            .map(|w| {
                let mut acc = 0u16;
                let mut offset = 0u8;
                for f in fs {
                    acc |= f.value(w) << offset;
                    offset += f.dom.rank();
                }
                acc
            })
            .collect();
        Ok(CalgMap {
            dom: sum,
            cod: first.cod,
            table,
        })
    }

    fn distributivity(&self, a: &BoolRing, b: &BoolRing, c: &BoolRing) -> Option<(CalgMap, CalgMap)> {
        let (na, nb, nc) = (a.rank(), b.rank(), c.rank());
        let sum_of_prods = BoolRing::new(na * nb + na * nc);
        let prod = BoolRing::new(na * (nb + nc));
        let locate = |i: u8, k: u8| -> u8 {
            if k < nb {
                i * nb + k
            } else {
                na * nb + i * nc + (k - nb)
            }
        };
        let fwd_images: Vec<u16> = (0..prod.rank())
            .map(|p| {
                let (i, k) = (p / (nb + nc), p % (nb + nc));
                1u16 << locate(i, k)
            })
            .collect();
        let fwd = CalgMap::from_basis(sum_of_prods, prod, &fwd_images).ok()?;
        let bwd_images: Vec<u16> = {
            let mut images = vec![0u16; sum_of_prods.rank() as usize];
            for p in 0..prod.rank() {
                let (i, k) = (p / (nb + nc), p % (nb + nc));
                images[locate(i, k) as usize] = 1u16 << p;
            }
            images
        };
        let bwd = CalgMap::from_basis(prod, sum_of_prods, &bwd_images).ok()?;
        Some((fwd, bwd))
    }

    fn has_joins(&self) -> bool {
        true
    }

    fn join(&self, fs: &[CalgMap], a: &BoolRing, b: &BoolRing) -> Result<CalgMap, Error> {
        for f in fs {
            if f.dom != *a || f.cod != *b {
                return Err(Error::mismatch("join", a.to_string(), f.dom.to_string()));
            }
        }
        for i in 0..fs.len() {
            for j in (i + 1)..fs.len() {
                if !calg_compatible(&fs[i], &fs[j])? {
                    return Err(Error::Incompatible(i, j));
                }
            }
        }
        let mut acc = self.zero(a, b).expect("zero");
        for f in fs {
            acc = calg_join(&acc, f)?;
        }
        Ok(acc)
    }

    fn has_relative_complements(&self) -> bool {
        true
    }

    fn relative_complement(&self, g: &CalgMap, f: &CalgMap) -> Result<CalgMap, Error> {
        calg_relative_complement(g, f)
    }
}

// ---------------------------------------------------------------------
// Law suites.
// ---------------------------------------------------------------------

/// Formula-level laws of the ring model: the closed forms of the order
/// relations, totality as unitality, the idempotent-element correspondence,
/// and the classifier formula against the generic construction.
pub fn calg_formula_suite(m: &CalgModel, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "calg-formulas";
    vec![
        q.parallel2(s, "leq-formula", |f, g| {
            let generic = leq(m, f, g).expect("parallel");
            let formula = calg_leq(f, g).expect("parallel");
            if generic == formula {
                LawResult::Holds
            } else {
                violation("leq-formula", vec![w(m, "f", f), w(m, "g", g)], generic, formula)
            }
        }),
        q.parallel2(s, "compat-formula", |f, g| {
            let generic = compatible(m, f, g).expect("parallel");
            let formula = calg_compatible(f, g).expect("parallel");
            if generic == formula {
                LawResult::Holds
            } else {
                violation("compat-formula", vec![w(m, "f", f), w(m, "g", g)], generic, formula)
            }
        }),
        q.parallel2(s, "disjoint-formula", |f, g| {
            let generic = disjoint(m, f, g).expect("zeroes present");
            let formula = calg_disjoint(f, g).expect("parallel");
            if generic == formula {
                LawResult::Holds
            } else {
                violation("disjoint-formula", vec![w(m, "f", f), w(m, "g", g)], generic, formula)
            }
        }),
        q.maps1(s, "unital-total", |f| {
            let total = is_total(m, f);
            let unital = f.unit_image() == f.dom().unit();
            if total == unital {
                LawResult::Holds
            } else {
                violation("unital-total", vec![w(m, "f", f)], total, unital)
            }
        }),
        q.endo1(s, "complement-formula", |e| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let formula = calg_complement(e).expect("idempotent");
            let generic = classical::complement(m, e).expect("idempotent");
            if formula == generic {
                LawResult::Holds
            } else {
                violation("complement-formula", vec![w(m, "e", e)], &formula, &generic)
            }
        }),
        q.objects1(s, "idem-elements", |a| {
            let mut count = 0usize;
            for n in 0..m.hom_size(a, a) {
                let e = m.hom_nth(a, a, n);
                if is_restriction_idempotent(m, &e) {
                    count += 1;
                    let u = e.unit_image();
                    if a.carrier().any(|v| e.value(v) != u & v) {
                        return violation(
                            "idem-elements",
                            vec![w(m, "e", &e)],
                            &e,
                            "multiplication by an idempotent element",
                        );
                    }
                    if u & u != u {
                        return violation("idem-elements", vec![w(m, "e", &e)], u, "an idempotent element");
                    }
                }
            }
            if count == a.carrier_size() {
                LawResult::Holds
            } else {
                violation(
                    "idem-elements",
                    vec![format!("object {a}")],
                    count,
                    a.carrier_size(),
                )
            }
        }),
        q.maps1(s, "classify-formula", |f| {
            let formula = calg_classify(f);
            let generic = classical::classify(m, f).expect("classical structure");
            if formula == generic {
                LawResult::Holds
            } else {
                violation("classify-formula", vec![w(m, "f", f)], &formula, &generic)
            }
        }),
        q.maps1(s, "classify-recovers", |f| {
            // composing with the coclassifying map recovers f: the
            // classifier table at r = 0 is the original table
            let t = calg_classify(f);
            let mask = (1u16 << f.cod().rank()) - 1;
            for v in f.cod().carrier() {
                if t.value(v & mask) != f.value(v) {
                    return violation("classify-recovers", vec![w(m, "f", f)], t.value(v), f.value(v));
                }
            }
            LawResult::Holds
        }),
        q.maps1_unique(s, "classify-unique", |f| {
            let target = BoolRing::new(f.cod().rank() + 1);
            if m.hom_size(&f.dom(), &target) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let t = calg_classify(f);
            let rb = f.cod().rank();
            let mask = (1u16 << rb) - 1;
            for n in 0..m.hom_size(&f.dom(), &target) {
                let h = m.hom_nth(&f.dom(), &target, n);
                let total = h.unit_image() == h.dom().unit();
                let factors = f.cod().carrier().all(|v| h.value(v & mask) == f.value(v));
                if total && factors && h != t {
                    return violation("classify-unique", vec![w(m, "f", f), w(m, "h", &h)], &h, &t);
                }
            }
            LawResult::Holds
        }),
    ]
}

/// Transport laws along spectrum duality: the duality is functorial, full
/// and faithful, and carries restriction, joins, relative complements,
/// complements and the classifier to their ring-model formulas.
pub fn duality_suite(m: &FinParModel, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let cm = CalgModel::new(b.max_size.min(8) as u8);
    let s = "duality";
    vec![
        q.chain2(s, "functorial", |f, g| {
            let lhs = dualize(&comp!(m, f, g)).expect("small");
            let rhs = cm
                .compose(&dualize(f).expect("small"), &dualize(g).expect("small"))
                .expect("composable");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("functorial", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.objects1(s, "functorial-identity", |a| {
            let lhs = dualize(&PartialMap::identity(a)).expect("small");
            let rhs = cm.identity(&dual_object(a).expect("small"));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("functorial-identity", vec![format!("object {a}")], &lhs, &rhs)
            }
        }),
        q.parallel2(s, "faithful", |f, g| {
            let (df, dg) = (dualize(f).expect("small"), dualize(g).expect("small"));
            if (f == g) == (df == dg) {
                LawResult::Holds
            } else {
                violation("faithful", vec![w(m, "f", f), w(m, "g", g)], &df, &dg)
            }
        }),
        q.objects2(s, "full", |a, bb| {
            let (da, db) = (dual_object(a).expect("small"), dual_object(bb).expect("small"));
            if cm.hom_size(&da, &db) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            for n in 0..cm.hom_size(&da, &db) {
                let h = cm.hom_nth(&da, &db, n);
                let back = undualize(&h, a, bb).expect("rank match");
                if dualize(&back).expect("small") != h {
                    return violation("full", vec![w(&cm, "h", &h)], &h, "in the image of dualization");
                }
            }
            LawResult::Holds
        }),
        q.maps1(s, "rest-transport", |f| {
            let lhs = dualize(&f.restriction()).expect("small");
            let rhs = corestriction(&dualize(f).expect("small"));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("rest-transport", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.parallel2(s, "join-transport", |f, g| {
            if !f.compatible(g).expect("parallel") {
                // incompatibility must transport too
                return match calg_join(&dualize(f).expect("small"), &dualize(g).expect("small")) {
                    Err(Error::Incompatible(_, _)) => LawResult::Holds,
                    _ => violation("join-transport", vec![w(m, "f", f), w(m, "g", g)], "incompatible", "compatible"),
                };
            }
            let lhs = dualize(&f.join(g).expect("compatible")).expect("small");
            let rhs = calg_join(&dualize(f).expect("small"), &dualize(g).expect("small"))
                .expect("compatible");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("join-transport", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.parallel2(s, "relcomp-transport", |g, f| {
            if !f.leq(g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let lhs = dualize(&g.relative_complement(f).expect("f <= g")).expect("small");
            let rhs = calg_relative_complement(
                &dualize(g).expect("small"),
                &dualize(f).expect("small"),
            )
            .expect("f <= g");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("relcomp-transport", vec![w(m, "g", g), w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.endo1(s, "complement-transport", |e| {
            if !e.is_restriction_idempotent() {
                return LawResult::Vacuous;
            }
            let lhs = dualize(&e.complement().expect("idempotent")).expect("small");
            let rhs = calg_complement(&dualize(e).expect("small")).expect("idempotent");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("complement-transport", vec![w(m, "e", e)], &lhs, &rhs)
            }
        }),
        q.maps1(s, "classifier-transport", |f| {
            let t = classical::classify(m, f).expect("classical structure");
            let lhs = dualize(&t).expect("small");
            let rhs = calg_classify(&dualize(f).expect("small"));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("classifier-transport", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.parallel2(s, "relation-transport", |f, g| {
            let (df, dg) = (dualize(f).expect("small"), dualize(g).expect("small"));
            let ok = f.leq(g).expect("parallel") == calg_leq(&df, &dg).expect("parallel")
                && f.compatible(g).expect("parallel")
                    == calg_compatible(&df, &dg).expect("parallel")
                && f.disjoint(g).expect("parallel") == calg_disjoint(&df, &dg).expect("parallel");
            if ok {
                LawResult::Holds
            } else {
                violation("relation-transport", vec![w(m, "f", f), w(m, "g", g)], "matching relations", "mismatch")
            }
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_validation_rejects_non_homs() {
        let a = BoolRing::new(1);
        let b = BoolRing::new(1);
        // not additive: sends 0 to 1
        assert!(CalgMap::new(a, b, vec![1, 1]).is_err());
        // identity is fine
        assert!(CalgMap::new(a, b, vec![0, 1]).is_ok());
        // overlapping basis images are not multiplicative
        let c = BoolRing::new(2);
        assert!(CalgMap::from_basis(a, c, &[1, 1]).is_err());
    }

    #[test]
    fn corestriction_formula_cases() {
        let m = CalgModel::new(3);
        let a = BoolRing::new(2);
        // unital map has identity corestriction
        let id = m.identity(&a);
        assert_eq!(corestriction(&id), id);
        // zero map has zero corestriction
        let z = m.zero(&a, &a).unwrap();
        assert_eq!(corestriction(&z), z);
        // rank-1 to rank-1 with f(1) = 0 annihilates
        let one = BoolRing::new(1);
        let f = CalgMap::new(one, one, vec![0, 0]).unwrap();
        assert_eq!(corestriction(&f), m.zero(&one, &one).unwrap());
    }

    #[test]
    fn complement_of_unit_is_zero_element() {
        let a = BoolRing::new(2);
        let m = CalgModel::new(3);
        let e1 = m.identity(&a); // e_u with u = 1
        let c = calg_complement(&e1).unwrap();
        assert_eq!(c, m.zero(&a, &a).unwrap());
        assert_eq!(calg_complement(&c).unwrap(), e1);
    }

    #[test]
    fn duality_round_trips() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let y = FinSet::atom("Y", &["y0"]).unwrap();
        let f = PartialMap::new(x.clone(), y.clone(), vec![Some(0), None]).unwrap();
        let d = dualize(&f).unwrap();
        assert_eq!(d.dom().rank(), 2);
        assert_eq!(d.cod().rank(), 1);
        assert_eq!(undualize(&d, &x, &y).unwrap(), f);
        // restriction transports to corestriction
        assert_eq!(dualize(&f.restriction()).unwrap(), corestriction(&d));
    }

    #[test]
    fn classify_formula_special_cases() {
        let m = CalgModel::new(2);
        let a = BoolRing::new(1);
        // f = 0 classifies to T(f)(a, r) = r alone
        let z = m.zero(&a, &a).unwrap();
        let t = calg_classify(&z);
        assert_eq!(t.cod().rank(), 2);
        for w in t.cod().carrier() {
            let r = (w >> 1) & 1;
            assert_eq!(t.value(w), if r == 1 { a.unit() } else { 0 });
        }
        // unital f: at r = 0 the classifier is f itself
        let id = m.identity(&a);
        let t = calg_classify(&id);
        assert_eq!(t.value(0), 0);
        assert_eq!(t.value(1), 1);
    }
}
