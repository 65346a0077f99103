//! Joins, relative complements, complements of restriction idempotents, the
//! `A + B + (A * B)` product, decisions, and the classifier factorization —
//! every construction expressed generically over a [`Model`] with the needed
//! structure.
//!
//! The model's own `join`, `relative_complement` and `decision` are treated
//! as primitives (in the partial-function model they are pointwise graph
//! operations); the derived constructions here are built out of pairing,
//! copairing and complements, and the law suites compare the two routes
//! against each other.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::error::Error;
use crate::rescat::comp;
use crate::rescat::laws::w;
use crate::rescat::quantify::{violation, LawResult, Quant};
use crate::rescat::{compatible, disjoint, is_restriction_idempotent, leq, Budget, LawReport, Model};

/// The structure maps attached to one `A + B + (A * B)` object, built once
/// per object pair and shared by the law bodies.
pub(crate) struct AmpCtx<M: Model> {
    pub parts: [M::Obj; 3],
    pub amp: M::Obj,
    pub p0: M::Map,
    pub p1: M::Map,
    pub p0c: M::Map,
    pub p1c: M::Map,
    pub q0: M::Map,
    pub q1: M::Map,
    pub q2: M::Map,
    pub i0: M::Map,
    pub i1: M::Map,
    pub i2: M::Map,
    pub pi0: M::Map,
    pub pi1: M::Map,
}

pub(crate) struct AmpMemo<M: Model> {
    cache: RefCell<HashMap<(M::Obj, M::Obj), Rc<AmpCtx<M>>>>,
}

impl<M: Model> AmpMemo<M> {
    pub fn new() -> AmpMemo<M> {
        AmpMemo {
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn ctx(&self, m: &M, a: &M::Obj, b: &M::Obj) -> Rc<AmpCtx<M>> {
        if let Some(hit) = self.cache.borrow().get(&(a.clone(), b.clone())) {
            return hit.clone();
        }
        let parts = amp_parts(m, a, b).expect("products");
        let amp = m.coproduct(&parts).expect("coproducts");
        let p0 = classical_projection(m, a, b, 0).expect("classical projection");
        let p1 = classical_projection(m, a, b, 1).expect("classical projection");
        let ctx = Rc::new(AmpCtx {
            p0c: complement(m, &m.restriction(&p0)).expect("idempotent"),
            p1c: complement(m, &m.restriction(&p1)).expect("idempotent"),
            q0: quasi_projection(m, &parts, 0).expect("zeroes"),
            q1: quasi_projection(m, &parts, 1).expect("zeroes"),
            q2: quasi_projection(m, &parts, 2).expect("zeroes"),
            i0: m.injection(&parts, 0).expect("coproducts"),
            i1: m.injection(&parts, 1).expect("coproducts"),
            i2: m.injection(&parts, 2).expect("coproducts"),
            pi0: m.projection(a, b, 0).expect("products"),
            pi1: m.projection(a, b, 1).expect("products"),
            p0,
            p1,
            parts,
            amp,
        });
        self.cache
            .borrow_mut()
            .insert((a.clone(), b.clone()), ctx.clone());
        ctx
    }
}

/// The quasi-projection of a coproduct: zeroes everywhere except one
/// identity.
pub fn quasi_projection<M: Model>(m: &M, parts: &[M::Obj], j: usize) -> Result<M::Map, Error> {
    if j >= parts.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            what: "quasi-projection".to_string(),
        });
    }
    let legs: Vec<M::Map> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if i == j {
                Ok(m.identity(p))
            } else {
                m.zero(p, &parts[j]).ok_or(Error::NoZeroes)
            }
        })
        .collect::<Result<_, _>>()?;
    m.copair(&legs)
}

/// Complement of a restriction idempotent: its relative complement in the
/// identity.
pub fn complement<M: Model>(m: &M, e: &M::Map) -> Result<M::Map, Error> {
    if !is_restriction_idempotent(m, e) {
        return Err(Error::NotIdempotent);
    }
    m.relative_complement(&m.identity(&m.dom(e)), e)
}

/// The three summands `[A, B, A * B]` of the candidate product object.
pub fn amp_parts<M: Model>(m: &M, a: &M::Obj, b: &M::Obj) -> Result<[M::Obj; 3], Error> {
    let prod = m.product(a, b).ok_or(Error::Unsupported("products"))?;
    Ok([a.clone(), b.clone(), prod])
}

/// The object `A + B + (A * B)`.
pub fn amp_object<M: Model>(m: &M, a: &M::Obj, b: &M::Obj) -> Result<M::Obj, Error> {
    let parts = amp_parts(m, a, b)?;
    m.coproduct(&parts).ok_or(Error::Unsupported("coproducts"))
}

/// The projection `A + B + (A * B) -> A` (for `i = 0`) or `-> B` (for
/// `i = 1`), defined by copairing an identity, a zero and a product
/// projection.
pub fn classical_projection<M: Model>(
    m: &M,
    a: &M::Obj,
    b: &M::Obj,
    i: usize,
) -> Result<M::Map, Error> {
    if i > 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            what: "classical projection".to_string(),
        });
    }
    let target = if i == 0 { a } else { b };
    let other = if i == 0 { b } else { a };
    let pi = m
        .projection(a, b, i)
        .ok_or(Error::Unsupported("products"))?;
    let legs = if i == 0 {
        [
            m.identity(target),
            m.zero(other, target).ok_or(Error::NoZeroes)?,
            pi,
        ]
    } else {
        [
            m.zero(other, target).ok_or(Error::NoZeroes)?,
            m.identity(target),
            pi,
        ]
    };
    m.copair(&legs)
}

/// The pairing into `A + B + (A * B)`: the join of the three disjoint
/// pieces "only f", "only g" and "both".
pub fn classical_pair<M: Model>(m: &M, f: &M::Map, g: &M::Map) -> Result<M::Map, Error> {
    if m.dom(f) != m.dom(g) {
        return Err(Error::mismatch(
            "classical pairing",
            m.dom(f).to_string(),
            m.dom(g).to_string(),
        ));
    }
    let (a, b) = (m.cod(f), m.cod(g));
    let c = m.dom(f);
    let parts = amp_parts(m, &a, &b)?;
    let amp = m.coproduct(&parts).ok_or(Error::Unsupported("coproducts"))?;
    let i0 = m.injection(&parts, 0).ok_or(Error::Unsupported("coproducts"))?;
    let i1 = m.injection(&parts, 1).ok_or(Error::Unsupported("coproducts"))?;
    let i2 = m.injection(&parts, 2).ok_or(Error::Unsupported("coproducts"))?;
    let gbar_c = complement(m, &m.restriction(g))?;
    let fbar_c = complement(m, &m.restriction(f))?;
    let only_f = m.compose(&m.compose(&gbar_c, f)?, &i0)?;
    let only_g = m.compose(&m.compose(&fbar_c, g)?, &i1)?;
    let both = m.compose(&m.pair(f, g)?, &i2)?;
    m.join(&[only_f, only_g, both], &c, &amp)
}

/// The join of two compatible maps computed through the product: pair into
/// `B + B + (B * B)` and collapse with `[1, 1, proj]`.
pub fn join_via_amp<M: Model>(m: &M, f: &M::Map, g: &M::Map) -> Result<M::Map, Error> {
    if !compatible(m, f, g)? {
        return Err(Error::Incompatible(0, 1));
    }
    let b = m.cod(f);
    let pi0 = m.projection(&b, &b, 0).ok_or(Error::Unsupported("products"))?;
    let collapse = m.copair(&[m.identity(&b), m.identity(&b), pi0])?;
    m.compose(&classical_pair(m, f, g)?, &collapse)
}

/// The same join computed through the decision of the pairing.
pub fn join_via_amp_decision<M: Model>(m: &M, f: &M::Map, g: &M::Map) -> Result<M::Map, Error> {
    if !compatible(m, f, g)? {
        return Err(Error::Incompatible(0, 1));
    }
    let d = m.decision(&classical_pair(m, f, g)?)?;
    let gf = m.compose(&m.restriction(g), f)?;
    let collapse = m.copair(&[f.clone(), g.clone(), gf])?;
    m.compose(&d, &collapse)
}

/// The relative complement `g \ f` computed through the product: pair and
/// take the middle quasi-projection.
pub fn relcomp_via_amp<M: Model>(m: &M, g: &M::Map, f: &M::Map) -> Result<M::Map, Error> {
    if !leq(m, f, g)? {
        return Err(Error::NotBelow);
    }
    let b = m.cod(f);
    let parts = amp_parts(m, &b, &b)?;
    let q1 = quasi_projection(m, &parts, 1)?;
    m.compose(&classical_pair(m, f, g)?, &q1)
}

/// The object `A + 1`.
pub fn maybe_object<M: Model>(m: &M, a: &M::Obj) -> Result<M::Obj, Error> {
    let one = m.terminal().ok_or(Error::Unsupported("terminal object"))?;
    m.coproduct(&[a.clone(), one]).ok_or(Error::Unsupported("coproducts"))
}

/// The total classifying factorization of a map: sends a point through `f`
/// when `f` is defined there and raises into the added point otherwise.
pub fn classify<M: Model>(m: &M, f: &M::Map) -> Result<M::Map, Error> {
    let (a, b) = (m.dom(f), m.cod(f));
    let one = m.terminal().ok_or(Error::Unsupported("terminal object"))?;
    let parts = [b.clone(), one];
    let target = m.coproduct(&parts).ok_or(Error::Unsupported("coproducts"))?;
    let i0 = m.injection(&parts, 0).ok_or(Error::Unsupported("coproducts"))?;
    let i1 = m.injection(&parts, 1).ok_or(Error::Unsupported("coproducts"))?;
    let ta = m.bang(&a).ok_or(Error::Unsupported("terminal object"))?;
    let fbar_c = complement(m, &m.restriction(f))?;
    let lift = m.compose(f, &i0)?;
    let raise = m.compose(&m.compose(&fbar_c, &ta)?, &i1)?;
    m.join(&[lift, raise], &a, &target)
}

/// The copairing out of `A + B + (A * B)` built from the classical
/// projections: `[f, g, h]` as a join of three disjoint pieces.
pub fn amp_copair3<M: Model>(
    m: &M,
    a: &M::Obj,
    b: &M::Obj,
    f: &M::Map,
    g: &M::Map,
    h: &M::Map,
) -> Result<M::Map, Error> {
    let amp = amp_object(m, a, b)?;
    let c = m.cod(f);
    let p0 = classical_projection(m, a, b, 0)?;
    let p1 = classical_projection(m, a, b, 1)?;
    let p0c = complement(m, &m.restriction(&p0))?;
    let p1c = complement(m, &m.restriction(&p1))?;
    let piece_a = m.compose(&m.compose(&p1c, &p0)?, f)?;
    let piece_b = m.compose(&m.compose(&p0c, &p1)?, g)?;
    let piece_ab = m.compose(&m.pair(&p0, &p1)?, h)?;
    m.join(&[piece_a, piece_b, piece_ab], &amp, &c)
}

// ---------------------------------------------------------------------
// Law suites.
// ---------------------------------------------------------------------

/// Join laws: the two defining properties, preservation on both sides, and
/// the identities a join restriction category satisfies.
pub fn joins_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "joins";
    if !m.has_joins() {
        return vec![q.skip(s, "J1", "model has no joins")];
    }
    let join2 = |f: &M::Map, g: &M::Map| {
        m.join(&[f.clone(), g.clone()], &m.dom(f), &m.cod(f))
            .expect("compatible pair")
    };
    vec![
        q.parallel2(s, "J1", |f, g| {
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let j = join2(f, g);
            if leq(m, f, &j).expect("parallel") && leq(m, g, &j).expect("parallel") {
                LawResult::Holds
            } else {
                violation("J1", vec![w(m, "f", f), w(m, "g", g)], &j, "an upper bound of f and g")
            }
        }),
        q.parallel3(s, "J2", |f, g, h| {
            if !compatible(m, f, g).expect("parallel")
                || !leq(m, f, h).expect("parallel")
                || !leq(m, g, h).expect("parallel")
            {
                return LawResult::Vacuous;
            }
            let j = join2(f, g);
            if leq(m, &j, h).expect("parallel") {
                LawResult::Holds
            } else {
                violation(
                    "J2",
                    vec![w(m, "f", f), w(m, "g", g), w(m, "h", h)],
                    &j,
                    "below every upper bound",
                )
            }
        }),
        q.pre_parallel2(s, "J3", |h, f, g| {
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let lhs = comp!(m, h, &join2(f, g));
            let rhs = join2(&comp!(m, h, f), &comp!(m, h, g));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("J3", vec![w(m, "h", h), w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.maps1(s, "join-zero", |f| {
            let z = m.zero(&m.dom(f), &m.cod(f)).expect("zero witness");
            let j = join2(f, &z);
            if j == *f {
                LawResult::Holds
            } else {
                violation("join-zero", vec![w(m, "f", f)], &j, f)
            }
        }),
        q.maps1(s, "join-idempotent", |f| {
            let j = join2(f, f);
            if j == *f {
                LawResult::Holds
            } else {
                violation("join-idempotent", vec![w(m, "f", f)], &j, f)
            }
        }),
        q.parallel2_post(s, "join-post", |f, g, k| {
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let lhs = comp!(m, &join2(f, g), k);
            let rhs = join2(&comp!(m, f, k), &comp!(m, g, k));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("join-post", vec![w(m, "f", f), w(m, "g", g), w(m, "k", k)], &lhs, &rhs)
            }
        }),
        q.parallel2(s, "join-rest", |f, g| {
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let lhs = m.restriction(&join2(f, g));
            let rhs = m
                .join(
                    &[m.restriction(f), m.restriction(g)],
                    &m.dom(f),
                    &m.dom(f),
                )
                .expect("restrictions of compatible maps are compatible");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("join-rest", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.parallel2(s, "join-restrict-piece", |f, g| {
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let j = join2(f, g);
            let lhs = comp!(m, &m.restriction(f), &j);
            if lhs == *f {
                LawResult::Holds
            } else {
                violation("join-restrict-piece", vec![w(m, "f", f), w(m, "g", g)], &lhs, f)
            }
        }),
        q.endo2(s, "join-idem-closed", |e1, e2| {
            if !is_restriction_idempotent(m, e1) || !is_restriction_idempotent(m, e2) {
                return LawResult::Vacuous;
            }
            if !compatible(m, e1, e2).expect("parallel") {
                return violation(
                    "join-idem-closed",
                    vec![w(m, "e1", e1), w(m, "e2", e2)],
                    "restriction idempotents are always compatible",
                    "incompatible",
                );
            }
            let j = join2(e1, e2);
            if is_restriction_idempotent(m, &j) {
                LawResult::Holds
            } else {
                violation(
                    "join-idem-closed",
                    vec![w(m, "e1", e1), w(m, "e2", e2)],
                    &j,
                    "a restriction idempotent",
                )
            }
        }),
        q.objects2(s, "join-empty", |a, bb| {
            let j = m.join(&[], a, bb).expect("empty family");
            let z = m.zero(a, bb).expect("zero witness");
            if j == z {
                LawResult::Holds
            } else {
                violation("join-empty", vec![format!("objects {a}, {bb}")], &j, &z)
            }
        }),
        q.parallel2(s, "join-commutative", |f, g| {
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let lhs = join2(f, g);
            let rhs = join2(g, f);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("join-commutative", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.parallel3(s, "join-associative", |f, g, h| {
            let ok = compatible(m, f, g).expect("parallel")
                && compatible(m, g, h).expect("parallel")
                && compatible(m, f, h).expect("parallel");
            if !ok {
                return LawResult::Vacuous;
            }
            let lhs = join2(&join2(f, g), h);
            let rhs = join2(f, &join2(g, h));
            let flat = m
                .join(&[f.clone(), g.clone(), h.clone()], &m.dom(f), &m.cod(f))
                .expect("pairwise compatible");
            if lhs == rhs && rhs == flat {
                LawResult::Holds
            } else {
                violation(
                    "join-associative",
                    vec![w(m, "f", f), w(m, "g", g), w(m, "h", h)],
                    &lhs,
                    &rhs,
                )
            }
        }),
    ]
}

/// Relative-complement laws.
pub fn relative_complement_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "relative-complements";
    if !m.has_relative_complements() {
        return vec![q.skip(s, "RC1", "model has no relative complements")];
    }
    let rc = |g: &M::Map, f: &M::Map| m.relative_complement(g, f).expect("f <= g");
    vec![
        q.parallel2(s, "RC1", |g, f| {
            if !leq(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let d = rc(g, f);
            if disjoint(m, &d, f).expect("zeroes present") {
                LawResult::Holds
            } else {
                violation("RC1", vec![w(m, "g", g), w(m, "f", f)], &d, "disjoint from f")
            }
        }),
        q.parallel2(s, "RC2", |g, f| {
            if !leq(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let d = rc(g, f);
            let j = m
                .join(&[d, f.clone()], &m.dom(f), &m.cod(f))
                .expect("disjoint pieces");
            if j == *g {
                LawResult::Holds
            } else {
                violation("RC2", vec![w(m, "g", g), w(m, "f", f)], &j, g)
            }
        }),
        q.parallel2_unique(s, "relcomp-unique", |g, f| {
            if !leq(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let (a, bb) = (m.dom(f), m.cod(f));
            if m.hom_size(&a, &bb) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let d = rc(g, f);
            for h in m.hom(&a, &bb) {
                if disjoint(m, &h, f).expect("zeroes present") {
                    if let Ok(j) = m.join(&[h.clone(), f.clone()], &a, &bb) {
                        if j == *g && h != d {
                            return violation(
                                "relcomp-unique",
                                vec![w(m, "g", g), w(m, "f", f), w(m, "h", &h)],
                                &h,
                                &d,
                            );
                        }
                    }
                }
            }
            LawResult::Holds
        }),
        q.maps1(s, "relcomp-self", |f| {
            let d = rc(f, f);
            let z = m.zero(&m.dom(f), &m.cod(f)).expect("zero witness");
            if d == z {
                LawResult::Holds
            } else {
                violation("relcomp-self", vec![w(m, "f", f)], &d, &z)
            }
        }),
        q.maps1(s, "relcomp-zero", |f| {
            let z = m.zero(&m.dom(f), &m.cod(f)).expect("zero witness");
            let d = rc(f, &z);
            if d == *f {
                LawResult::Holds
            } else {
                violation("relcomp-zero", vec![w(m, "f", f)], &d, f)
            }
        }),
        q.parallel2(s, "relcomp-rest", |g, f| {
            if !leq(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let lhs = m.restriction(&rc(g, f));
            let rhs = rc(&m.restriction(g), &m.restriction(f));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("relcomp-rest", vec![w(m, "g", g), w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.parallel2(s, "relcomp-involution", |g, f| {
            if !leq(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let back = rc(g, &rc(g, f));
            if back == *f {
                LawResult::Holds
            } else {
                violation("relcomp-involution", vec![w(m, "g", g), w(m, "f", f)], &back, f)
            }
        }),
    ]
}

/// Laws for complements of restriction idempotents, including the
/// complemented forms of the four restriction axioms.
pub fn complements_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "complements";
    if !m.has_relative_complements() || !m.has_joins() {
        return vec![q.skip(s, "comp-idem", "model lacks joins or relative complements")];
    }
    let cpl = |e: &M::Map| complement(m, e).expect("restriction idempotent");
    let join2 = |f: &M::Map, g: &M::Map| {
        m.join(&[f.clone(), g.clone()], &m.dom(f), &m.cod(f))
            .expect("compatible pair")
    };
    vec![
        q.endo1(s, "comp-idem", |e| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let ec = cpl(e);
            if is_restriction_idempotent(m, &ec) {
                LawResult::Holds
            } else {
                violation("comp-idem", vec![w(m, "e", e)], &ec, "a restriction idempotent")
            }
        }),
        q.endo1(s, "comp-involution", |e| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let back = cpl(&cpl(e));
            if back == *e {
                LawResult::Holds
            } else {
                violation("comp-involution", vec![w(m, "e", e)], &back, e)
            }
        }),
        q.endo1(s, "comp-excluded", |e| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let ec = cpl(e);
            let lhs = comp!(m, e, &ec);
            let z = m.zero(&m.dom(e), &m.dom(e)).expect("zero witness");
            if lhs == z {
                LawResult::Holds
            } else {
                violation("comp-excluded", vec![w(m, "e", e)], &lhs, &z)
            }
        }),
        q.endo1(s, "comp-total", |e| {
            if !is_restriction_idempotent(m, e) {
                return LawResult::Vacuous;
            }
            let j = join2(e, &cpl(e));
            let id = m.identity(&m.dom(e));
            if j == id {
                LawResult::Holds
            } else {
                violation("comp-total", vec![w(m, "e", e)], &j, &id)
            }
        }),
        q.endo2(s, "comp-unique", |e, e2| {
            if !is_restriction_idempotent(m, e) || !is_restriction_idempotent(m, e2) {
                return LawResult::Vacuous;
            }
            let z = m.zero(&m.dom(e), &m.dom(e)).expect("zero witness");
            let id = m.identity(&m.dom(e));
            if comp!(m, e, e2) != z || join2(e, e2) != id {
                return LawResult::Vacuous;
            }
            let ec = cpl(e);
            if *e2 == ec {
                LawResult::Holds
            } else {
                violation("comp-unique", vec![w(m, "e", e), w(m, "e2", e2)], e2, &ec)
            }
        }),
        q.endo2(s, "comp-demorgan", |e1, e2| {
            if !is_restriction_idempotent(m, e1) || !is_restriction_idempotent(m, e2) {
                return LawResult::Vacuous;
            }
            let lhs1 = join2(&cpl(e1), &cpl(e2));
            let rhs1 = cpl(&comp!(m, e1, e2));
            if lhs1 != rhs1 {
                return violation("comp-demorgan", vec![w(m, "e1", e1), w(m, "e2", e2)], &lhs1, &rhs1);
            }
            let lhs2 = comp!(m, &cpl(e1), &cpl(e2));
            let rhs2 = cpl(&join2(e1, e2));
            if lhs2 != rhs2 {
                return violation("comp-demorgan", vec![w(m, "e1", e1), w(m, "e2", e2)], &lhs2, &rhs2);
            }
            LawResult::Holds
        }),
        q.objects1(s, "comp-one-zero", |a| {
            let id = m.identity(a);
            let z = m.zero(a, a).expect("zero witness");
            if cpl(&id) == z && cpl(&z) == id {
                LawResult::Holds
            } else {
                violation("comp-one-zero", vec![format!("object {a}")], cpl(&id), &z)
            }
        }),
        q.maps1(s, "comp-rest-r1", |f| {
            let fc = cpl(&m.restriction(f));
            let lhs = comp!(m, &fc, f);
            let z = m.zero(&m.dom(f), &m.cod(f)).expect("zero witness");
            if lhs == z {
                LawResult::Holds
            } else {
                violation("comp-rest-r1", vec![w(m, "f", f)], &lhs, &z)
            }
        }),
        q.shared_dom2(s, "comp-rest-r2", |f, g| {
            let fc = cpl(&m.restriction(f));
            let gc = cpl(&m.restriction(g));
            let lhs = comp!(m, &fc, &gc);
            let rhs = comp!(m, &gc, &fc);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("comp-rest-r2", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.shared_dom2(s, "comp-rest-r3", |f, g| {
            let gc = cpl(&m.restriction(g));
            let inner = m.restriction(&comp!(m, &gc, f));
            let lhs = cpl(&inner);
            let rhs = join2(&m.restriction(g), &cpl(&m.restriction(f)));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("comp-rest-r3", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.chain2(s, "comp-rest-r4", |f, g| {
            let gc = cpl(&m.restriction(g));
            let lhs = comp!(m, f, &gc);
            let fg_c = cpl(&m.restriction(&comp!(m, f, g)));
            let rhs = comp!(m, &fg_c, f);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("comp-rest-r4", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
    ]
}

/// Compatibility of joins with coproducts: summand pieces are disjoint and
/// rebuild the coproduct of maps.
pub fn coproduct_joins_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "coproduct-joins";
    if !m.has_joins() {
        return vec![q.skip(s, "oplus-as-join", "model has no joins")];
    }
    vec![q.two_maps(s, "oplus-as-join", |f0, f1| {
        let doms = [m.dom(f0), m.dom(f1)];
        let cods = [m.cod(f0), m.cod(f1)];
        let sum_dom = match m.coproduct(&doms) {
            Some(o) => o,
            None => return LawResult::SkippedSite,
        };
        let sum_cod = m.coproduct(&cods).expect("coproduct witness");
        let mut pieces = Vec::with_capacity(2);
        for (j, fj) in [f0, f1].into_iter().enumerate() {
            let qj = quasi_projection(m, &doms, j).expect("zeroes present");
            let ij = m.injection(&cods, j).expect("coproduct witness");
            pieces.push(comp!(m, &comp!(m, &qj, fj), &ij));
        }
        if !disjoint(m, &pieces[0], &pieces[1]).expect("zeroes present") {
            return violation(
                "oplus-as-join",
                vec![w(m, "f0", f0), w(m, "f1", f1)],
                "summand pieces disjoint",
                "overlapping",
            );
        }
        let lhs = m
            .join(&pieces, &sum_dom, &sum_cod)
            .expect("disjoint pieces");
        let legs: Vec<M::Map> = [f0, f1]
            .into_iter()
            .enumerate()
            .map(|(j, fj)| comp!(m, fj, &m.injection(&cods, j).expect("coproduct witness")))
            .collect();
        let rhs = m.copair(&legs).expect("copairing");
        if lhs == rhs {
            LawResult::Holds
        } else {
            violation("oplus-as-join", vec![w(m, "f0", f0), w(m, "f1", f1)], &lhs, &rhs)
        }
    })]
}

/// The laws of the classical projections and pairing on `A + B + (A * B)`,
/// including the universal property and the derived join and relative
/// complement.
pub fn classical_products_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "classical-products";
    if !m.has_joins() || !m.has_relative_complements() {
        return vec![q.skip(s, "cpair-beta", "model lacks joins or relative complements")];
    }
    let memo = AmpMemo::new();
    let objs = q.objs.clone();
    vec![
        q.objects2(s, "cproj-rest", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            for i in 0..2 {
                let p = if i == 0 { &ctx.p0 } else { &ctx.p1 };
                let lhs = m.restriction(p);
                let legs: Vec<M::Map> = (0..3)
                    .map(|j| {
                        if j == i || j == 2 {
                            [&ctx.i0, &ctx.i1, &ctx.i2][j].clone()
                        } else {
                            m.zero(&ctx.parts[j], &ctx.amp).expect("zero witness")
                        }
                    })
                    .collect();
                let rhs = m.copair(&legs).expect("copairing");
                if lhs != rhs {
                    return violation("cproj-rest", vec![w(m, "p", p)], &lhs, &rhs);
                }
            }
            LawResult::Holds
        }),
        q.objects2(s, "cproj-mixed", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            for i in 0..2 {
                let (p, other, pi) = if i == 0 {
                    (&ctx.p0, &ctx.p1, &ctx.pi0)
                } else {
                    (&ctx.p1, &ctx.p0, &ctx.pi1)
                };
                let lhs = comp!(m, &m.restriction(other), p);
                let rhs = comp!(m, &ctx.q2, pi);
                if lhs != rhs {
                    return violation("cproj-mixed", vec![w(m, "p", p)], &lhs, &rhs);
                }
            }
            LawResult::Holds
        }),
        q.objects2(s, "cproj-comp-rest", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            for (pc, qj, ij) in [(&ctx.p0c, &ctx.q1, &ctx.i1), (&ctx.p1c, &ctx.q0, &ctx.i0)] {
                let rhs = comp!(m, qj, ij);
                if *pc != rhs {
                    return violation("cproj-comp-rest", vec![w(m, "pc", pc)], pc, &rhs);
                }
            }
            LawResult::Holds
        }),
        q.objects2(s, "cproj-comp-proj", |a, bb| {
            let ctx = memo.ctx(m, a, bb);
            for (oc, p, qi) in [(&ctx.p1c, &ctx.p0, &ctx.q0), (&ctx.p0c, &ctx.p1, &ctx.q1)] {
                let lhs = comp!(m, oc, p);
                if lhs != *qi {
                    return violation("cproj-comp-proj", vec![w(m, "p", p)], &lhs, qi);
                }
            }
            LawResult::Holds
        }),
        q.shared_dom2(s, "cpair-beta", |f, g| {
            let ctx = memo.ctx(m, &m.cod(f), &m.cod(g));
            let pr = classical_pair(m, f, g).expect("classical pairing");
            let lhs0 = comp!(m, &pr, &ctx.p0);
            if lhs0 != *f {
                return violation("cpair-beta", vec![w(m, "f", f), w(m, "g", g)], &lhs0, f);
            }
            let lhs1 = comp!(m, &pr, &ctx.p1);
            if lhs1 != *g {
                return violation("cpair-beta", vec![w(m, "f", f), w(m, "g", g)], &lhs1, g);
            }
            LawResult::Holds
        }),
        q.shared_dom2_unique(s, "cpair-unique", |f, g| {
            let ctx = memo.ctx(m, &m.cod(f), &m.cod(g));
            let c = m.dom(f);
            if m.hom_size(&c, &ctx.amp) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let pr = classical_pair(m, f, g).expect("classical pairing");
            for h in m.hom(&c, &ctx.amp) {
                if comp!(m, &h, &ctx.p0) == *f && comp!(m, &h, &ctx.p1) == *g && h != pr {
                    return violation(
                        "cpair-unique",
                        vec![w(m, "f", f), w(m, "g", g), w(m, "h", &h)],
                        &h,
                        &pr,
                    );
                }
            }
            LawResult::Holds
        }),
        q.shared_dom2(s, "cpair-qproj2", |f, g| {
            let ctx = memo.ctx(m, &m.cod(f), &m.cod(g));
            let pr = classical_pair(m, f, g).expect("classical pairing");
            let lhs = comp!(m, &pr, &ctx.q2);
            let rhs = m.pair(f, g).expect("pairing");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("cpair-qproj2", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        q.maps1(s, "cpair-zero", |f| {
            for bb in &objs {
                let z = m.zero(&m.dom(f), bb).expect("zero witness");
                let ctx_r = memo.ctx(m, &m.cod(f), bb);
                let pr_r = classical_pair(m, f, &z).expect("classical pairing");
                let rhs_r = comp!(m, f, &ctx_r.i0);
                if pr_r != rhs_r {
                    return violation("cpair-zero", vec![w(m, "f", f)], &pr_r, &rhs_r);
                }
                let ctx_l = memo.ctx(m, bb, &m.cod(f));
                let pr_l = classical_pair(m, &z, f).expect("classical pairing");
                let rhs_l = comp!(m, f, &ctx_l.i1);
                if pr_l != rhs_l {
                    return violation("cpair-zero", vec![w(m, "f", f)], &pr_l, &rhs_l);
                }
            }
            LawResult::Holds
        }),
        q.maps1(s, "cpair-diagonal", |f| {
            let bb = m.cod(f);
            let ctx = memo.ctx(m, &bb, &bb);
            let pr = classical_pair(m, f, f).expect("classical pairing");
            let diag = m.pair(f, f).expect("pairing");
            let rhs = comp!(m, &diag, &ctx.i2);
            if pr == rhs {
                LawResult::Holds
            } else {
                violation("cpair-diagonal", vec![w(m, "f", f)], &pr, &rhs)
            }
        }),
        q.objects3(s, "cpair-zero-zero", |c, a, bb| {
            let ctx = memo.ctx(m, a, bb);
            let za = m.zero(c, a).expect("zero witness");
            let zb = m.zero(c, bb).expect("zero witness");
            let pr = classical_pair(m, &za, &zb).expect("classical pairing");
            let z = m.zero(c, &ctx.amp).expect("zero witness");
            if pr == z {
                LawResult::Holds
            } else {
                violation("cpair-zero-zero", vec![format!("objects {c}, {a}, {bb}")], &pr, &z)
            }
        }),
        q.shared_dom2(s, "pairing-rest", |f, g| {
            let ctx = memo.ctx(m, &m.cod(f), &m.cod(g));
            let pr = classical_pair(m, f, g).expect("classical pairing");
            let fg = comp!(m, &m.restriction(f), g);
            let gf = comp!(m, &m.restriction(g), f);
            let lhs0 = comp!(m, &pr, &m.restriction(&ctx.p0));
            let rhs0 = classical_pair(m, f, &fg).expect("classical pairing");
            if lhs0 != rhs0 {
                return violation("pairing-rest", vec![w(m, "f", f), w(m, "g", g)], &lhs0, &rhs0);
            }
            let lhs1 = comp!(m, &pr, &m.restriction(&ctx.p1));
            let rhs1 = classical_pair(m, &gf, g).expect("classical pairing");
            if lhs1 != rhs1 {
                return violation("pairing-rest", vec![w(m, "f", f), w(m, "g", g)], &lhs1, &rhs1);
            }
            let lhs2 = comp!(m, &comp!(m, &pr, &m.restriction(&ctx.p0)), &m.restriction(&ctx.p1));
            let rhs2 = classical_pair(m, &gf, &fg).expect("classical pairing");
            if lhs2 != rhs2 {
                return violation("pairing-rest", vec![w(m, "f", f), w(m, "g", g)], &lhs2, &rhs2);
            }
            LawResult::Holds
        }),
        q.parallel2(s, "join-via-amp", |f, g| {
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let derived = join_via_amp(m, f, g).expect("compatible");
            let primitive = m
                .join(&[f.clone(), g.clone()], &m.dom(f), &m.cod(f))
                .expect("compatible");
            if derived == primitive {
                LawResult::Holds
            } else {
                violation("join-via-amp", vec![w(m, "f", f), w(m, "g", g)], &derived, &primitive)
            }
        }),
        q.parallel2(s, "join-via-amp-decision", |f, g| {
            if !m.has_decisions() {
                return LawResult::SkippedSite;
            }
            if !compatible(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let derived = join_via_amp_decision(m, f, g).expect("compatible");
            let primitive = m
                .join(&[f.clone(), g.clone()], &m.dom(f), &m.cod(f))
                .expect("compatible");
            if derived == primitive {
                LawResult::Holds
            } else {
                violation(
                    "join-via-amp-decision",
                    vec![w(m, "f", f), w(m, "g", g)],
                    &derived,
                    &primitive,
                )
            }
        }),
        q.parallel2(s, "relcomp-via-amp", |g, f| {
            if !leq(m, f, g).expect("parallel") {
                return LawResult::Vacuous;
            }
            let derived = relcomp_via_amp(m, g, f).expect("f <= g");
            let primitive = m.relative_complement(g, f).expect("f <= g");
            if derived == primitive {
                LawResult::Holds
            } else {
                violation("relcomp-via-amp", vec![w(m, "g", g), w(m, "f", f)], &derived, &primitive)
            }
        }),
    ]
}

/// Decision laws: the two axioms and uniqueness.
pub fn decisions_suite<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "decisions";
    if !m.has_decisions() {
        return vec![q.skip(s, "dec-d1", "model has no decisions")];
    }
    let folded = |f: &M::Map, parts: &[M::Obj]| -> (M::Map, M::Map) {
        // f + ... + f : A+...+A -> (Sum B)+...+(Sum B), and iota_0 + ... + iota_n
        let sum_b = m.cod(f);
        let a = m.dom(f);
        let n = parts.len();
        let copies_b: Vec<M::Obj> = (0..n).map(|_| sum_b.clone()).collect();
        let f_legs: Vec<M::Map> = (0..n)
            .map(|j| comp!(m, f, &m.injection(&copies_b, j).expect("coproduct witness")))
            .collect();
        let f_oplus = m.copair(&f_legs).expect("copairing");
        let inj_legs: Vec<M::Map> = (0..n)
            .map(|j| {
                let ij = m.injection(parts, j).expect("coproduct witness");
                comp!(m, &ij, &m.injection(&copies_b, j).expect("coproduct witness"))
            })
            .collect();
        let inj_oplus = m.copair(&inj_legs).expect("copairing");
        let _ = a;
        (f_oplus, inj_oplus)
    };
    vec![
        q.maps1(s, "dec-d1", |f| {
            let parts = match m.coproduct_parts(&m.cod(f)) {
                Some(p) if !p.is_empty() => p,
                _ => return LawResult::Vacuous,
            };
            let d = m.decision(f).expect("coproduct codomain");
            let a = m.dom(f);
            let ones: Vec<M::Map> = (0..parts.len()).map(|_| m.identity(&a)).collect();
            let fold = m.copair(&ones).expect("copairing");
            let lhs = comp!(m, &d, &fold);
            let rhs = m.restriction(f);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("dec-d1", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.maps1(s, "dec-d2", |f| {
            let parts = match m.coproduct_parts(&m.cod(f)) {
                Some(p) if !p.is_empty() => p,
                _ => return LawResult::Vacuous,
            };
            let d = m.decision(f).expect("coproduct codomain");
            let (f_oplus, inj_oplus) = folded(f, &parts);
            let lhs = comp!(m, &d, &f_oplus);
            let rhs = comp!(m, f, &inj_oplus);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("dec-d2", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.maps1_unique(s, "dec-unique", |f| {
            let parts = match m.coproduct_parts(&m.cod(f)) {
                Some(p) if !p.is_empty() => p,
                _ => return LawResult::Vacuous,
            };
            let a = m.dom(f);
            let copies_a: Vec<M::Obj> = (0..parts.len()).map(|_| a.clone()).collect();
            let sum_a = m.coproduct(&copies_a).expect("coproduct witness");
            if m.hom_size(&a, &sum_a) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let ones: Vec<M::Map> = (0..parts.len()).map(|_| m.identity(&a)).collect();
            let fold = m.copair(&ones).expect("copairing");
            let (f_oplus, inj_oplus) = folded(f, &parts);
            let rhs_d2 = comp!(m, f, &inj_oplus);
            let fbar = m.restriction(f);
            let mut satisfying: Vec<M::Map> = Vec::new();
            for cand in m.hom(&a, &sum_a) {
                if comp!(m, &cand, &fold) == fbar && comp!(m, &cand, &f_oplus) == rhs_d2 {
                    satisfying.push(cand);
                }
            }
            if satisfying.len() <= 1 {
                LawResult::Holds
            } else {
                violation(
                    "dec-unique",
                    vec![w(m, "f", f), w(m, "d1", &satisfying[0]), w(m, "d2", &satisfying[1])],
                    satisfying.len(),
                    "at most one map satisfying both decision axioms",
                )
            }
        }),
    ]
}

/// Everything classical, in order.
pub fn classical_suites<M: Model>(m: &M, b: &Budget) -> Vec<LawReport> {
    let mut out = Vec::new();
    out.extend(joins_suite(m, b));
    out.extend(relative_complement_suite(m, b));
    out.extend(complements_suite(m, b));
    out.extend(coproduct_joins_suite(m, b));
    out.extend(classical_products_suite(m, b));
    out.extend(decisions_suite(m, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finpar::{Elem, FinParModel, FinSet, PartialMap};

    fn demo() -> FinParModel {
        FinParModel::demo()
    }

    fn lm(m: &FinParModel, n: &str) -> PartialMap {
        m.lookup_map(n).unwrap().clone()
    }

    #[test]
    fn classical_projection_cases() {
        let m = demo();
        let x = m.lookup_object("X").unwrap().clone();
        let y = m.lookup_object("Y").unwrap().clone();
        let p0 = classical_projection(&m, &x, &y, 0).unwrap();
        // on the product part it is the first projection
        assert_eq!(
            p0.apply(&Elem::tagged(2, Elem::pair(Elem::label("x0"), Elem::label("y0")))),
            Some(&Elem::label("x0"))
        );
        // on the second summand it is undefined
        assert_eq!(p0.apply(&Elem::tagged(1, Elem::label("y0"))), None);
        // restriction is the partial identity away from the second summand
        let amp = x.amp(&y);
        let expected: Vec<Option<u32>> = amp
            .elements()
            .iter()
            .enumerate()
            .map(|(i, e)| match e {
                Elem::In(1, _) => None,
                _ => Some(i as u32),
            })
            .collect();
        assert_eq!(
            p0.restriction(),
            PartialMap::new(amp.clone(), amp, expected).unwrap()
        );
    }

    #[test]
    fn classical_pair_case_table() {
        let m = demo();
        let x = m.lookup_object("X").unwrap().clone();
        let f = lm(&m, "f"); // defined at x0 only
        let k = lm(&m, "k"); // defined at x1 only
        let pr = classical_pair(&m, &f, &k).unwrap();
        // f defined, k undefined at x0: lands in the first summand
        assert_eq!(
            pr.apply(&Elem::label("x0")),
            Some(&Elem::tagged(0, Elem::label("y0")))
        );
        // f undefined, k defined at x1: lands in the second summand
        assert_eq!(
            pr.apply(&Elem::label("x1")),
            Some(&Elem::tagged(1, Elem::label("y0")))
        );
        // both defined: lands in the product summand
        let idx = PartialMap::identity(&x);
        let both = classical_pair(&m, &idx, &idx).unwrap();
        assert_eq!(
            both.apply(&Elem::label("x0")),
            Some(&Elem::tagged(2, Elem::pair(Elem::label("x0"), Elem::label("x0"))))
        );
    }

    #[test]
    fn derived_join_and_relcomp_match_primitives() {
        let m = demo();
        let f = lm(&m, "f");
        let k = lm(&m, "k");
        let join_p = f.join(&k).unwrap();
        assert_eq!(join_via_amp(&m, &f, &k).unwrap(), join_p);
        assert_eq!(join_via_amp_decision(&m, &f, &k).unwrap(), join_p);
        assert_eq!(relcomp_via_amp(&m, &join_p, &f).unwrap(), k);
        // incompatible pair is rejected with the offending indices
        let x = m.lookup_object("X").unwrap().clone();
        let a = PartialMap::new(x.clone(), x.clone(), vec![Some(0), None]).unwrap();
        let b = PartialMap::new(x.clone(), x.clone(), vec![Some(1), None]).unwrap();
        assert_eq!(join_via_amp(&m, &a, &b), Err(Error::Incompatible(0, 1)));
        assert_eq!(relcomp_via_amp(&m, &a, &b), Err(Error::NotBelow));
    }

    #[test]
    fn classify_is_total_and_factors() {
        let m = demo();
        let f = lm(&m, "f");
        let t = classify(&m, &f).unwrap();
        assert!(t.is_total());
        // T(f)(x0) = 0:y0 (the value), T(f)(x1) = 1:* (the added point)
        assert_eq!(t.apply(&Elem::label("x0")), Some(&Elem::tagged(0, Elem::label("y0"))));
        assert_eq!(t.apply(&Elem::label("x1")), Some(&Elem::tagged(1, Elem::Unit)));
        // factorization through the zeroth quasi-projection recovers f
        let parts = [f.cod().clone(), FinSet::one()];
        let q0 = PartialMap::qproj(&parts, 0).unwrap();
        assert_eq!(t.compose(&q0).unwrap(), f);
        // total maps classify as themselves followed by the injection
        let g = lm(&m, "g");
        let tg = classify(&m, &g).unwrap();
        let inj0 = PartialMap::inj(&[g.cod().clone(), FinSet::one()], 0).unwrap();
        assert_eq!(tg, g.compose(&inj0).unwrap());
        // the zero map classifies as the constant raise
        let z = PartialMap::zero(f.dom(), f.cod());
        let tz = classify(&m, &z).unwrap();
        let inj1 = PartialMap::inj(&parts, 1).unwrap();
        assert_eq!(tz, PartialMap::terminal(f.dom()).compose(&inj1).unwrap());
    }

    #[test]
    fn decision_examples() {
        let m = demo();
        let x = m.lookup_object("X").unwrap().clone();
        let y = m.lookup_object("Y").unwrap().clone();
        let sum = FinSet::coprod(&[y.clone(), y.clone()]);
        // f = 0 has decision 0
        let z = PartialMap::zero(&x, &sum);
        assert_eq!(
            z.decision().unwrap(),
            PartialMap::zero(&x, &FinSet::coprod(&[x.clone(), x.clone()]))
        );
        // a total injection decides to the matching tag
        let i0 = PartialMap::inj(&[x.clone(), x.clone()], 0).unwrap();
        assert_eq!(i0.decision().unwrap(), i0);
    }
}
