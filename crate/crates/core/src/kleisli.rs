//! The exception monad `_ + 1` on total maps and its Kleisli category.
//!
//! A Kleisli map from `A` to `B` is a total map `A -> B + 1` of the base
//! category; composition feeds values through and propagates the added
//! point. The module carries the monad data (unit, multiplication, functor
//! action), the Kleisli restriction structure built from the distributivity
//! isomorphism, and the mutually inverse translations between partial maps
//! and Kleisli maps.

use std::fmt;

use crate::classical;
use crate::error::Error;
use crate::finpar::{FinParModel, FinSet, PartialMap};
use crate::rescat::comp;
use crate::rescat::laws::w;
use crate::rescat::quantify::{violation, LawResult, Quant};
use crate::rescat::{is_total, Budget, LawReport, Model};

/// The object `A + 1`.
pub fn maybe(a: &FinSet) -> FinSet {
    FinSet::coprod(&[a.clone(), FinSet::one()])
}

fn maybe_parts(a: &FinSet) -> [FinSet; 2] {
    [a.clone(), FinSet::one()]
}

/// A map of the Kleisli category: a total base map `dom -> cod + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KleisliMap {
    dom: FinSet,
    cod: FinSet,
    base: PartialMap,
}

impl fmt::Display for KleisliMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kleisli {}", self.base)
    }
}

impl KleisliMap {
    pub fn new(dom: FinSet, cod: FinSet, base: PartialMap) -> Result<KleisliMap, Error> {
        if *base.dom() != dom || *base.cod() != maybe(&cod) {
            return Err(Error::mismatch(
                "kleisli map",
                format!("{} -> {}", dom, maybe(&cod)),
                format!("{} -> {}", base.dom(), base.cod()),
            ));
        }
        if !base.is_total() {
            return Err(Error::Invalid(
                "the base of a kleisli map must be total".to_string(),
            ));
        }
        Ok(KleisliMap { dom, cod, base })
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn base(&self) -> &PartialMap {
        &self.base
    }

    /// The unit: the first injection, an embedded identity.
    pub fn eta(a: &FinSet) -> KleisliMap {
        let base = PartialMap::inj(&maybe_parts(a), 0).expect("injection");
        KleisliMap {
            dom: a.clone(),
            cod: a.clone(),
            base,
        }
    }

    /// Whether the base never reaches the added point.
    pub fn never_raises(&self) -> bool {
        let cut = self.cod.size() as u32;
        self.base.graph().iter().all(|v| v.unwrap_or(cut) < cut)
    }
}

/// Translate a partial map into its Kleisli form pointwise: send defined
/// points through the first injection and undefined points to the added
/// point. This is the direct route that the classifier formula is checked
/// against.
pub fn to_kleisli(f: &PartialMap) -> KleisliMap {
    let raise = f.cod().size() as u32;
    let graph = f
        .graph()
        .iter()
        .map(|v| Some(v.unwrap_or(raise)))
        .collect();
    let base = PartialMap::new(f.dom().clone(), maybe(f.cod()), graph).expect("total graph");
    KleisliMap {
        dom: f.dom().clone(),
        cod: f.cod().clone(),
        base,
    }
}

/// Translate back: compose the base with the zeroth quasi-projection.
pub fn from_kleisli(k: &KleisliMap) -> PartialMap {
    let cut = k.cod.size() as u32;
    let graph = k
        .base
        .graph()
        .iter()
        .map(|v| v.filter(|&j| j < cut))
        .collect();
    PartialMap::new(k.dom.clone(), k.cod.clone(), graph).expect("graph")
}

/// The functor action of `_ + 1` on a total base map.
pub fn maybe_map(f: &PartialMap) -> Result<PartialMap, Error> {
    if !f.is_total() {
        return Err(Error::Invalid("the exception functor acts on total maps".into()));
    }
    let parts = maybe_parts(f.cod());
    let lift = f.compose(&PartialMap::inj(&parts, 0)?)?;
    let raise = PartialMap::inj(&parts, 1)?;
    PartialMap::copair(&[lift, raise])
}

/// The unit of the monad as a base map.
pub fn eta_map(a: &FinSet) -> PartialMap {
    PartialMap::inj(&maybe_parts(a), 0).expect("injection")
}

/// The multiplication `(A + 1) + 1 -> A + 1`, flattening the added points.
pub fn mu_map(a: &FinSet) -> PartialMap {
    let ma = maybe(a);
    let raise = PartialMap::inj(&maybe_parts(a), 1).expect("injection");
    PartialMap::copair(&[PartialMap::identity(&ma), raise]).expect("copairing")
}

/// The element bijection `(A + 1) * (B + 1) = A + B + (A * B) + 1` used by
/// the Kleisli pairings, with the product summand in the third slot and both
/// added points collapsed into the last.
pub fn four_way_split(a: &FinSet, b: &FinSet) -> (PartialMap, PartialMap) {
    let dom = maybe(a).prod(&maybe(b));
    let cod = FinSet::coprod(&[a.clone(), b.clone(), a.prod(b), FinSet::one()]);
    let (na, nb) = (a.size(), b.size());
    let width = nb + 1;
    let mut fwd = vec![None; dom.size()];
    for i in 0..=na {
        for j in 0..=nb {
            let src = i * width + j;
            let dst = match (i < na, j < nb) {
                (true, true) => na + nb + i * nb + j,
                (true, false) => i,
                (false, true) => na + j,
                (false, false) => na + nb + na * nb,
            };
            fwd[src] = Some(dst as u32);
        }
    }
    let mut bwd = vec![None; cod.size()];
    for (s, d) in fwd.iter().enumerate() {
        bwd[d.unwrap() as usize] = Some(s as u32);
    }
    (
        PartialMap::new(dom.clone(), cod.clone(), fwd).expect("bijection"),
        PartialMap::new(cod, dom, bwd).expect("bijection"),
    )
}

/// The Kleisli category of the exception monad over the total maps of a
/// partial-function model. Objects are shared with the base model.
#[derive(Clone, Debug)]
pub struct KleisliModel {
    pub base: FinParModel,
}

impl KleisliModel {
    pub fn new(base: FinParModel) -> KleisliModel {
        KleisliModel { base }
    }
}

/// The restriction defined through the distributivity isomorphism: pair
/// with the identity, distribute, and project each summand. The model's own
/// restriction is the pointwise equivalent; the `rest-formula` law equates
/// the two.
pub fn restriction_via_distributivity(f: &KleisliMap) -> KleisliMap {
    let a = &f.dom;
    let b = &f.cod;
    let one = FinSet::one();
    let graph_pair = PartialMap::identity(a).pair(&f.base).expect("total legs");
    let (_, dist_inv) = PartialMap::dist(a, b, &one);
    let mparts = maybe_parts(a);
    let leg0 = PartialMap::proj(a, b, 0)
        .expect("projection")
        .compose(&PartialMap::inj(&mparts, 0).expect("injection"))
        .expect("composable");
    let leg1 = PartialMap::proj(a, &one, 1)
        .expect("projection")
        .compose(&PartialMap::inj(&mparts, 1).expect("injection"))
        .expect("composable");
    let fold = PartialMap::copair(&[leg0, leg1]).expect("copairing");
    let base = graph_pair
        .compose(&dist_inv)
        .expect("composable")
        .compose(&fold)
        .expect("composable");
    KleisliMap {
        dom: a.clone(),
        cod: a.clone(),
        base,
    }
}

/// Composition as the copairing extension `[g, raise]` after the first
/// base; the model's own composition is the pointwise equivalent and the
/// `compose-formula` law equates the two.
pub fn compose_via_copair(f: &KleisliMap, g: &KleisliMap) -> Result<KleisliMap, Error> {
    if f.cod != g.dom {
        return Err(Error::mismatch(
            "kleisli composition",
            f.cod.name(),
            g.dom.name(),
        ));
    }
    let parts = maybe_parts(&g.cod);
    let extend = PartialMap::copair(&[g.base.clone(), PartialMap::inj(&parts, 1)?])?;
    Ok(KleisliMap {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        base: f.base.compose(&extend)?,
    })
}

impl Model for KleisliModel {
    type Obj = FinSet;
    type Map = KleisliMap;

    fn model_name(&self) -> String {
        "kleisli".to_string()
    }

    fn objects(&self) -> Vec<FinSet> {
        self.base.objects()
    }

    fn obj_size(&self, a: &FinSet) -> usize {
        a.size()
    }

    fn hom_size(&self, a: &FinSet, b: &FinSet) -> u128 {
        ((b.size() + 1) as u128).pow(a.size() as u32)
    }

    fn hom_nth(&self, a: &FinSet, b: &FinSet, n: u128) -> KleisliMap {
        let base_obj = maybe(b);
        let width = (b.size() + 1) as u128;
        let mut k = n;
        let mut graph = Vec::with_capacity(a.size());
        for _ in 0..a.size() {
            graph.push(Some((k % width) as u32));
            k /= width;
        }
        KleisliMap {
            dom: a.clone(),
            cod: b.clone(),
            base: PartialMap::new(a.clone(), base_obj, graph).expect("total graph"),
        }
    }

    fn dom(&self, f: &KleisliMap) -> FinSet {
        f.dom.clone()
    }

    fn cod(&self, f: &KleisliMap) -> FinSet {
        f.cod.clone()
    }

    fn identity(&self, a: &FinSet) -> KleisliMap {
        KleisliMap::eta(a)
    }

    fn compose(&self, f: &KleisliMap, g: &KleisliMap) -> Result<KleisliMap, Error> {
        if f.cod != g.dom {
            return Err(Error::mismatch(
                "kleisli composition",
                f.cod.name(),
                g.dom.name(),
            ));
        }
        let cut = f.cod.size() as u32;
        let raise = g.cod.size() as u32;
        let graph = f
            .base
            .graph()
            .iter()
            .map(|v| {
                let v = v.expect("total");
                if v < cut {
                    g.base.graph()[v as usize]
                } else {
                    Some(raise)
                }
            })
            .collect();
        Ok(KleisliMap {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            base: PartialMap::new(f.dom.clone(), g.base.cod().clone(), graph)?,
        })
    }

    fn restriction(&self, f: &KleisliMap) -> KleisliMap {
        let cut = f.cod.size() as u32;
        let raise = f.dom.size() as u32;
        let graph = f
            .base
            .graph()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if v.expect("total") < cut {
                    Some(i as u32)
                } else {
                    Some(raise)
                }
            })
            .collect();
        KleisliMap {
            dom: f.dom.clone(),
            cod: f.dom.clone(),
            base: PartialMap::new(f.dom.clone(), maybe(&f.dom), graph).expect("total graph"),
        }
    }

    fn terminal(&self) -> Option<FinSet> {
        Some(FinSet::one())
    }

    fn bang(&self, a: &FinSet) -> Option<KleisliMap> {
        let one = FinSet::one();
        let base = PartialMap::terminal(a)
            .compose(&PartialMap::inj(&maybe_parts(&one), 0).ok()?)
            .ok()?;
        Some(KleisliMap {
            dom: a.clone(),
            cod: one,
            base,
        })
    }

    fn initial(&self) -> Option<FinSet> {
        Some(FinSet::zero())
    }

    fn from_initial(&self, a: &FinSet) -> Option<KleisliMap> {
        Some(KleisliMap {
            dom: FinSet::zero(),
            cod: a.clone(),
            base: PartialMap::from_initial(&maybe(a)),
        })
    }

    fn zero(&self, a: &FinSet, b: &FinSet) -> Option<KleisliMap> {
        let base = PartialMap::terminal(a)
            .compose(&PartialMap::inj(&maybe_parts(b), 1).ok()?)
            .ok()?;
        Some(KleisliMap {
            dom: a.clone(),
            cod: b.clone(),
            base,
        })
    }

    fn product(&self, a: &FinSet, b: &FinSet) -> Option<FinSet> {
        Some(a.prod(b))
    }

    fn projection(&self, a: &FinSet, b: &FinSet, i: usize) -> Option<KleisliMap> {
        let pi = PartialMap::proj(a, b, i).ok()?;
        let target = if i == 0 { a } else { b };
        let base = pi
            .compose(&PartialMap::inj(&maybe_parts(target), 0).ok()?)
            .ok()?;
        Some(KleisliMap {
            dom: a.prod(b),
            cod: target.clone(),
            base,
        })
    }

    /// Defined only where both legs are; everything else raises. The
    /// composite through the four-way splitting of `(A+1) * (B+1)` is the
    /// same map; the `pair-formula` law equates the two.
    fn pair(&self, f: &KleisliMap, g: &KleisliMap) -> Result<KleisliMap, Error> {
        if f.dom != g.dom {
            return Err(Error::mismatch("kleisli pairing", f.dom.name(), g.dom.name()));
        }
        let (a, b) = (&f.cod, &g.cod);
        let prod = a.prod(b);
        let (fcut, gcut) = (a.size() as u32, b.size() as u32);
        let raise = prod.size() as u32;
        let graph = f
            .base
            .graph()
            .iter()
            .zip(g.base.graph().iter())
            .map(|(x, y)| {
                let (x, y) = (x.expect("total"), y.expect("total"));
                if x < fcut && y < gcut {
                    Some(x * gcut + y)
                } else {
                    Some(raise)
                }
            })
            .collect();
        Ok(KleisliMap {
            dom: f.dom.clone(),
            cod: prod.clone(),
            base: PartialMap::new(f.dom.clone(), maybe(&prod), graph)?,
        })
    }

    fn coproduct(&self, parts: &[FinSet]) -> Option<FinSet> {
        Some(FinSet::coprod(parts))
    }

    fn injection(&self, parts: &[FinSet], j: usize) -> Option<KleisliMap> {
        let sum = FinSet::coprod(parts);
        let base = PartialMap::inj(parts, j)
            .ok()?
            .compose(&PartialMap::inj(&maybe_parts(&sum), 0).ok()?)
            .ok()?;
        Some(KleisliMap {
            dom: parts[j].clone(),
            cod: sum,
            base,
        })
    }

    fn copair(&self, fs: &[KleisliMap]) -> Result<KleisliMap, Error> {
        let bases: Vec<PartialMap> = fs.iter().map(|f| f.base.clone()).collect();
        let base = PartialMap::copair(&bases)?;
        let first = fs.first().ok_or(Error::Unsupported("empty copairing"))?;
        Ok(KleisliMap {
            dom: FinSet::coprod(&fs.iter().map(|f| f.dom.clone()).collect::<Vec<_>>()),
            cod: first.cod.clone(),
            base,
        })
    }

    fn distributivity(&self, a: &FinSet, b: &FinSet, c: &FinSet) -> Option<(KleisliMap, KleisliMap)> {
        let (d, dinv) = PartialMap::dist(a, b, c);
        let lift = |f: PartialMap| {
            let cod = f.cod().clone();
            let base = f
                .compose(&PartialMap::inj(&maybe_parts(&cod), 0).expect("injection"))
                .expect("composable");
            KleisliMap {
                dom: base.dom().clone(),
                cod,
                base,
            }
        };
        Some((lift(d), lift(dinv)))
    }

    fn coproduct_parts(&self, o: &FinSet) -> Option<Vec<FinSet>> {
        o.summands().map(|p| p.to_vec())
    }

    fn has_joins(&self) -> bool {
        true
    }

    fn join(&self, fs: &[KleisliMap], a: &FinSet, b: &FinSet) -> Result<KleisliMap, Error> {
        let cut = b.size() as u32;
        for f in fs {
            if f.dom != *a || f.cod != *b {
                return Err(Error::mismatch(
                    "kleisli join",
                    format!("{a} -> {b}"),
                    format!("{} -> {}", f.dom, f.cod),
                ));
            }
        }
        for i in 0..fs.len() {
            for j in (i + 1)..fs.len() {
                let fi = fs[i].base.graph();
                let fj = fs[j].base.graph();
                let clash = fi.iter().zip(fj.iter()).any(|(x, y)| {
                    let (x, y) = (x.expect("total"), y.expect("total"));
                    x < cut && y < cut && x != y
                });
                if clash {
                    return Err(Error::Incompatible(i, j));
                }
            }
        }
        let mut graph = vec![Some(cut); a.size()];
        for f in fs {
            for (i, v) in f.base.graph().iter().enumerate() {
                let v = v.expect("total");
                if v < cut {
                    graph[i] = Some(v);
                }
            }
        }
        Ok(KleisliMap {
            dom: a.clone(),
            cod: b.clone(),
            base: PartialMap::new(a.clone(), maybe(b), graph)?,
        })
    }

    fn has_relative_complements(&self) -> bool {
        true
    }

    fn relative_complement(&self, g: &KleisliMap, f: &KleisliMap) -> Result<KleisliMap, Error> {
        if g.dom != f.dom || g.cod != f.cod {
            return Err(Error::mismatch(
                "kleisli relative complement",
                format!("{} -> {}", g.dom, g.cod),
                format!("{} -> {}", f.dom, f.cod),
            ));
        }
        let cut = g.cod.size() as u32;
        let below = f
            .base
            .graph()
            .iter()
            .zip(g.base.graph().iter())
            .all(|(x, y)| {
                let x = x.expect("total");
                x >= cut || *y == Some(x)
            });
        if !below {
            return Err(Error::NotBelow);
        }
        let graph = f
            .base
            .graph()
            .iter()
            .zip(g.base.graph().iter())
            .map(|(x, y)| {
                if x.expect("total") < cut {
                    Some(cut)
                } else {
                    *y
                }
            })
            .collect();
        Ok(KleisliMap {
            dom: g.dom.clone(),
            cod: g.cod.clone(),
            base: PartialMap::new(g.dom.clone(), maybe(&g.cod), graph)?,
        })
    }

    fn has_decisions(&self) -> bool {
        true
    }

    fn decision(&self, f: &KleisliMap) -> Result<KleisliMap, Error> {
        let parts = f.cod.summands().ok_or(Error::NotCoproductCodomain)?;
        let n = f.dom.size();
        let copies: Vec<FinSet> = (0..parts.len()).map(|_| f.dom.clone()).collect();
        let sum = FinSet::coprod(&copies);
        let raise = sum.size() as u32;
        let cut = f.cod.size() as u32;
        let graph = f
            .base
            .graph()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let v = v.expect("total");
                if v < cut {
                    let (j, _) = f.cod.coprod_locate(v as usize).expect("coproduct");
                    Some((j * n + i) as u32)
                } else {
                    Some(raise)
                }
            })
            .collect();
        Ok(KleisliMap {
            dom: f.dom.clone(),
            cod: sum.clone(),
            base: PartialMap::new(f.dom.clone(), maybe(&sum), graph)?,
        })
    }
}

// ---------------------------------------------------------------------
// Law suites.
// ---------------------------------------------------------------------

/// Monad laws for `_ + 1` on the total subcategory.
pub fn monad_suite(m: &FinParModel, b: &Budget) -> Vec<LawReport> {
    let q = Quant::new(m, b);
    let s = "monad";
    vec![
        q.objects1(s, "monad-left-unit", |a| {
            let ma = maybe(a);
            let lhs = comp!(m, &eta_map(&ma), &mu_map(a));
            let id = PartialMap::identity(&ma);
            if lhs == id {
                LawResult::Holds
            } else {
                violation("monad-left-unit", vec![format!("object {a}")], &lhs, &id)
            }
        }),
        q.objects1(s, "monad-right-unit", |a| {
            let ma = maybe(a);
            let lhs = comp!(m, &maybe_map(&eta_map(a)).expect("total"), &mu_map(a));
            let id = PartialMap::identity(&ma);
            if lhs == id {
                LawResult::Holds
            } else {
                violation("monad-right-unit", vec![format!("object {a}")], &lhs, &id)
            }
        }),
        q.objects1(s, "monad-assoc", |a| {
            let ma = maybe(a);
            let lhs = comp!(m, &mu_map(&ma), &mu_map(a));
            let rhs = comp!(m, &maybe_map(&mu_map(a)).expect("total"), &mu_map(a));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("monad-assoc", vec![format!("object {a}")], &lhs, &rhs)
            }
        }),
        q.maps1(s, "eta-natural", |f| {
            if !f.is_total() {
                return LawResult::Vacuous;
            }
            let lhs = comp!(m, f, &eta_map(f.cod()));
            let rhs = comp!(m, &eta_map(f.dom()), &maybe_map(f).expect("total"));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("eta-natural", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
        q.maps1(s, "mu-natural", |f| {
            if !f.is_total() {
                return LawResult::Vacuous;
            }
            let tf = maybe_map(f).expect("total");
            let ttf = maybe_map(&tf).expect("total");
            let lhs = comp!(m, &ttf, &mu_map(f.cod()));
            let rhs = comp!(m, &mu_map(f.dom()), &tf);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("mu-natural", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
    ]
}

/// The Kleisli-specific laws: formulas for the structural maps, the
/// total-maps characterization, and the round trip to partial maps.
pub fn kleisli_suite(m: &FinParModel, b: &Budget) -> Vec<LawReport> {
    let km = KleisliModel::new(m.clone());
    let q = Quant::new(&km, b);
    let qf = Quant::new(m, b);
    let s = "kleisli";
    vec![
        // The classical projection built inside the Kleisli category equals
        // the copairing [eta, raise, proj-eta] from the base category.
        q.objects2(s, "proj-formula", |a, bb| {
            for i in 0..2 {
                let built = classical::classical_projection(&km, a, bb, i)
                    .expect("kleisli classical projection");
                let target = if i == 0 { a } else { bb };
                let other = if i == 0 { bb } else { a };
                let mparts = maybe_parts(target);
                let lift = PartialMap::inj(&mparts, 0).expect("injection");
                let raise = PartialMap::inj(&mparts, 1).expect("injection");
                let legs = [
                    if i == 0 {
                        lift.clone()
                    } else {
                        PartialMap::terminal(other).compose(&raise).expect("composable")
                    },
                    if i == 0 {
                        PartialMap::terminal(other).compose(&raise).expect("composable")
                    } else {
                        lift.clone()
                    },
                    PartialMap::proj(a, bb, i)
                        .expect("projection")
                        .compose(&lift)
                        .expect("composable"),
                ];
                let expected = PartialMap::copair(&legs).expect("copairing");
                if *built.base() != expected {
                    return violation("proj-formula", vec![format!("objects {a}, {bb}")], built.base(), &expected);
                }
            }
            LawResult::Holds
        }),
        q.maps1(s, "total-iff-eta", |k| {
            let total = is_total(&km, k);
            if total != k.never_raises() {
                return violation(
                    "total-iff-eta",
                    vec![w(&km, "k", k)],
                    total,
                    k.never_raises(),
                );
            }
            if total {
                // the factoring through eta is unique: it is from_kleisli(k)
                let g = from_kleisli(k);
                let refit = comp!(m, &g, &eta_map(k.cod()));
                if refit != *k.base() || !g.is_total() {
                    return violation("total-iff-eta", vec![w(&km, "k", k)], &refit, k.base());
                }
            }
            LawResult::Holds
        }),
        // The pairing composite through the four-way splitting agrees with
        // the model pairing and with the transported base pairing.
        q.shared_dom2(s, "pair-formula", |f, g| {
            let paired = km.pair(f, g).expect("kleisli pairing");
            let (a, bb) = (&f.cod(), &g.cod());
            let prod = a.prod(bb);
            let legs = f.base().pair(g.base()).expect("total legs");
            let (split, _) = four_way_split(a, bb);
            let mparts = maybe_parts(&prod);
            let raise = PartialMap::inj(&mparts, 1).expect("injection");
            let fold = PartialMap::copair(&[
                PartialMap::terminal(a).compose(&raise).expect("composable"),
                PartialMap::terminal(bb).compose(&raise).expect("composable"),
                PartialMap::inj(&mparts, 0).expect("injection"),
                raise.clone(),
            ])
            .expect("copairing");
            let composite = legs
                .compose(&split)
                .expect("composable")
                .compose(&fold)
                .expect("composable");
            let transported = to_kleisli(
                &from_kleisli(f)
                    .pair(&from_kleisli(g))
                    .expect("base pairing"),
            );
            if *paired.base() == composite && paired == transported {
                LawResult::Holds
            } else {
                violation("pair-formula", vec![w(&km, "f", f), w(&km, "g", g)], &composite, paired.base())
            }
        }),
        // The classical pairing through the four-way splitting agrees with
        // the generic join construction.
        q.shared_dom2(s, "cpair-formula", |f, g| {
            let generic = classical::classical_pair(&km, f, g).expect("kleisli classical pairing");
            let (a, bb) = (&f.cod(), &g.cod());
            let legs = f.base().pair(g.base()).expect("total legs");
            let (split, _) = four_way_split(a, bb);
            let amp = FinSet::coprod(&[(*a).clone(), (*bb).clone(), a.prod(bb)]);
            // reassociate the four summands into (A + B + (A*B)) + 1
            let four = split.cod().clone();
            let reassoc_graph: Vec<Option<u32>> = (0..four.size())
                .map(|idx| {
                    let (j, inner) = four.coprod_locate(idx).expect("coproduct");
                    let target = if j < 3 {
                        amp.coprod_offsets().expect("coproduct")[j] + inner
                    } else {
                        amp.size()
                    };
                    Some(target as u32)
                })
                .collect();
            let reassoc =
                PartialMap::new(four, maybe(&amp), reassoc_graph).expect("bijection");
            let via_iso = legs
                .compose(&split)
                .expect("composable")
                .compose(&reassoc)
                .expect("composable");
            if *generic.base() == via_iso {
                LawResult::Holds
            } else {
                violation("cpair-formula", vec![w(&km, "f", f), w(&km, "g", g)], generic.base(), &via_iso)
            }
        }),
        // The restriction built from the distributivity isomorphism agrees
        // with the model restriction and with the transported restriction of
        // the underlying partial map.
        q.maps1(s, "rest-formula", |k| {
            let composite = restriction_via_distributivity(k);
            let direct = km.restriction(k);
            let transported = to_kleisli(&from_kleisli(k).restriction());
            if composite == direct && direct == transported {
                LawResult::Holds
            } else {
                violation("rest-formula", vec![w(&km, "k", k)], &composite, &direct)
            }
        }),
        q.chain2(s, "compose-formula", |f, g| {
            let composite = compose_via_copair(f, g).expect("composable");
            let direct = km.compose(f, g).expect("composable");
            if composite == direct {
                LawResult::Holds
            } else {
                violation("compose-formula", vec![w(&km, "f", f), w(&km, "g", g)], &composite, &direct)
            }
        }),
        q.maps1(s, "roundtrip-kleisli", |k| {
            let back = to_kleisli(&from_kleisli(k));
            if back == *k {
                LawResult::Holds
            } else {
                violation("roundtrip-kleisli", vec![w(&km, "k", k)], &back, k)
            }
        }),
        qf.maps1(s, "roundtrip-partial", |f| {
            let back = from_kleisli(&to_kleisli(f));
            if back == *f {
                LawResult::Holds
            } else {
                violation("roundtrip-partial", vec![w(m, "f", f)], &back, f)
            }
        }),
        qf.chain2(s, "functor", |f, g| {
            let lhs = to_kleisli(&comp!(m, f, g));
            let rhs = km
                .compose(&to_kleisli(f), &to_kleisli(g))
                .expect("composable");
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("functor", vec![w(m, "f", f), w(m, "g", g)], &lhs, &rhs)
            }
        }),
        qf.objects1(s, "functor-identity", |a| {
            let lhs = to_kleisli(&PartialMap::identity(a));
            let rhs = KleisliMap::eta(a);
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("functor-identity", vec![format!("object {a}")], &lhs, &rhs)
            }
        }),
        qf.maps1(s, "rest-preserved", |f| {
            let lhs = to_kleisli(&f.restriction());
            let rhs = km.restriction(&to_kleisli(f));
            if lhs == rhs {
                LawResult::Holds
            } else {
                violation("rest-preserved", vec![w(m, "f", f)], &lhs, &rhs)
            }
        }),
        // The classifier formula from the classical structure agrees with
        // the pointwise translation, factors, and is unique among totals.
        qf.maps1(s, "classify-formula", |f| {
            let t = classical::classify(m, f).expect("classical structure");
            let direct = to_kleisli(f);
            if t == *direct.base() {
                LawResult::Holds
            } else {
                violation("classify-formula", vec![w(m, "f", f)], &t, direct.base())
            }
        }),
        qf.maps1(s, "classify-factor", |f| {
            let t = classical::classify(m, f).expect("classical structure");
            let q0 =
                PartialMap::qproj(&maybe_parts(f.cod()), 0).expect("quasi-projection");
            let back = comp!(m, &t, &q0);
            if t.is_total() && back == *f {
                LawResult::Holds
            } else {
                violation("classify-factor", vec![w(m, "f", f)], &back, f)
            }
        }),
        qf.maps1_unique(s, "classify-unique", |f| {
            let (a, bb) = (f.dom(), f.cod());
            let mb = maybe(bb);
            if m.hom_size(a, &mb) > b.uniqueness_cap {
                return LawResult::SkippedSite;
            }
            let t = classical::classify(m, f).expect("classical structure");
            let q0 = PartialMap::qproj(&maybe_parts(bb), 0).expect("quasi-projection");
            for h in m.hom(a, &mb) {
                if h.is_total() && comp!(m, &h, &q0) == *f && h != t {
                    return violation("classify-unique", vec![w(m, "f", f), w(m, "h", &h)], &h, &t);
                }
            }
            LawResult::Holds
        }),
    ]
}

/// Run the full generic law stack over the Kleisli model, relabelling the
/// suites so the reports name the model they ran against.
pub fn kleisli_rescat_suite(m: &FinParModel, b: &Budget) -> Vec<LawReport> {
    let km = KleisliModel::new(m.clone());
    let mut reports = crate::rescat::laws::axioms_and_structure(&km, b);
    reports.extend(crate::classical::classical_suites(&km, b));
    reports.extend(crate::splitting::splitting_suite(&km, b));
    for r in &mut reports {
        r.suite = format!("kleisli-rescat:{}", r.suite);
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo() -> FinParModel {
        FinParModel::demo()
    }

    #[test]
    fn eta_and_roundtrip() {
        let m = demo();
        let x = m.lookup_object("X").unwrap();
        let eta = KleisliMap::eta(x);
        assert!(eta.never_raises());
        assert_eq!(from_kleisli(&eta), PartialMap::identity(x));
        let f = m.lookup_map("f").unwrap();
        assert_eq!(from_kleisli(&to_kleisli(f)), *f);
    }

    #[test]
    fn composition_propagates_the_added_point() {
        let m = demo();
        let km = KleisliModel::new(m.clone());
        let f = to_kleisli(m.lookup_map("f").unwrap()); // X -> Y, raises at x1
        let h = to_kleisli(m.lookup_map("h").unwrap()); // Y -> X, total
        let fg = km.compose(&f, &h).unwrap();
        assert_eq!(from_kleisli(&fg), {
            let f = m.lookup_map("f").unwrap();
            let h = m.lookup_map("h").unwrap();
            f.compose(h).unwrap()
        });
        // raises exactly where f raises
        assert!(!fg.never_raises());
    }

    #[test]
    fn restriction_composite_matches_transport() {
        let m = demo();
        let km = KleisliModel::new(m.clone());
        let f = to_kleisli(m.lookup_map("f").unwrap());
        let r = km.restriction(&f);
        assert_eq!(r, to_kleisli(&m.lookup_map("f").unwrap().restriction()));
        // total maps restrict to eta
        let g = to_kleisli(m.lookup_map("g").unwrap());
        assert_eq!(km.restriction(&g), KleisliMap::eta(g.dom()));
        // the constant raise restricts to itself
        let x = m.lookup_object("X").unwrap();
        let y = m.lookup_object("Y").unwrap();
        let z = km.zero(x, y).unwrap();
        assert_eq!(km.restriction(&z), km.zero(x, x).unwrap());
    }

    #[test]
    fn pairing_case_table() {
        let m = demo();
        let km = KleisliModel::new(m.clone());
        let x = m.lookup_object("X").unwrap();
        let f = to_kleisli(m.lookup_map("f").unwrap()); // defined at x0 only
        let k = to_kleisli(m.lookup_map("k").unwrap()); // defined at x1 only
        // the restriction pairing raises where either leg raises
        let pair = km.pair(&f, &k).unwrap();
        assert_eq!(from_kleisli(&pair), PartialMap::zero(x, pair.cod()));
        // the classical pairing keeps the surviving leg's summand
        let cpair = crate::classical::classical_pair(&km, &f, &k).unwrap();
        let under = from_kleisli(&cpair);
        assert_eq!(
            under.apply(&crate::finpar::Elem::label("x0")).unwrap().to_string(),
            "0:y0"
        );
        assert_eq!(
            under.apply(&crate::finpar::Elem::label("x1")).unwrap().to_string(),
            "1:y0"
        );
        // both legs raising raises both pairings
        let z = km.zero(x, f.cod()).unwrap();
        assert_eq!(from_kleisli(&km.pair(&z, &z).unwrap()).defined_count(), 0);
        assert_eq!(
            from_kleisli(&crate::classical::classical_pair(&km, &z, &z).unwrap()).defined_count(),
            0
        );
    }

    #[test]
    fn four_way_split_is_a_bijection() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let y = FinSet::atom("Y", &["y0"]).unwrap();
        let (fwd, bwd) = four_way_split(&x, &y);
        assert_eq!(fwd.compose(&bwd).unwrap(), PartialMap::identity(fwd.dom()));
        assert_eq!(bwd.compose(&fwd).unwrap(), PartialMap::identity(bwd.dom()));
    }
}
