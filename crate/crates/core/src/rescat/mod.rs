//! The abstract restriction-category contract and the generic law machinery.
//!
//! A [`Model`] is a finite category with enumerable objects and hom-sets, an
//! identity-assigning map, diagrammatic composition, and a restriction
//! operator. Structural witnesses (terminal object, products, coproducts,
//! zeroes, distributivity) and classical primitives (joins, relative
//! complements, decisions) are optional; law suites skip what a model does
//! not supply and say so in their reports.

pub mod laws;
pub(crate) mod quantify;
pub mod report;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::Error;

pub use report::{all_passed, sort_reports, Budget, LawReport, LawStatus, Violation, DEFAULT_SEED};

/// Compose two maps that are composable by construction.
macro_rules! comp {
    ($m:expr, $f:expr, $g:expr) => {
        $m.compose($f, $g).expect("composable by construction")
    };
}
pub(crate) use comp;

pub trait Model {
    type Obj: Clone + Eq + Hash + Display + Debug;
    type Map: Clone + Eq + Display + Debug;

    fn model_name(&self) -> String;

    /// The objects the law suites quantify over.
    fn objects(&self) -> Vec<Self::Obj>;

    /// Size measure used by the quantification budget (element count for
    /// partial-map models, rank for ring models).
    fn obj_size(&self, a: &Self::Obj) -> usize;

    /// Number of maps from `a` to `b`.
    fn hom_size(&self, a: &Self::Obj, b: &Self::Obj) -> u128;

    /// The `n`-th map from `a` to `b` in the fixed enumeration order.
    fn hom_nth(&self, a: &Self::Obj, b: &Self::Obj, n: u128) -> Self::Map;

    /// Materialize a hom-set. Callers are expected to have checked the size.
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Map> {
        (0..self.hom_size(a, b))
            .map(|n| self.hom_nth(a, b, n))
            .collect()
    }

    fn dom(&self, f: &Self::Map) -> Self::Obj;
    fn cod(&self, f: &Self::Map) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Map;

    /// Diagrammatic composition: first `f`, then `g`.
    fn compose(&self, f: &Self::Map, g: &Self::Map) -> Result<Self::Map, Error>;

    fn restriction(&self, f: &Self::Map) -> Self::Map;

    // -- structural witnesses -------------------------------------------

    fn terminal(&self) -> Option<Self::Obj> {
        None
    }

    /// The unique total map `A -> 1`.
    fn bang(&self, _a: &Self::Obj) -> Option<Self::Map> {
        None
    }

    fn initial(&self) -> Option<Self::Obj> {
        None
    }

    /// The unique map `0 -> A`.
    fn from_initial(&self, _a: &Self::Obj) -> Option<Self::Map> {
        None
    }

    fn zero(&self, _a: &Self::Obj, _b: &Self::Obj) -> Option<Self::Map> {
        None
    }

    fn product(&self, _a: &Self::Obj, _b: &Self::Obj) -> Option<Self::Obj> {
        None
    }

    fn projection(&self, _a: &Self::Obj, _b: &Self::Obj, _i: usize) -> Option<Self::Map> {
        None
    }

    fn pair(&self, _f: &Self::Map, _g: &Self::Map) -> Result<Self::Map, Error> {
        Err(Error::Unsupported("restriction products"))
    }

    fn coproduct(&self, _parts: &[Self::Obj]) -> Option<Self::Obj> {
        None
    }

    fn injection(&self, _parts: &[Self::Obj], _j: usize) -> Option<Self::Map> {
        None
    }

    fn copair(&self, _fs: &[Self::Map]) -> Result<Self::Map, Error> {
        Err(Error::Unsupported("restriction coproducts"))
    }

    /// The canonical map `(A*B) + (A*C) -> A * (B + C)` together with its
    /// inverse, when the model supplies the distributivity isomorphism.
    fn distributivity(
        &self,
        _a: &Self::Obj,
        _b: &Self::Obj,
        _c: &Self::Obj,
    ) -> Option<(Self::Map, Self::Map)> {
        None
    }

    /// Decompose an object that is a coproduct into its summands, when the
    /// model represents coproducts with a recoverable shape.
    fn coproduct_parts(&self, _o: &Self::Obj) -> Option<Vec<Self::Obj>> {
        None
    }

    // -- classical primitives -------------------------------------------

    fn has_joins(&self) -> bool {
        false
    }

    fn has_relative_complements(&self) -> bool {
        false
    }

    fn has_decisions(&self) -> bool {
        false
    }

    /// Join of a pairwise-compatible family at the stated type.
    fn join(&self, _fs: &[Self::Map], _a: &Self::Obj, _b: &Self::Obj) -> Result<Self::Map, Error> {
        Err(Error::Unsupported("joins"))
    }

    /// Relative complement `g \ f` for `f <= g`.
    fn relative_complement(&self, _g: &Self::Map, _f: &Self::Map) -> Result<Self::Map, Error> {
        Err(Error::Unsupported("relative complements"))
    }

    /// The decision of a map into a coproduct.
    fn decision(&self, _f: &Self::Map) -> Result<Self::Map, Error> {
        Err(Error::Unsupported("decisions"))
    }
}

fn ensure_parallel<M: Model>(m: &M, f: &M::Map, g: &M::Map, context: &'static str) -> Result<(), Error> {
    if m.dom(f) != m.dom(g) || m.cod(f) != m.cod(g) {
        return Err(Error::TypeMismatch {
            context,
            expected: format!("{} -> {}", m.dom(f), m.cod(f)),
            found: format!("{} -> {}", m.dom(g), m.cod(g)),
        });
    }
    Ok(())
}

/// `f <= g` iff the restriction of `f` followed by `g` recovers `f`.
pub fn leq<M: Model>(m: &M, f: &M::Map, g: &M::Map) -> Result<bool, Error> {
    ensure_parallel(m, f, g, "order")?;
    Ok(m.compose(&m.restriction(f), g)? == *f)
}

/// `f ~ g` iff restricting each to the other's domain gives the same map.
pub fn compatible<M: Model>(m: &M, f: &M::Map, g: &M::Map) -> Result<bool, Error> {
    ensure_parallel(m, f, g, "compatibility")?;
    Ok(m.compose(&m.restriction(f), g)? == m.compose(&m.restriction(g), f)?)
}

/// `f _|_ g` iff restricting one to the other gives the zero map.
pub fn disjoint<M: Model>(m: &M, f: &M::Map, g: &M::Map) -> Result<bool, Error> {
    ensure_parallel(m, f, g, "disjointness")?;
    let zero = m.zero(&m.dom(f), &m.cod(f)).ok_or(Error::NoZeroes)?;
    Ok(m.compose(&m.restriction(f), g)? == zero)
}

/// A map is total when its restriction is the identity.
pub fn is_total<M: Model>(m: &M, f: &M::Map) -> bool {
    m.restriction(f) == m.identity(&m.dom(f))
}

/// A restriction idempotent is a self-map equal to its own restriction.
pub fn is_restriction_idempotent<M: Model>(m: &M, e: &M::Map) -> bool {
    m.dom(e) == m.cod(e) && m.restriction(e) == *e
}
