//! Finite objects: ordered element lists plus the construction that built them.

use std::cell::RefCell;
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::Error;

use super::elem::Elem;

/// How a finite object was built.
///
/// `amp(A, B)` is definitionally the coproduct of `A`, `B` and `A * B`, so it
/// carries no tag of its own: [`FinSet::amp`] produces a `Coprod` with three
/// summands and the shape is recognized back by [`FinSet::as_amp`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Atom,
    One,
    Zero,
    Prod(FinSet, FinSet),
    Coprod(Vec<FinSet>),
    /// A canonical subset of a parent object, used by idempotent splittings.
    Sub { parent: FinSet, kept: Vec<u32> },
}

#[derive(Debug)]
struct Inner {
    name: String,
    construction: Construction,
    elements: Vec<Elem>,
    hash: u64,
}

/// A finite object: distinct ordered elements plus its construction tree.
///
/// Objects are compared structurally (construction tree and atom names), not
/// up to isomorphism, so universal-property checks have fixed witnesses.
/// Constructed objects are interned per thread, so repeated constructions
/// share one allocation and compare by pointer.
#[derive(Clone, Debug)]
pub struct FinSet {
    inner: Arc<Inner>,
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.hash == other.inner.hash
                && self.inner.name == other.inner.name
                && self.inner.elements == other.inner.elements
                && self.inner.construction == other.inner.construction)
    }
}

impl Eq for FinSet {}

impl Hash for FinSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.inner.hash);
    }
}

#[derive(PartialEq, Eq, Hash)]
enum ConsKey {
    One,
    Zero,
    Prod(FinSet, FinSet),
    Coprod(Vec<FinSet>),
    Sub(FinSet, Vec<u32>),
}

thread_local! {
    static CONSTRUCTED: RefCell<HashMap<ConsKey, FinSet>> = RefCell::new(HashMap::new());
}

fn interned(key: ConsKey, build: impl FnOnce() -> FinSet) -> FinSet {
    CONSTRUCTED.with(|cache| {
        if let Some(hit) = cache.borrow().get(&key) {
            return hit.clone();
        }
        let made = build();
        cache.borrow_mut().insert(key, made.clone());
        made
    })
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.name)
    }
}

fn wrapped(o: &FinSet) -> String {
    match o.construction() {
        Construction::Atom | Construction::One | Construction::Zero => o.name().to_string(),
        _ => format!("({})", o.name()),
    }
}

impl FinSet {
    fn build(name: String, construction: Construction, elements: Vec<Elem>) -> FinSet {
        let mut h = DefaultHasher::new();
        name.hash(&mut h);
        elements.hash(&mut h);
        match &construction {
            Construction::Atom => 0u8.hash(&mut h),
            Construction::One => 1u8.hash(&mut h),
            Construction::Zero => 2u8.hash(&mut h),
            Construction::Prod(a, b) => {
                3u8.hash(&mut h);
                h.write_u64(a.inner.hash);
                h.write_u64(b.inner.hash);
            }
            Construction::Coprod(parts) => {
                4u8.hash(&mut h);
                for p in parts {
                    h.write_u64(p.inner.hash);
                }
            }
            Construction::Sub { parent, kept } => {
                5u8.hash(&mut h);
                h.write_u64(parent.inner.hash);
                kept.hash(&mut h);
            }
        }
        let hash = h.finish();
        FinSet {
            inner: Arc::new(Inner {
                name,
                construction,
                elements,
                hash,
            }),
        }
    }

    /// An atom with the given distinct element labels.
    pub fn atom(name: &str, labels: &[&str]) -> Result<FinSet, Error> {
        let distinct: BTreeSet<&&str> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Invalid(format!(
                "object {name} has repeated element labels"
            )));
        }
        Ok(FinSet::build(
            name.to_string(),
            Construction::Atom,
            labels.iter().map(|l| Elem::label(l)).collect(),
        ))
    }

    /// The restriction terminal object, a chosen singleton.
    pub fn one() -> FinSet {
        interned(ConsKey::One, || {
            FinSet::build("one".to_string(), Construction::One, vec![Elem::Unit])
        })
    }

    /// The restriction initial object, the empty set.
    pub fn zero() -> FinSet {
        interned(ConsKey::Zero, || {
            FinSet::build("zero".to_string(), Construction::Zero, vec![])
        })
    }

    /// The product, with elements ordered lexicographically by
    /// (left index, right index).
    pub fn prod(&self, other: &FinSet) -> FinSet {
        interned(ConsKey::Prod(self.clone(), other.clone()), || {
            let mut elements = Vec::with_capacity(self.size() * other.size());
            for a in self.elements() {
                for b in other.elements() {
                    elements.push(Elem::pair(a.clone(), b.clone()));
                }
            }
            FinSet::build(
                format!("{} * {}", wrapped(self), wrapped(other)),
                Construction::Prod(self.clone(), other.clone()),
                elements,
            )
        })
    }

    /// The finite coproduct, with elements ordered by (summand, element) and
    /// tagged with their summand index.
    pub fn coprod(parts: &[FinSet]) -> FinSet {
        interned(ConsKey::Coprod(parts.to_vec()), || {
            let mut elements = Vec::new();
            for (j, p) in parts.iter().enumerate() {
                for e in p.elements() {
                    elements.push(Elem::tagged(j, e.clone()));
                }
            }
            let name = if parts.is_empty() {
                "zero".to_string()
            } else {
                parts.iter().map(wrapped).collect::<Vec<_>>().join(" + ")
            };
            FinSet::build(name, Construction::Coprod(parts.to_vec()), elements)
        })
    }

    /// The object `A + B + (A * B)`: the coproduct of the two objects and
    /// their product. This is the candidate genuine product of the model.
    pub fn amp(&self, other: &FinSet) -> FinSet {
        FinSet::coprod(&[self.clone(), other.clone(), self.prod(other)])
    }

    /// The canonical subset keeping the given element indices of a parent
    /// object, preserving element order. Used by idempotent splittings.
    pub fn subset(&self, kept: &[u32]) -> Result<FinSet, Error> {
        let mut sorted: Vec<u32> = kept.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&i| i as usize >= self.size()) {
            return Err(Error::IndexOutOfRange {
                index: sorted.last().copied().unwrap_or(0) as usize,
                what: format!("subset of {self}"),
            });
        }
        Ok(interned(
            ConsKey::Sub(self.clone(), sorted.clone()),
            || {
                let elements = sorted
                    .iter()
                    .map(|&i| self.elements()[i as usize].clone())
                    .collect();
                let idx = sorted
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                FinSet::build(
                    format!("{}[{}]", wrapped(self), idx),
                    Construction::Sub {
                        parent: self.clone(),
                        kept: sorted.clone(),
                    },
                    elements,
                )
            },
        ))
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn size(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.inner.elements
    }

    pub fn construction(&self) -> &Construction {
        &self.inner.construction
    }

    pub fn index_of(&self, e: &Elem) -> Option<usize> {
        self.inner.elements.iter().position(|x| x == e)
    }

    /// Summands when this object is a coproduct.
    pub fn summands(&self) -> Option<&[FinSet]> {
        match self.construction() {
            Construction::Coprod(parts) => Some(parts),
            _ => None,
        }
    }

    /// Factors when this object is a product.
    pub fn factors(&self) -> Option<(&FinSet, &FinSet)> {
        match self.construction() {
            Construction::Prod(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Recognize the `A + B + (A * B)` shape.
    pub fn as_amp(&self) -> Option<(&FinSet, &FinSet)> {
        let parts = self.summands()?;
        if parts.len() != 3 {
            return None;
        }
        match parts[2].construction() {
            Construction::Prod(a, b) if *a == parts[0] && *b == parts[1] => {
                Some((&parts[0], &parts[1]))
            }
            _ => None,
        }
    }

    /// Element offsets of the summands of a coproduct.
    pub fn coprod_offsets(&self) -> Option<Vec<usize>> {
        let parts = self.summands()?;
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for p in parts {
            offsets.push(acc);
            acc += p.size();
        }
        Some(offsets)
    }

    /// Locate a coproduct element index as (summand, index within summand).
    pub fn coprod_locate(&self, idx: usize) -> Option<(usize, usize)> {
        let parts = self.summands()?;
        let mut acc = 0;
        for (j, p) in parts.iter().enumerate() {
            if idx < acc + p.size() {
                return Some((j, idx - acc));
            }
            acc += p.size();
        }
        None
    }

    /// Index of the pair (i, j) inside a product object.
    pub fn prod_index(&self, i: usize, j: usize) -> Option<usize> {
        let (_, b) = self.factors()?;
        Some(i * b.size() + j)
    }

    /// Locate a product element index as (left index, right index).
    pub fn prod_locate(&self, idx: usize) -> Option<(usize, usize)> {
        let (_, b) = self.factors()?;
        if b.size() == 0 {
            return None;
        }
        Some((idx / b.size(), idx % b.size()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_rejects_duplicate_labels() {
        assert!(FinSet::atom("X", &["x0", "x0"]).is_err());
    }

    #[test]
    fn product_order_is_lexicographic() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let y = FinSet::atom("Y", &["y0"]).unwrap();
        let p = x.prod(&y);
        assert_eq!(p.size(), 2);
        assert_eq!(p.elements()[0].to_string(), "(x0,y0)");
        assert_eq!(p.elements()[1].to_string(), "(x1,y0)");
        assert_eq!(p.prod_index(1, 0), Some(1));
        assert_eq!(p.prod_locate(1), Some((1, 0)));
    }

    #[test]
    fn amp_is_the_three_way_coproduct() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let y = FinSet::atom("Y", &["y0"]).unwrap();
        let amp = x.amp(&y);
        assert_eq!(amp.size(), 2 + 1 + 2);
        assert_eq!(amp, FinSet::coprod(&[x.clone(), y.clone(), x.prod(&y)]));
        assert!(amp.as_amp().is_some());
        assert_eq!(amp.name(), "X + Y + (X * Y)");
    }

    #[test]
    fn structural_equality_distinguishes_orders() {
        let x = FinSet::atom("X", &["x0"]).unwrap();
        let y = FinSet::atom("Y", &["y0"]).unwrap();
        assert_ne!(x.prod(&y), y.prod(&x));
        assert_eq!(x.prod(&y), x.prod(&y));
    }

    #[test]
    fn one_and_zero_sizes() {
        assert_eq!(FinSet::one().size(), 1);
        assert_eq!(FinSet::zero().size(), 0);
    }
}
