//! Partial maps between finite objects.
//!
//! A map stores its domain, codomain and a graph table indexed by domain
//! element; `None` marks the points where the map is undefined. Equality is
//! extensional: two maps are equal exactly when domain, codomain and graph
//! coincide. Composition is written in diagrammatic order throughout, so
//! `f.compose(&g)` first does `f`, then `g`.

use std::fmt;

use crate::error::Error;

use super::elem::Elem;
use super::object::FinSet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialMap {
    dom: FinSet,
    cod: FinSet,
    graph: Vec<Option<u32>>,
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (i, v) in self.graph.iter().enumerate() {
            if let Some(j) = v {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(
                    f,
                    "{} -> {}",
                    self.dom.elements()[i],
                    self.cod.elements()[*j as usize]
                )?;
            }
        }
        write!(f, "}}")
    }
}

impl PartialMap {
    pub fn new(dom: FinSet, cod: FinSet, graph: Vec<Option<u32>>) -> Result<PartialMap, Error> {
        if graph.len() != dom.size() {
            return Err(Error::Invalid(format!(
                "graph length {} does not match |{}| = {}",
                graph.len(),
                dom,
                dom.size()
            )));
        }
        if let Some(bad) = graph.iter().flatten().find(|&&j| j as usize >= cod.size()) {
            return Err(Error::IndexOutOfRange {
                index: *bad as usize,
                what: format!("codomain {cod}"),
            });
        }
        Ok(PartialMap { dom, cod, graph })
    }

    /// Build from element-level pairs; duplicate keys and unknown elements are
    /// rejected.
    pub fn from_pairs(dom: FinSet, cod: FinSet, pairs: &[(Elem, Elem)]) -> Result<PartialMap, Error> {
        let mut graph = vec![None; dom.size()];
        for (k, v) in pairs {
            let i = dom
                .index_of(k)
                .ok_or_else(|| Error::Invalid(format!("element {k} is not in {dom}")))?;
            let j = cod
                .index_of(v)
                .ok_or_else(|| Error::Invalid(format!("element {v} is not in {cod}")))?;
            if graph[i].is_some() {
                return Err(Error::Invalid(format!("element {k} is mapped twice")));
            }
            graph[i] = Some(j as u32);
        }
        PartialMap::new(dom, cod, graph)
    }

    pub fn identity(a: &FinSet) -> PartialMap {
        PartialMap {
            dom: a.clone(),
            cod: a.clone(),
            graph: (0..a.size() as u32).map(Some).collect(),
        }
    }

    /// The nowhere-defined map, the restriction zero.
    pub fn zero(a: &FinSet, b: &FinSet) -> PartialMap {
        PartialMap {
            dom: a.clone(),
            cod: b.clone(),
            graph: vec![None; a.size()],
        }
    }

    /// The unique total map into the terminal object.
    pub fn terminal(a: &FinSet) -> PartialMap {
        PartialMap {
            dom: a.clone(),
            cod: FinSet::one(),
            graph: vec![Some(0); a.size()],
        }
    }

    /// The unique map out of the initial object.
    pub fn from_initial(a: &FinSet) -> PartialMap {
        PartialMap {
            dom: FinSet::zero(),
            cod: a.clone(),
            graph: vec![],
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn graph(&self) -> &[Option<u32>] {
        &self.graph
    }

    pub fn apply_idx(&self, i: usize) -> Option<usize> {
        self.graph[i].map(|j| j as usize)
    }

    pub fn apply(&self, e: &Elem) -> Option<&Elem> {
        let i = self.dom.index_of(e)?;
        self.apply_idx(i).map(|j| &self.cod.elements()[j])
    }

    pub fn defined_count(&self) -> usize {
        self.graph.iter().flatten().count()
    }

    pub fn is_total(&self) -> bool {
        self.graph.iter().all(|v| v.is_some())
    }

    pub fn is_parallel_to(&self, other: &PartialMap) -> bool {
        self.dom == other.dom && self.cod == other.cod
    }

    /// A restriction idempotent is a partial identity on a subset.
    pub fn is_restriction_idempotent(&self) -> bool {
        self.dom == self.cod
            && self
                .graph
                .iter()
                .enumerate()
                .all(|(i, v)| v.is_none() || *v == Some(i as u32))
    }

    /// Diagrammatic composition: first `self`, then `g`.
    pub fn compose(&self, g: &PartialMap) -> Result<PartialMap, Error> {
        if self.cod != g.dom {
            return Err(Error::mismatch(
                "composition",
                self.cod.name(),
                g.dom.name(),
            ));
        }
        Ok(PartialMap {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            graph: self
                .graph
                .iter()
                .map(|v| v.and_then(|j| g.graph[j as usize]))
                .collect(),
        })
    }

    /// The restriction: the partial identity on the domain of definition.
    pub fn restriction(&self) -> PartialMap {
        PartialMap {
            dom: self.dom.clone(),
            cod: self.dom.clone(),
            graph: self
                .graph
                .iter()
                .enumerate()
                .map(|(i, v)| v.map(|_| i as u32))
                .collect(),
        }
    }

    /// Restriction-product pairing: defined where both legs are defined.
    pub fn pair(&self, g: &PartialMap) -> Result<PartialMap, Error> {
        if self.dom != g.dom {
            return Err(Error::mismatch("pairing", self.dom.name(), g.dom.name()));
        }
        let cod = self.cod.prod(&g.cod);
        let nb = g.cod.size() as u32;
        Ok(PartialMap {
            dom: self.dom.clone(),
            cod,
            graph: self
                .graph
                .iter()
                .zip(g.graph.iter())
                .map(|(a, b)| match (a, b) {
                    (Some(i), Some(j)) => Some(i * nb + j),
                    _ => None,
                })
                .collect(),
        })
    }

    /// Copairing out of the coproduct of the domains.
    pub fn copair(fs: &[PartialMap]) -> Result<PartialMap, Error> {
        let first = fs.first().ok_or(Error::Unsupported("empty copairing"))?;
        for f in fs {
            if f.cod != first.cod {
                return Err(Error::mismatch("copairing", first.cod.name(), f.cod.name()));
            }
        }
        let dom = FinSet::coprod(&fs.iter().map(|f| f.dom.clone()).collect::<Vec<_>>());
        let mut graph = Vec::with_capacity(dom.size());
        for f in fs {
            graph.extend_from_slice(&f.graph);
        }
        Ok(PartialMap {
            dom,
            cod: first.cod.clone(),
            graph,
        })
    }

    /// Total projection out of a product.
    pub fn proj(a: &FinSet, b: &FinSet, i: usize) -> Result<PartialMap, Error> {
        if i > 1 {
            return Err(Error::IndexOutOfRange {
                index: i,
                what: "binary product projection".to_string(),
            });
        }
        let dom = a.prod(b);
        let nb = b.size() as u32;
        let graph = (0..dom.size() as u32)
            .map(|k| Some(if i == 0 { k / nb.max(1) } else { k % nb.max(1) }))
            .collect();
        let cod = if i == 0 { a.clone() } else { b.clone() };
        Ok(PartialMap { dom, cod, graph })
    }

    /// Total injection into a coproduct.
    pub fn inj(parts: &[FinSet], j: usize) -> Result<PartialMap, Error> {
        if j >= parts.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                what: "coproduct injection".to_string(),
            });
        }
        let cod = FinSet::coprod(parts);
        let offset: usize = parts[..j].iter().map(|p| p.size()).sum();
        Ok(PartialMap {
            dom: parts[j].clone(),
            cod,
            graph: (0..parts[j].size())
                .map(|i| Some((offset + i) as u32))
                .collect(),
        })
    }

    /// Quasi-projection out of a coproduct: the copairing of zeroes and one
    /// identity, a partial inverse to the matching injection.
    pub fn qproj(parts: &[FinSet], j: usize) -> Result<PartialMap, Error> {
        if j >= parts.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                what: "quasi-projection".to_string(),
            });
        }
        let fs: Vec<PartialMap> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == j {
                    PartialMap::identity(p)
                } else {
                    PartialMap::zero(p, &parts[j])
                }
            })
            .collect();
        PartialMap::copair(&fs)
    }

    /// The canonical distributivity map `(A*B) + (A*C) -> A * (B + C)` and
    /// its inverse, both total bijections on elements.
    pub fn dist(a: &FinSet, b: &FinSet, c: &FinSet) -> (PartialMap, PartialMap) {
        let dom = FinSet::coprod(&[a.prod(b), a.prod(c)]);
        let cod = a.prod(&FinSet::coprod(&[b.clone(), c.clone()]));
        let (nb, nc) = (b.size(), c.size());
        let mut fwd = vec![None; dom.size()];
        for i in 0..a.size() {
            for j in 0..nb {
                fwd[i * nb + j] = Some((i * (nb + nc) + j) as u32);
            }
            for k in 0..nc {
                fwd[a.size() * nb + i * nc + k] = Some((i * (nb + nc) + nb + k) as u32);
            }
        }
        let mut bwd = vec![None; cod.size()];
        for (x, y) in fwd.iter().enumerate() {
            bwd[y.unwrap() as usize] = Some(x as u32);
        }
        (
            PartialMap {
                dom: dom.clone(),
                cod: cod.clone(),
                graph: fwd,
            },
            PartialMap {
                dom: cod,
                cod: dom,
                graph: bwd,
            },
        )
    }

    // ------------------------------------------------------------------
    // Order relations, computed pointwise.
    // ------------------------------------------------------------------

    fn check_parallel(&self, g: &PartialMap, context: &'static str) -> Result<(), Error> {
        if !self.is_parallel_to(g) {
            return Err(Error::mismatch(
                context,
                format!("{} -> {}", self.dom, self.cod),
                format!("{} -> {}", g.dom, g.cod),
            ));
        }
        Ok(())
    }

    /// `f <= g`: wherever `f` is defined, `g` agrees with it.
    pub fn leq(&self, g: &PartialMap) -> Result<bool, Error> {
        self.check_parallel(g, "order")?;
        Ok(self
            .graph
            .iter()
            .zip(g.graph.iter())
            .all(|(a, b)| a.is_none() || a == b))
    }

    /// `f ~ g`: wherever both are defined, they agree.
    pub fn compatible(&self, g: &PartialMap) -> Result<bool, Error> {
        self.check_parallel(g, "compatibility")?;
        Ok(self
            .graph
            .iter()
            .zip(g.graph.iter())
            .all(|(a, b)| a.is_none() || b.is_none() || a == b))
    }

    /// `f _|_ g`: wherever one is defined, the other is not.
    pub fn disjoint(&self, g: &PartialMap) -> Result<bool, Error> {
        self.check_parallel(g, "disjointness")?;
        Ok(self
            .graph
            .iter()
            .zip(g.graph.iter())
            .all(|(a, b)| a.is_none() || b.is_none()))
    }

    // ------------------------------------------------------------------
    // Classical primitives, computed pointwise on graphs. These are the
    // model-level operations that the categorical constructions elsewhere
    // are checked against.
    // ------------------------------------------------------------------

    /// Binary join of compatible maps: the union of the graphs.
    pub fn join(&self, g: &PartialMap) -> Result<PartialMap, Error> {
        PartialMap::join_family(&[self.clone(), g.clone()], &self.dom, &self.cod)
    }

    /// Join of a pairwise-compatible family; the empty family yields the
    /// zero map at the stated type. Reports the first offending pair in
    /// enumeration order when the family is not pairwise compatible.
    pub fn join_family(fs: &[PartialMap], dom: &FinSet, cod: &FinSet) -> Result<PartialMap, Error> {
        for f in fs {
            if f.dom != *dom || f.cod != *cod {
                return Err(Error::mismatch(
                    "join",
                    format!("{dom} -> {cod}"),
                    format!("{} -> {}", f.dom, f.cod),
                ));
            }
        }
        for i in 0..fs.len() {
            for j in (i + 1)..fs.len() {
                if !fs[i].compatible(&fs[j])? {
                    return Err(Error::Incompatible(i, j));
                }
            }
        }
        let mut graph = vec![None; dom.size()];
        for f in fs {
            for (i, v) in f.graph.iter().enumerate() {
                if v.is_some() {
                    graph[i] = *v;
                }
            }
        }
        Ok(PartialMap {
            dom: dom.clone(),
            cod: cod.clone(),
            graph,
        })
    }

    /// Relative complement `self \ f`, for `f <= self`: the part of `self`
    /// defined exactly where `f` is not.
    pub fn relative_complement(&self, f: &PartialMap) -> Result<PartialMap, Error> {
        self.check_parallel(f, "relative complement")?;
        if !f.leq(self)? {
            return Err(Error::NotBelow);
        }
        Ok(PartialMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            graph: self
                .graph
                .iter()
                .zip(f.graph.iter())
                .map(|(g, f)| if f.is_some() { None } else { *g })
                .collect(),
        })
    }

    /// Complement of a restriction idempotent: the partial identity on the
    /// complementary subset.
    pub fn complement(&self) -> Result<PartialMap, Error> {
        if !self.is_restriction_idempotent() {
            return Err(Error::NotIdempotent);
        }
        Ok(PartialMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            graph: self
                .graph
                .iter()
                .enumerate()
                .map(|(i, v)| if v.is_some() { None } else { Some(i as u32) })
                .collect(),
        })
    }

    /// The decision of a map into a coproduct: tags each point of the domain
    /// with the summand its value lands in.
    pub fn decision(&self) -> Result<PartialMap, Error> {
        let parts = self
            .cod
            .summands()
            .ok_or(Error::NotCoproductCodomain)?
            .to_vec();
        let n = self.dom.size();
        let copies: Vec<FinSet> = (0..parts.len()).map(|_| self.dom.clone()).collect();
        let cod = FinSet::coprod(&copies);
        let graph = self
            .graph
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.map(|j| {
                    let (summand, _) = self.cod.coprod_locate(j as usize).expect("coproduct");
                    (summand * n + i) as u32
                })
            })
            .collect();
        Ok(PartialMap {
            dom: self.dom.clone(),
            cod,
            graph,
        })
    }

    /// Split a restriction idempotent through the canonical subset where it
    /// is defined: returns `(mid, r, s)` with `r s = e` and `s r = 1`.
    pub fn split(&self) -> Result<(FinSet, PartialMap, PartialMap), Error> {
        if !self.is_restriction_idempotent() {
            return Err(Error::NotIdempotent);
        }
        let kept: Vec<u32> = self
            .graph
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|_| i as u32))
            .collect();
        let mid = self.dom.subset(&kept)?;
        let mut retraction = vec![None; self.dom.size()];
        for (pos, &i) in kept.iter().enumerate() {
            retraction[i as usize] = Some(pos as u32);
        }
        let section = kept.iter().map(|&i| Some(i)).collect();
        Ok((
            mid.clone(),
            PartialMap {
                dom: self.dom.clone(),
                cod: mid.clone(),
                graph: retraction,
            },
            PartialMap {
                dom: mid,
                cod: self.dom.clone(),
                graph: section,
            },
        ))
    }

    /// Render as a declaration in the model text format.
    pub fn printed(&self, name: &str) -> String {
        let entries: Vec<String> = self
            .graph
            .iter()
            .enumerate()
            .filter_map(|(i, v)| {
                v.map(|j| {
                    format!(
                        "{} -> {}",
                        self.dom.elements()[i],
                        self.cod.elements()[j as usize]
                    )
                })
            })
            .collect();
        format!(
            "map {} : {} -> {} {{ {} }}",
            name,
            self.dom.name(),
            self.cod.name(),
            entries.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (FinSet, FinSet) {
        (
            FinSet::atom("X", &["x0", "x1"]).unwrap(),
            FinSet::atom("Y", &["y0"]).unwrap(),
        )
    }

    fn pm(dom: &FinSet, cod: &FinSet, pairs: &[(&str, &str)]) -> PartialMap {
        let pairs: Vec<(Elem, Elem)> = pairs
            .iter()
            .map(|(a, b)| (Elem::label(a), Elem::label(b)))
            .collect();
        PartialMap::from_pairs(dom.clone(), cod.clone(), &pairs).unwrap()
    }

    #[test]
    fn restriction_is_partial_identity_on_domain() {
        let (x, y) = xy();
        let f = pm(&x, &y, &[("x0", "y0")]);
        let fbar = f.restriction();
        assert_eq!(fbar, pm(&x, &x, &[("x0", "x0")]));
        assert_eq!(PartialMap::identity(&x).restriction(), PartialMap::identity(&x));
        assert_eq!(PartialMap::zero(&x, &y).restriction(), PartialMap::zero(&x, &x));
    }

    #[test]
    fn composition_absorbs_undefinedness() {
        let (x, y) = xy();
        let z = FinSet::atom("Z", &["z0"]).unwrap();
        let f = pm(&x, &y, &[("x0", "y0")]);
        let g = pm(&y, &z, &[("y0", "z0")]);
        assert_eq!(f.compose(&g).unwrap(), pm(&x, &z, &[("x0", "z0")]));
        let g0 = PartialMap::zero(&y, &z);
        assert_eq!(f.compose(&g0).unwrap(), PartialMap::zero(&x, &z));
        let h = pm(&x, &y, &[("x0", "y0"), ("x1", "y0")]);
        let k = pm(&y, &z, &[("y0", "z0")]);
        assert_eq!(
            h.compose(&k).unwrap(),
            pm(&x, &z, &[("x0", "z0"), ("x1", "z0")])
        );
        assert!(g.compose(&f).is_err());
    }

    #[test]
    fn pairing_needs_both_legs() {
        let (x, _) = xy();
        let a = FinSet::atom("A", &["a"]).unwrap();
        let b = FinSet::atom("B", &["b"]).unwrap();
        let f = pm(&x, &a, &[("x0", "a")]);
        let g = pm(&x, &b, &[("x0", "b")]);
        let p = f.pair(&g).unwrap();
        assert_eq!(p.defined_count(), 1);
        assert_eq!(
            p.apply(&Elem::label("x0")).unwrap().to_string(),
            "(a,b)"
        );
        let none = f.pair(&PartialMap::zero(&x, &b)).unwrap();
        assert_eq!(none.defined_count(), 0);
    }

    #[test]
    fn pair_of_projections_is_identity() {
        let (x, y) = xy();
        let p0 = PartialMap::proj(&x, &y, 0).unwrap();
        let p1 = PartialMap::proj(&x, &y, 1).unwrap();
        assert_eq!(p0.pair(&p1).unwrap(), PartialMap::identity(&x.prod(&y)));
    }

    #[test]
    fn copair_and_quasi_projections() {
        let (x, y) = xy();
        let parts = [x.clone(), y.clone()];
        let i0 = PartialMap::inj(&parts, 0).unwrap();
        let i1 = PartialMap::inj(&parts, 1).unwrap();
        let q0 = PartialMap::qproj(&parts, 0).unwrap();
        // copairing restricted to a summand acts as that component
        assert_eq!(i0.compose(&q0).unwrap(), PartialMap::identity(&x));
        assert_eq!(i1.compose(&q0).unwrap(), PartialMap::zero(&y, &x));
        // the eta law for coproducts
        let both = PartialMap::copair(&[i0.clone(), i1.clone()]).unwrap();
        assert_eq!(both, PartialMap::identity(&FinSet::coprod(&parts)));
        // restriction of the quasi-projection is the partial identity on X
        let q0bar = q0.restriction();
        let expect = PartialMap::copair(&[
            PartialMap::identity(&x).compose(&i0).unwrap(),
            PartialMap::zero(&y, &FinSet::coprod(&parts)),
        ])
        .unwrap();
        assert_eq!(q0bar, expect);
    }

    #[test]
    fn structural_maps() {
        let (x, y) = xy();
        let t = PartialMap::terminal(&x);
        assert!(t.is_total());
        assert_eq!(t.cod().size(), 1);
        let z = PartialMap::zero(&x, &y);
        assert_eq!(z.restriction(), PartialMap::zero(&x, &x));
        let (d, dinv) = PartialMap::dist(&x, &y, &y);
        assert!(d.is_total() && dinv.is_total());
        assert_eq!(d.compose(&dinv).unwrap(), PartialMap::identity(d.dom()));
        assert_eq!(dinv.compose(&d).unwrap(), PartialMap::identity(d.cod()));
    }

    #[test]
    fn order_relations_pointwise() {
        let (x, y) = xy();
        let f = pm(&x, &y, &[("x0", "y0")]);
        let g = pm(&x, &y, &[("x0", "y0"), ("x1", "y0")]);
        let h = pm(&x, &y, &[("x1", "y0")]);
        assert!(f.leq(&g).unwrap());
        assert!(!g.leq(&f).unwrap());
        assert!(f.leq(&f).unwrap());
        assert!(f.compatible(&h).unwrap());
        assert!(f.disjoint(&h).unwrap());
        assert!(!f.disjoint(&f).unwrap());
        assert!(PartialMap::zero(&x, &y).disjoint(&g).unwrap());
    }

    #[test]
    fn join_and_relative_complement_pointwise() {
        let (x, y) = xy();
        let f = pm(&x, &y, &[("x0", "y0")]);
        let h = pm(&x, &y, &[("x1", "y0")]);
        let g = pm(&x, &y, &[("x0", "y0"), ("x1", "y0")]);
        assert_eq!(f.join(&h).unwrap(), g);
        assert_eq!(f.join(&PartialMap::zero(&x, &y)).unwrap(), f);
        assert_eq!(
            PartialMap::join_family(&[], &x, &y).unwrap(),
            PartialMap::zero(&x, &y)
        );
        assert_eq!(g.relative_complement(&f).unwrap(), h);
        assert_eq!(
            g.relative_complement(&g).unwrap(),
            PartialMap::zero(&x, &y)
        );
        assert_eq!(
            g.relative_complement(&PartialMap::zero(&x, &y)).unwrap(),
            g
        );
        // y0 != y1 style disagreement is incompatible
        let k = pm(&x, &x, &[("x0", "x1")]);
        let l = pm(&x, &x, &[("x0", "x0")]);
        assert_eq!(k.join(&l), Err(Error::Incompatible(0, 1)));
        assert_eq!(g.relative_complement(&h.join(&f).unwrap()).unwrap().defined_count(), 0);
        assert_eq!(f.relative_complement(&g), Err(Error::NotBelow));
    }

    #[test]
    fn complement_of_idempotent() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let e0 = pm(&x, &x, &[("x0", "x0")]);
        let e1 = pm(&x, &x, &[("x1", "x1")]);
        assert_eq!(e0.complement().unwrap(), e1);
        assert_eq!(
            PartialMap::identity(&x).complement().unwrap(),
            PartialMap::zero(&x, &x)
        );
        assert_eq!(
            PartialMap::zero(&x, &x).complement().unwrap(),
            PartialMap::identity(&x)
        );
        assert_eq!(e0.complement().unwrap().complement().unwrap(), e0);
        let f = pm(&x, &x, &[("x0", "x1")]);
        assert_eq!(f.complement(), Err(Error::NotIdempotent));
    }

    #[test]
    fn decision_tags_summands() {
        let x = FinSet::atom("X", &["x0", "x1", "x2"]).unwrap();
        let (b0, b1) = (
            FinSet::atom("B0", &["u"]).unwrap(),
            FinSet::atom("B1", &["w"]).unwrap(),
        );
        let cod = FinSet::coprod(&[b0.clone(), b1.clone()]);
        let f = PartialMap::from_pairs(
            x.clone(),
            cod,
            &[
                (Elem::label("x0"), Elem::tagged(0, Elem::label("u"))),
                (Elem::label("x1"), Elem::tagged(1, Elem::label("w"))),
            ],
        )
        .unwrap();
        let d = f.decision().unwrap();
        assert_eq!(
            d.apply(&Elem::label("x0")).unwrap(),
            &Elem::tagged(0, Elem::label("x0"))
        );
        assert_eq!(
            d.apply(&Elem::label("x1")).unwrap(),
            &Elem::tagged(1, Elem::label("x1"))
        );
        assert_eq!(d.apply(&Elem::label("x2")), None);
        assert!(PartialMap::identity(&x).decision().is_err());
    }

    #[test]
    fn splitting_idempotents() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let e = pm(&x, &x, &[("x0", "x0")]);
        let (mid, r, s) = e.split().unwrap();
        assert_eq!(mid.size(), 1);
        assert_eq!(r.compose(&s).unwrap(), e);
        assert_eq!(s.compose(&r).unwrap(), PartialMap::identity(&mid));
        let (mid_id, _, _) = PartialMap::identity(&x).split().unwrap();
        assert_eq!(mid_id.size(), x.size());
        let (mid_zero, _, _) = PartialMap::zero(&x, &x).split().unwrap();
        assert_eq!(mid_zero.size(), 0);
    }
}
