//! The finite partial-function model and its object universe.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::rescat::Model;

use super::map::PartialMap;
use super::object::FinSet;

/// The category of finite sets and partial functions at desk scale: a fixed
/// finite universe of objects, closed (up to a budget) under products,
/// coproducts and the `A + B + (A * B)` construction, with every structural
/// witness and the pointwise classical primitives.
#[derive(Clone, Debug)]
pub struct FinParModel {
    atoms: Vec<FinSet>,
    universe: Vec<FinSet>,
    named: BTreeMap<String, PartialMap>,
}

impl FinParModel {
    /// A model whose universe is just the atoms plus `one` and `zero`.
    pub fn new(atoms: Vec<FinSet>) -> FinParModel {
        let mut universe = vec![];
        let mut m = FinParModel {
            atoms: atoms.clone(),
            universe: vec![],
            named: BTreeMap::new(),
        };
        for a in atoms {
            push_unique(&mut universe, a);
        }
        push_unique(&mut universe, FinSet::one());
        push_unique(&mut universe, FinSet::zero());
        m.universe = universe;
        m
    }

    /// Close the universe under `*`, `+` and `amp` for `depth` rounds,
    /// keeping objects with at most `max_size` elements, up to `max_objects`
    /// objects in total. Within a round, candidates are added largest first
    /// so degenerate empty objects do not crowd out the interesting ones.
    pub fn closed(atoms: Vec<FinSet>, depth: usize, max_size: usize, max_objects: usize) -> FinParModel {
        let mut m = FinParModel::new(atoms);
        for _ in 0..depth {
            let current = m.universe.clone();
            let mut batch: Vec<FinSet> = Vec::new();
            for a in &current {
                for b in &current {
                    for cand in [a.prod(b), FinSet::coprod(&[a.clone(), b.clone()]), a.amp(b)] {
                        if cand.size() <= max_size
                            && !m.universe.contains(&cand)
                            && !batch.contains(&cand)
                        {
                            batch.push(cand);
                        }
                    }
                }
            }
            batch.sort_by(|x, y| y.size().cmp(&x.size()).then(x.name().cmp(y.name())));
            for cand in batch {
                if m.universe.len() >= max_objects {
                    break;
                }
                m.universe.push(cand);
            }
            if m.universe.len() >= max_objects {
                break;
            }
        }
        m
    }

    /// The built-in demonstration model: two atoms and a few named maps.
    pub fn demo() -> FinParModel {
        let x = FinSet::atom("X", &["x0", "x1"]).expect("atom");
        let y = FinSet::atom("Y", &["y0"]).expect("atom");
        let mut m = FinParModel::new(vec![x.clone(), y.clone()]);
        let f = PartialMap::new(x.clone(), y.clone(), vec![Some(0), None]).expect("map");
        let g = PartialMap::new(x.clone(), x.clone(), vec![Some(1), Some(0)]).expect("map");
        let e = PartialMap::new(x.clone(), x.clone(), vec![Some(0), None]).expect("map");
        let h = PartialMap::new(y.clone(), x.clone(), vec![Some(0)]).expect("map");
        let k = PartialMap::new(x.clone(), y.clone(), vec![None, Some(0)]).expect("map");
        m.insert_map("f", f);
        m.insert_map("g", g);
        m.insert_map("e", e);
        m.insert_map("h", h);
        m.insert_map("k", k);
        m
    }

    /// Replace the object universe wholesale (used by focused checks).
    pub fn with_universe(mut self, universe: Vec<FinSet>) -> FinParModel {
        self.universe = universe;
        self
    }

    pub fn atoms(&self) -> &[FinSet] {
        &self.atoms
    }

    pub fn universe(&self) -> &[FinSet] {
        &self.universe
    }

    pub fn insert_map(&mut self, name: &str, map: PartialMap) {
        self.named.insert(name.to_string(), map);
    }

    pub fn named_maps(&self) -> &BTreeMap<String, PartialMap> {
        &self.named
    }

    pub fn lookup_map(&self, name: &str) -> Option<&PartialMap> {
        self.named.get(name)
    }

    pub fn lookup_object(&self, name: &str) -> Option<&FinSet> {
        self.universe.iter().find(|o| o.name() == name)
    }
}

fn push_unique(universe: &mut Vec<FinSet>, o: FinSet) {
    if !universe.contains(&o) {
        universe.push(o);
    }
}

impl Model for FinParModel {
    type Obj = FinSet;
    type Map = PartialMap;

    fn model_name(&self) -> String {
        "finpar".to_string()
    }

    fn objects(&self) -> Vec<FinSet> {
        self.universe.clone()
    }

    fn obj_size(&self, a: &FinSet) -> usize {
        a.size()
    }

    fn hom_size(&self, a: &FinSet, b: &FinSet) -> u128 {
        ((b.size() + 1) as u128).pow(a.size() as u32)
    }

    /// Maps are enumerated as mixed-radix counters over the domain elements
    /// in element order; digit 0 is "undefined".
    fn hom_nth(&self, a: &FinSet, b: &FinSet, n: u128) -> PartialMap {
        let base = (b.size() + 1) as u128;
        let mut k = n;
        let mut graph = Vec::with_capacity(a.size());
        for _ in 0..a.size() {
            let digit = (k % base) as u32;
            k /= base;
            graph.push(if digit == 0 { None } else { Some(digit - 1) });
        }
        PartialMap::new(a.clone(), b.clone(), graph).expect("enumerated graph")
    }

    fn dom(&self, f: &PartialMap) -> FinSet {
        f.dom().clone()
    }

    fn cod(&self, f: &PartialMap) -> FinSet {
        f.cod().clone()
    }

    fn identity(&self, a: &FinSet) -> PartialMap {
        PartialMap::identity(a)
    }

    fn compose(&self, f: &PartialMap, g: &PartialMap) -> Result<PartialMap, Error> {
        f.compose(g)
    }

    fn restriction(&self, f: &PartialMap) -> PartialMap {
        f.restriction()
    }

    fn terminal(&self) -> Option<FinSet> {
        Some(FinSet::one())
    }

    fn bang(&self, a: &FinSet) -> Option<PartialMap> {
        Some(PartialMap::terminal(a))
    }

    fn initial(&self) -> Option<FinSet> {
        Some(FinSet::zero())
    }

    fn from_initial(&self, a: &FinSet) -> Option<PartialMap> {
        Some(PartialMap::from_initial(a))
    }

    fn zero(&self, a: &FinSet, b: &FinSet) -> Option<PartialMap> {
        Some(PartialMap::zero(a, b))
    }

    fn product(&self, a: &FinSet, b: &FinSet) -> Option<FinSet> {
        Some(a.prod(b))
    }

    fn projection(&self, a: &FinSet, b: &FinSet, i: usize) -> Option<PartialMap> {
        PartialMap::proj(a, b, i).ok()
    }

    fn pair(&self, f: &PartialMap, g: &PartialMap) -> Result<PartialMap, Error> {
        f.pair(g)
    }

    fn coproduct(&self, parts: &[FinSet]) -> Option<FinSet> {
        Some(FinSet::coprod(parts))
    }

    fn injection(&self, parts: &[FinSet], j: usize) -> Option<PartialMap> {
        PartialMap::inj(parts, j).ok()
    }

    fn copair(&self, fs: &[PartialMap]) -> Result<PartialMap, Error> {
        PartialMap::copair(fs)
    }

    fn distributivity(&self, a: &FinSet, b: &FinSet, c: &FinSet) -> Option<(PartialMap, PartialMap)> {
        Some(PartialMap::dist(a, b, c))
    }

    fn coproduct_parts(&self, o: &FinSet) -> Option<Vec<FinSet>> {
        o.summands().map(|parts| parts.to_vec())
    }

    fn has_joins(&self) -> bool {
        true
    }

    fn has_relative_complements(&self) -> bool {
        true
    }

    fn has_decisions(&self) -> bool {
        true
    }

    fn join(&self, fs: &[PartialMap], a: &FinSet, b: &FinSet) -> Result<PartialMap, Error> {
        PartialMap::join_family(fs, a, b)
    }

    fn relative_complement(&self, g: &PartialMap, f: &PartialMap) -> Result<PartialMap, Error> {
        g.relative_complement(f)
    }

    fn decision(&self, f: &PartialMap) -> Result<PartialMap, Error> {
        f.decision()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_enumeration_is_exhaustive_and_deterministic() {
        let m = FinParModel::demo();
        let x = m.lookup_object("X").unwrap().clone();
        let y = m.lookup_object("Y").unwrap().clone();
        assert_eq!(m.hom_size(&x, &y), 4); // (1+1)^2
        let all = m.hom(&x, &y);
        assert_eq!(all.len(), 4);
        for i in 0..all.len() {
            for j in 0..all.len() {
                assert_eq!(i == j, all[i] == all[j]);
            }
        }
        assert_eq!(all[0], PartialMap::zero(&x, &y));
    }

    #[test]
    fn closure_respects_size_and_object_caps() {
        let x = FinSet::atom("X", &["x0", "x1"]).unwrap();
        let y = FinSet::atom("Y", &["y0"]).unwrap();
        let m = FinParModel::closed(vec![x.clone(), y.clone()], 2, 3, 48);
        assert!(m.universe().len() <= 48);
        assert!(m.universe().iter().all(|o| o.size() <= 3));
        assert!(m.universe().contains(&x.prod(&y)));
        assert!(m.universe().contains(&y.amp(&y)));
    }

    #[test]
    fn empty_universe_is_fine() {
        let m = FinParModel::new(vec![]);
        assert_eq!(m.universe().len(), 2); // one and zero
    }
}
