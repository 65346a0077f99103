//! Negative-control fixtures: models with one operation deliberately
//! broken, each flipping exactly one law of its targeted suite. They keep
//! the law suites honest — a suite that cannot see these defects would not
//! be testing anything.

use crate::error::Error;
use crate::finpar::{FinParModel, FinSet, PartialMap};
use crate::rescat::Model;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Restriction returns the nowhere-defined map. Flips `R1` in the
    /// `restriction` suite and nothing else there: the other three axioms
    /// collapse to `0 = 0`.
    RestrictionZero,
    /// Composition of two non-identity maps is post-composed with a cyclic
    /// shift of the codomain. Identities stay strict, so within the
    /// `category` suite only associativity flips.
    ComposeTwist,
    /// Decisions always tag the first summand. `dec-d1` still holds (the
    /// tag folds away) and at most one map satisfies both axioms, so within
    /// the `decisions` suite only `dec-d2` flips.
    DecisionFirstSummand,
}

impl Mutation {
    pub fn name(&self) -> &'static str {
        match self {
            Mutation::RestrictionZero => "restriction-zero",
            Mutation::ComposeTwist => "compose-twist",
            Mutation::DecisionFirstSummand => "decision-first-summand",
        }
    }

    pub fn from_name(name: &str) -> Option<Mutation> {
        match name {
            "restriction-zero" => Some(Mutation::RestrictionZero),
            "compose-twist" => Some(Mutation::ComposeTwist),
            "decision-first-summand" => Some(Mutation::DecisionFirstSummand),
            _ => None,
        }
    }

    pub fn all() -> [Mutation; 3] {
        [
            Mutation::RestrictionZero,
            Mutation::ComposeTwist,
            Mutation::DecisionFirstSummand,
        ]
    }

    /// The suite the fixture is aimed at.
    pub fn targeted_suite(&self) -> &'static str {
        match self {
            Mutation::RestrictionZero => "restriction",
            Mutation::ComposeTwist => "category",
            Mutation::DecisionFirstSummand => "decisions",
        }
    }

    /// The single law expected to fail within the targeted suite.
    pub fn targeted_law(&self) -> &'static str {
        match self {
            Mutation::RestrictionZero => "R1",
            Mutation::ComposeTwist => "associativity",
            Mutation::DecisionFirstSummand => "dec-d2",
        }
    }
}

/// A partial-function model with one operation replaced by its mutation.
#[derive(Clone, Debug)]
pub struct MutatedModel {
    pub inner: FinParModel,
    pub mutation: Mutation,
}

impl MutatedModel {
    pub fn new(inner: FinParModel, mutation: Mutation) -> MutatedModel {
        MutatedModel { inner, mutation }
    }
}

fn cyclic_shift(a: &FinSet) -> PartialMap {
    let n = a.size() as u32;
    let graph = (0..n).map(|i| Some((i + 1) % n.max(1))).collect();
    PartialMap::new(a.clone(), a.clone(), graph).expect("permutation")
}

impl Model for MutatedModel {
    type Obj = FinSet;
    type Map = PartialMap;

    fn model_name(&self) -> String {
        format!("finpar+{}", self.mutation.name())
    }

    fn objects(&self) -> Vec<FinSet> {
        self.inner.objects()
    }

    fn obj_size(&self, a: &FinSet) -> usize {
        a.size()
    }

    fn hom_size(&self, a: &FinSet, b: &FinSet) -> u128 {
        self.inner.hom_size(a, b)
    }

    fn hom_nth(&self, a: &FinSet, b: &FinSet, n: u128) -> PartialMap {
        self.inner.hom_nth(a, b, n)
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
        let plain = f.compose(g)?;
        if self.mutation == Mutation::ComposeTwist
            && *f != PartialMap::identity(f.dom())
            && *g != PartialMap::identity(g.dom())
        {
            return plain.compose(&cyclic_shift(g.cod()));
        }
        Ok(plain)
    }

    fn restriction(&self, f: &PartialMap) -> PartialMap {
        if self.mutation == Mutation::RestrictionZero {
            return PartialMap::zero(f.dom(), f.dom());
        }
        f.restriction()
    }

    fn terminal(&self) -> Option<FinSet> {
        self.inner.terminal()
    }

    fn bang(&self, a: &FinSet) -> Option<PartialMap> {
        self.inner.bang(a)
    }

    fn initial(&self) -> Option<FinSet> {
        self.inner.initial()
    }

    fn from_initial(&self, a: &FinSet) -> Option<PartialMap> {
        self.inner.from_initial(a)
    }

    fn zero(&self, a: &FinSet, b: &FinSet) -> Option<PartialMap> {
        self.inner.zero(a, b)
    }

    fn product(&self, a: &FinSet, b: &FinSet) -> Option<FinSet> {
        self.inner.product(a, b)
    }

    fn projection(&self, a: &FinSet, b: &FinSet, i: usize) -> Option<PartialMap> {
        self.inner.projection(a, b, i)
    }

    fn pair(&self, f: &PartialMap, g: &PartialMap) -> Result<PartialMap, Error> {
        self.inner.pair(f, g)
    }

    fn coproduct(&self, parts: &[FinSet]) -> Option<FinSet> {
        self.inner.coproduct(parts)
    }

    fn injection(&self, parts: &[FinSet], j: usize) -> Option<PartialMap> {
        self.inner.injection(parts, j)
    }

    fn copair(&self, fs: &[PartialMap]) -> Result<PartialMap, Error> {
        self.inner.copair(fs)
    }

    fn distributivity(&self, a: &FinSet, b: &FinSet, c: &FinSet) -> Option<(PartialMap, PartialMap)> {
        self.inner.distributivity(a, b, c)
    }

    fn coproduct_parts(&self, o: &FinSet) -> Option<Vec<FinSet>> {
        self.inner.coproduct_parts(o)
    }

    fn has_joins(&self) -> bool {
        true
    }

    fn join(&self, fs: &[PartialMap], a: &FinSet, b: &FinSet) -> Result<PartialMap, Error> {
        self.inner.join(fs, a, b)
    }

    fn has_relative_complements(&self) -> bool {
        true
    }

    fn relative_complement(&self, g: &PartialMap, f: &PartialMap) -> Result<PartialMap, Error> {
        self.inner.relative_complement(g, f)
    }

    fn has_decisions(&self) -> bool {
        true
    }

    fn decision(&self, f: &PartialMap) -> Result<PartialMap, Error> {
        let plain = f.decision()?;
        if self.mutation == Mutation::DecisionFirstSummand {
            let parts = f.cod().summands().ok_or(Error::NotCoproductCodomain)?;
            let copies: Vec<FinSet> = (0..parts.len()).map(|_| f.dom().clone()).collect();
            let inj0 = PartialMap::inj(&copies, 0)?;
            return f.restriction().compose(&inj0);
        }
        Ok(plain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rescat::laws;
    use crate::rescat::{all_passed, Budget, LawStatus};

    fn closed_demo() -> FinParModel {
        let atoms = FinParModel::demo().atoms().to_vec();
        FinParModel::closed(atoms, 1, 2, 16)
    }

    fn reports_for(mutation: Mutation) -> Vec<crate::rescat::LawReport> {
        let m = MutatedModel::new(closed_demo(), mutation);
        let budget = Budget {
            max_size: 2,
            max_tuples: 20_000,
            ..Budget::default()
        };
        match mutation.targeted_suite() {
            "restriction" => laws::restriction_suite(&m, &budget),
            "category" => laws::category_suite(&m, &budget),
            "decisions" => crate::classical::decisions_suite(&m, &budget),
            _ => unreachable!(),
        }
    }

    #[test]
    fn each_mutation_flips_exactly_its_targeted_law() {
        for mutation in Mutation::all() {
            let reports = reports_for(mutation);
            for r in &reports {
                let expect_fail = r.law == mutation.targeted_law();
                assert_eq!(
                    r.status == LawStatus::Fail,
                    expect_fail,
                    "{} under {}: {:?}",
                    r.law,
                    mutation.name(),
                    r.counterexample
                );
            }
            assert!(reports.iter().any(|r| r.status == LawStatus::Fail));
        }
    }

    #[test]
    fn unmutated_suites_pass() {
        let m = closed_demo();
        let budget = Budget {
            max_size: 2,
            max_tuples: 20_000,
            ..Budget::default()
        };
        assert!(all_passed(&laws::restriction_suite(&m, &budget)));
        assert!(all_passed(&laws::category_suite(&m, &budget)));
        assert!(all_passed(&crate::classical::decisions_suite(&m, &budget)));
    }
}
