//! Suite selection and the top-level runners used by the command line.

use crate::calg::{self, CalgModel};
use crate::classical;
use crate::finpar::FinParModel;
use crate::kleisli;
use crate::mutation::{Mutation, MutatedModel};
use crate::rescat::{laws, sort_reports, Budget, LawReport, Model};
use crate::splitting;

/// Which families of laws to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    Axioms,
    Classical,
    Splitting,
    Kleisli,
    Thm2,
    All,
}

impl Selection {
    pub fn from_name(name: &str) -> Option<Selection> {
        match name {
            "axioms" => Some(Selection::Axioms),
            "classical" => Some(Selection::Classical),
            "splitting" => Some(Selection::Splitting),
            "kleisli" => Some(Selection::Kleisli),
            "thm2" => Some(Selection::Thm2),
            "all" => Some(Selection::All),
            _ => None,
        }
    }

    pub fn names() -> &'static [&'static str] {
        &["axioms", "classical", "kleisli", "splitting", "thm2", "all"]
    }
}

/// The four-way equivalence, instantiated on a partial-function model: the
/// model is classical (joins and relative complements), has the product
/// `A + B + (A * B)`, is classically classified, and is isomorphic to the
/// Kleisli category over its totals. Each leg reuses the suite that checks
/// it and relabels the reports.
pub fn thm2_suite(m: &FinParModel, b: &Budget) -> Vec<LawReport> {
    let mut reports = Vec::new();
    let mut tag = |mut rs: Vec<LawReport>, leg: &str| {
        for r in &mut rs {
            r.suite = format!("thm2:{leg}:{}", r.suite);
        }
        reports.append(&mut rs);
    };
    tag(classical::joins_suite(m, b), "classical");
    tag(classical::relative_complement_suite(m, b), "classical");
    tag(classical::classical_products_suite(m, b), "classical-products");
    let kleisli_reports = kleisli::kleisli_suite(m, b);
    let (classifier, rest): (Vec<LawReport>, Vec<LawReport>) = kleisli_reports
        .into_iter()
        .partition(|r| r.law.starts_with("classify"));
    tag(classifier, "classified");
    let iso: Vec<LawReport> = rest
        .into_iter()
        .filter(|r| {
            r.law.starts_with("roundtrip")
                || r.law.starts_with("functor")
                || r.law == "rest-preserved"
        })
        .collect();
    tag(iso, "kleisli-iso");
    reports
}

/// Run the selected suites over a partial-function model.
pub fn run_finpar(m: &FinParModel, selection: Selection, b: &Budget) -> Vec<LawReport> {
    let mut reports = Vec::new();
    match selection {
        Selection::Axioms => {
            reports.extend(laws::axioms_and_structure(m, b));
        }
        Selection::Classical => {
            reports.extend(classical::classical_suites(m, b));
        }
        Selection::Splitting => {
            reports.extend(splitting::splitting_suite(m, b));
            reports.extend(splitting::finpar_splitting_suite(m, b));
        }
        Selection::Kleisli => {
            reports.extend(kleisli::monad_suite(m, b));
            reports.extend(kleisli::kleisli_suite(m, b));
            reports.extend(kleisli::kleisli_rescat_suite(m, b));
        }
        Selection::Thm2 => {
            reports.extend(thm2_suite(m, b));
        }
        Selection::All => {
            reports.extend(laws::axioms_and_structure(m, b));
            reports.extend(classical::classical_suites(m, b));
            reports.extend(splitting::splitting_suite(m, b));
            reports.extend(splitting::finpar_splitting_suite(m, b));
            reports.extend(kleisli::monad_suite(m, b));
            reports.extend(kleisli::kleisli_suite(m, b));
            reports.extend(kleisli::kleisli_rescat_suite(m, b));
            reports.extend(thm2_suite(m, b));
            reports.extend(calg::duality_suite(m, b));
        }
    }
    sort_reports(&mut reports);
    reports
}

/// Run the selected suites over the mutated fixture of a model.
pub fn run_mutated(m: &FinParModel, mutation: Mutation, selection: Selection, b: &Budget) -> Vec<LawReport> {
    let mm = MutatedModel::new(m.clone(), mutation);
    let mut reports = Vec::new();
    match selection {
        Selection::Axioms => reports.extend(laws::axioms_and_structure(&mm, b)),
        Selection::Classical => reports.extend(classical::classical_suites(&mm, b)),
        Selection::Splitting => reports.extend(splitting::splitting_suite(&mm, b)),
        _ => {
            reports.extend(laws::axioms_and_structure(&mm, b));
            reports.extend(classical::classical_suites(&mm, b));
        }
    }
    for r in &mut reports {
        r.suite = format!("{}:{}", mm.model_name(), r.suite);
    }
    sort_reports(&mut reports);
    reports
}

/// Run the ring-model suites: the full generic stack plus the closed-form
/// formula laws.
pub fn run_calg(max_rank: u8, selection: Selection, b: &Budget) -> Vec<LawReport> {
    let cm = CalgModel::new(max_rank);
    let mut reports = Vec::new();
    match selection {
        Selection::Axioms => reports.extend(laws::axioms_and_structure(&cm, b)),
        Selection::Classical => reports.extend(classical::classical_suites(&cm, b)),
        Selection::Splitting => reports.extend(splitting::splitting_suite(&cm, b)),
        _ => {
            reports.extend(laws::axioms_and_structure(&cm, b));
            reports.extend(classical::classical_suites(&cm, b));
            reports.extend(splitting::splitting_suite(&cm, b));
            reports.extend(calg::calg_formula_suite(&cm, b));
        }
    }
    for r in &mut reports {
        r.suite = format!("calg:{}", r.suite);
    }
    sort_reports(&mut reports);
    reports
}
