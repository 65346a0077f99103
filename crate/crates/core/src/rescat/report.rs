//! Budgets, law reports and counterexamples.

use serde::Serialize;

/// Default seed for the deterministic samplers.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Bounds for the enumeration performed by law suites and universal-property
/// checks.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Objects with more elements than this are not quantified over.
    pub max_size: usize,
    /// A hom-set larger than this is never materialized in full.
    pub max_hom: u128,
    /// Per-law cap on exhaustively enumerated tuples; beyond it the law is
    /// checked on a seeded pseudo-random sample.
    pub max_tuples: u128,
    /// Number of sampled tuples when a law exceeds `max_tuples`.
    pub samples: u64,
    /// Outer sample count for laws that carry an inner hom enumeration
    /// (uniqueness checks).
    pub unique_samples: u64,
    /// Uniqueness enumerations above this hom-set size are skipped, never
    /// silently passed.
    pub uniqueness_cap: u128,
    /// Seed recorded in every report; per-law streams derive from it.
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_size: 3,
            max_hom: 4096,
            max_tuples: 200_000,
            samples: 20_000,
            unique_samples: 400,
            uniqueness_cap: 4096,
            seed: DEFAULT_SEED,
        }
    }
}

impl Budget {
    pub fn with_max_size(mut self, max_size: usize) -> Self {
        self.max_size = max_size;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    Skipped,
}

/// A falsifying instance: the witnesses involved (rendered in the model text
/// format) and the two sides that failed to agree.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub site: String,
    pub witnesses: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn render(&self) -> String {
        format!(
            "at {}: {}; lhs = {}; rhs = {}",
            self.site,
            self.witnesses.join("; "),
            self.lhs,
            self.rhs
        )
    }
}

/// Outcome of one law over one model.
#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub suite: String,
    pub law: String,
    pub status: LawStatus,
    /// Tuples on which the law body actually ran.
    pub checked: u64,
    /// Tuples dismissed because a precondition did not hold.
    pub vacuous: u64,
    /// Whether the tuple space was sampled rather than enumerated in full.
    pub sampled: bool,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.status != LawStatus::Fail
    }
}

/// True when no report in the slice failed.
pub fn all_passed(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::passed)
}

/// Deterministic merge order for reports produced by independent workers.
pub fn sort_reports(reports: &mut [LawReport]) {
    reports.sort_by(|a, b| (a.suite.as_str(), a.law.as_str()).cmp(&(b.suite.as_str(), b.law.as_str())));
}
