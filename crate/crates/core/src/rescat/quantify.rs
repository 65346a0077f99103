//! Tuple-space quantifiers for the law suites.
//!
//! Each law quantifies over a shape of morphism tuples (single maps, parallel
//! pairs, composable chains, ...). When the whole tuple space fits the budget
//! it is enumerated exhaustively in a fixed order; otherwise the law is
//! checked on a pseudo-random sample drawn from a per-law seeded stream, and
//! the report records both the sampling and the seed so counterexamples are
//! reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{Budget, LawReport, LawStatus, Violation};
use super::Model;

pub(crate) enum LawResult {
    Holds,
    /// The tuple did not meet the law's precondition.
    Vacuous,
    /// The tuple was skipped because an inner enumeration exceeded the
    /// budget; skips are reported, never silently passed.
    SkippedSite,
    Violated(Violation),
}

pub(crate) struct RunStats {
    pub checked: u64,
    pub vacuous: u64,
    pub skipped_sites: u64,
    pub sampled: bool,
    pub violation: Option<Violation>,
    pub note: Option<String>,
}

impl RunStats {
    fn new(sampled: bool) -> RunStats {
        RunStats {
            checked: 0,
            vacuous: 0,
            skipped_sites: 0,
            sampled,
            violation: None,
            note: None,
        }
    }

    fn absorb(&mut self, r: LawResult) -> bool {
        match r {
            LawResult::Holds => self.checked += 1,
            LawResult::Vacuous => self.vacuous += 1,
            LawResult::SkippedSite => self.skipped_sites += 1,
            LawResult::Violated(v) => {
                self.checked += 1;
                self.violation = Some(v);
                return true;
            }
        }
        false
    }
}

fn law_stream(seed: u64, suite: &str, law: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in suite.bytes().chain(law.bytes()) {
        h ^= byte as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

pub(crate) struct Quant<'a, M: Model> {
    pub m: &'a M,
    pub b: &'a Budget,
    pub objs: Vec<M::Obj>,
    sizes: Vec<Vec<u128>>,
}

impl<'a, M: Model> Quant<'a, M> {
    pub fn new(m: &'a M, b: &'a Budget) -> Quant<'a, M> {
        let objs: Vec<M::Obj> = m
            .objects()
            .into_iter()
            .filter(|o| m.obj_size(o) <= b.max_size)
            .collect();
        let sizes = objs
            .iter()
            .map(|a| objs.iter().map(|x| m.hom_size(a, x)).collect())
            .collect();
        Quant { m, b, objs, sizes }
    }

    pub fn report(&self, suite: &str, law: &str, stats: RunStats) -> LawReport {
        let status = if stats.violation.is_some() {
            LawStatus::Fail
        } else if stats.checked == 0 && (stats.note.is_some() || stats.skipped_sites > 0) {
            LawStatus::Skipped
        } else {
            LawStatus::Pass
        };
        let mut note = stats.note;
        if stats.skipped_sites > 0 {
            let extra = format!("{} sites skipped: enumeration over budget", stats.skipped_sites);
            note = Some(match note {
                Some(n) => format!("{n}; {extra}"),
                None => extra,
            });
        }
        LawReport {
            suite: suite.to_string(),
            law: law.to_string(),
            status,
            checked: stats.checked,
            vacuous: stats.vacuous,
            sampled: stats.sampled,
            seed: self.b.seed,
            note,
            counterexample: stats.violation.map(|v| v.render()),
        }
    }

    pub fn skip(&self, suite: &str, law: &str, why: &str) -> LawReport {
        let mut stats = RunStats::new(false);
        stats.note = Some(why.to_string());
        self.report(suite, law, stats)
    }

    fn n(&self) -> usize {
        self.objs.len()
    }

    /// Generic runner over a cell decomposition of the tuple space. Each
    /// cell is an object tuple with a known tuple count; `check` receives the
    /// cell index and the offset within the cell.
    fn run_cells(
        &self,
        suite: &str,
        law: &str,
        cells: &[(usize, u128)],
        mut check: impl FnMut(usize, u128) -> LawResult,
    ) -> RunStats {
        let total: u128 = cells.iter().map(|c| c.1).sum();
        if total <= self.b.max_tuples {
            let mut stats = RunStats::new(false);
            'outer: for &(cell, count) in cells {
                for k in 0..count {
                    if stats.absorb(check(cell, k)) {
                        break 'outer;
                    }
                }
            }
            stats
        } else {
            let mut prefix: Vec<u128> = Vec::with_capacity(cells.len() + 1);
            let mut acc = 0u128;
            prefix.push(0);
            for c in cells {
                acc += c.1;
                prefix.push(acc);
            }
            let mut rng = law_stream(self.b.seed, suite, law);
            let mut stats = RunStats::new(true);
            for _ in 0..self.b.samples {
                let r = rng.gen_range(0..total);
                let idx = prefix.partition_point(|&p| p <= r) - 1;
                let (cell, _) = cells[idx];
                if stats.absorb(check(cell, r - prefix[idx])) {
                    break;
                }
            }
            stats
        }
    }

    /// Quantify over single maps `f : A -> B`.
    pub fn maps1(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push((a * n + b, self.sizes[a][b]));
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (a, b) = (&self.objs[cell / n], &self.objs[cell % n]);
            check(&self.m.hom_nth(a, b, k))
        });
        self.report(suite, law, stats)
    }

    /// Quantify over parallel pairs `f, g : A -> B`.
    pub fn parallel2(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let s = self.sizes[a][b];
                cells.push((a * n + b, s * s));
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (a, b) = (&self.objs[cell / n], &self.objs[cell % n]);
            let s = self.sizes[cell / n][cell % n];
            check(
                &self.m.hom_nth(a, b, k / s),
                &self.m.hom_nth(a, b, k % s),
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over parallel triples `f, g, h : A -> B`.
    pub fn parallel3(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let s = self.sizes[a][b];
                cells.push((a * n + b, s * s * s));
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (a, b) = (&self.objs[cell / n], &self.objs[cell % n]);
            let s = self.sizes[cell / n][cell % n];
            check(
                &self.m.hom_nth(a, b, k / (s * s)),
                &self.m.hom_nth(a, b, (k / s) % s),
                &self.m.hom_nth(a, b, k % s),
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over self-maps `e : A -> A`.
    pub fn endo1(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let cells: Vec<(usize, u128)> = (0..n).map(|a| (a, self.sizes[a][a])).collect();
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let a = &self.objs[cell];
            check(&self.m.hom_nth(a, a, k))
        });
        self.report(suite, law, stats)
    }

    /// Quantify over pairs of self-maps on a common object.
    pub fn endo2(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let cells: Vec<(usize, u128)> = (0..n)
            .map(|a| (a, self.sizes[a][a] * self.sizes[a][a]))
            .collect();
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let a = &self.objs[cell];
            let s = self.sizes[cell][cell];
            check(&self.m.hom_nth(a, a, k / s), &self.m.hom_nth(a, a, k % s))
        });
        self.report(suite, law, stats)
    }

    /// Quantify over spans `f : C -> A`, `g : C -> B` with a shared domain.
    pub fn shared_dom2(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n * n);
        for c in 0..n {
            for a in 0..n {
                for b in 0..n {
                    cells.push(((c * n + a) * n + b, self.sizes[c][a] * self.sizes[c][b]));
                }
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (c, a, b) = (cell / (n * n), (cell / n) % n, cell % n);
            let sg = self.sizes[c][b];
            check(
                &self.m.hom_nth(&self.objs[c], &self.objs[a], k / sg),
                &self.m.hom_nth(&self.objs[c], &self.objs[b], k % sg),
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over cospans `f : A -> C`, `g : B -> C` with a shared
    /// codomain.
    pub fn shared_cod2(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    cells.push(((a * n + b) * n + c, self.sizes[a][c] * self.sizes[b][c]));
                }
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (a, b, c) = (cell / (n * n), (cell / n) % n, cell % n);
            let sg = self.sizes[b][c];
            check(
                &self.m.hom_nth(&self.objs[a], &self.objs[c], k / sg),
                &self.m.hom_nth(&self.objs[b], &self.objs[c], k % sg),
            )
        });
        self.report(suite, law, stats)
    }

    /// Like [`Quant::shared_cod2`] but with the uniqueness sample budget.
    pub fn shared_cod2_unique(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let shrunk = Budget {
            max_tuples: self.b.unique_samples as u128,
            samples: self.b.unique_samples,
            ..self.b.clone()
        };
        let sub = Quant {
            m: self.m,
            b: &shrunk,
            objs: self.objs.clone(),
            sizes: self.sizes.clone(),
        };
        sub.shared_cod2(suite, law, check)
    }

    /// Quantify over composable pairs `f : A -> B`, `g : B -> C`.
    pub fn chain2(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    cells.push(((a * n + b) * n + c, self.sizes[a][b] * self.sizes[b][c]));
                }
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (a, b, c) = (cell / (n * n), (cell / n) % n, cell % n);
            let sg = self.sizes[b][c];
            check(
                &self.m.hom_nth(&self.objs[a], &self.objs[b], k / sg),
                &self.m.hom_nth(&self.objs[b], &self.objs[c], k % sg),
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over composable triples `f : A -> B`, `g : B -> C`,
    /// `h : C -> D`. The cell decomposition is over the middle pair so the
    /// cell list stays quadratic in the object count.
    pub fn chain3(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let in_sum: Vec<u128> = (0..n).map(|b| (0..n).map(|a| self.sizes[a][b]).sum()).collect();
        let out_sum: Vec<u128> = (0..n).map(|c| (0..n).map(|d| self.sizes[c][d]).sum()).collect();
        let mut cells = Vec::with_capacity(n * n);
        for b in 0..n {
            for c in 0..n {
                cells.push((b * n + c, in_sum[b] * self.sizes[b][c] * out_sum[c]));
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (b, c) = (cell / n, cell % n);
            let sg = self.sizes[b][c];
            let block = sg * out_sum[c];
            let mut a_off = k / block;
            let rest = k % block;
            let g_idx = rest / out_sum[c];
            let mut d_off = rest % out_sum[c];
            let mut a = 0;
            while a_off >= self.sizes[a][b] {
                a_off -= self.sizes[a][b];
                a += 1;
            }
            let mut d = 0;
            while d_off >= self.sizes[c][d] {
                d_off -= self.sizes[c][d];
                d += 1;
            }
            check(
                &self.m.hom_nth(&self.objs[a], &self.objs[b], a_off),
                &self.m.hom_nth(&self.objs[b], &self.objs[c], g_idx),
                &self.m.hom_nth(&self.objs[c], &self.objs[d], d_off),
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over a map `h : X -> A` followed by a parallel pair
    /// `f, g : A -> B`.
    pub fn pre_parallel2(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let s = self.sizes[a][b];
                    cells.push(((x * n + a) * n + b, self.sizes[x][a] * s * s));
                }
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (x, a, b) = (cell / (n * n), (cell / n) % n, cell % n);
            let s = self.sizes[a][b];
            check(
                &self.m.hom_nth(&self.objs[x], &self.objs[a], k / (s * s)),
                &self.m.hom_nth(&self.objs[a], &self.objs[b], (k / s) % s),
                &self.m.hom_nth(&self.objs[a], &self.objs[b], k % s),
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over a parallel pair `f, g : A -> B` followed by a map
    /// `k : B -> C`.
    pub fn parallel2_post(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let s = self.sizes[a][b];
                    cells.push(((a * n + b) * n + c, s * s * self.sizes[b][c]));
                }
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (a, b, c) = (cell / (n * n), (cell / n) % n, cell % n);
            let sk = self.sizes[b][c];
            let s = self.sizes[a][b];
            check(
                &self.m.hom_nth(&self.objs[a], &self.objs[b], k / (s * sk)),
                &self.m.hom_nth(&self.objs[a], &self.objs[b], (k / sk) % s),
                &self.m.hom_nth(&self.objs[b], &self.objs[c], k % sk),
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over two completely independent maps.
    pub fn two_maps(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let grand: u128 = self
            .sizes
            .iter()
            .map(|row| row.iter().sum::<u128>())
            .sum();
        let mut flat_prefix: Vec<u128> = Vec::with_capacity(n * n + 1);
        let mut acc = 0u128;
        flat_prefix.push(0);
        for a in 0..n {
            for b in 0..n {
                acc += self.sizes[a][b];
                flat_prefix.push(acc);
            }
        }
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push((a * n + b, self.sizes[a][b] * grand));
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, k| {
            let (a, b) = (cell / n, cell % n);
            let f = self.m.hom_nth(&self.objs[a], &self.objs[b], k / grand);
            let r = k % grand;
            let idx = flat_prefix.partition_point(|&p| p <= r) - 1;
            let (a2, b2) = (idx / n, idx % n);
            let g = self.m.hom_nth(&self.objs[a2], &self.objs[b2], r - flat_prefix[idx]);
            check(&f, &g)
        });
        self.report(suite, law, stats)
    }

    /// Like [`Quant::parallel2`] but with the uniqueness sample budget.
    pub fn parallel2_unique(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let shrunk = Budget {
            max_tuples: self.b.unique_samples as u128,
            samples: self.b.unique_samples,
            ..self.b.clone()
        };
        let sub = Quant {
            m: self.m,
            b: &shrunk,
            objs: self.objs.clone(),
            sizes: self.sizes.clone(),
        };
        sub.parallel2(suite, law, check)
    }

    /// Quantify over single objects.
    pub fn objects1(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Obj) -> LawResult,
    ) -> LawReport {
        let cells: Vec<(usize, u128)> = (0..self.n()).map(|a| (a, 1)).collect();
        let stats = self.run_cells(suite, law, &cells, |cell, _| check(&self.objs[cell]));
        self.report(suite, law, stats)
    }

    /// Quantify over ordered pairs of objects.
    pub fn objects2(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Obj, &M::Obj) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push((a * n + b, 1));
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, _| {
            check(&self.objs[cell / n], &self.objs[cell % n])
        });
        self.report(suite, law, stats)
    }

    /// Quantify over ordered triples of objects.
    pub fn objects3(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Obj, &M::Obj, &M::Obj) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    cells.push(((a * n + b) * n + c, 1));
                }
            }
        }
        let stats = self.run_cells(suite, law, &cells, |cell, _| {
            check(
                &self.objs[cell / (n * n)],
                &self.objs[(cell / n) % n],
                &self.objs[cell % n],
            )
        });
        self.report(suite, law, stats)
    }

    /// Quantify over maps `f : A -> B` paired with an enumeration of a hom
    /// set derived from `f` (uniqueness-style laws). The outer space uses the
    /// uniqueness sample budget; the derived inner enumeration is performed by
    /// the law body itself.
    pub fn maps1_unique(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map) -> LawResult,
    ) -> LawReport {
        let n = self.n();
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push((a * n + b, self.sizes[a][b]));
            }
        }
        let total: u128 = cells.iter().map(|c| c.1).sum();
        let shrunk = Budget {
            max_tuples: self.b.unique_samples as u128,
            samples: self.b.unique_samples,
            ..self.b.clone()
        };
        let sub = Quant {
            m: self.m,
            b: &shrunk,
            objs: self.objs.clone(),
            sizes: self.sizes.clone(),
        };
        let stats = sub.run_cells(suite, law, &cells, |cell, k| {
            let (a, b) = (&self.objs[cell / n], &self.objs[cell % n]);
            check(&self.m.hom_nth(a, b, k))
        });
        let mut report = self.report(suite, law, stats);
        report.sampled = total > shrunk.max_tuples;
        report
    }

    /// Like [`Quant::shared_dom2`] but with the uniqueness sample budget.
    pub fn shared_dom2_unique(
        &self,
        suite: &str,
        law: &str,
        check: impl Fn(&M::Map, &M::Map) -> LawResult,
    ) -> LawReport {
        let shrunk = Budget {
            max_tuples: self.b.unique_samples as u128,
            samples: self.b.unique_samples,
            ..self.b.clone()
        };
        let sub = Quant {
            m: self.m,
            b: &shrunk,
            objs: self.objs.clone(),
            sizes: self.sizes.clone(),
        };
        sub.shared_dom2(suite, law, check)
    }
}

/// Helper to build a violation out of printable parts.
pub(crate) fn violation(
    site: impl Into<String>,
    witnesses: Vec<String>,
    lhs: impl ToString,
    rhs: impl ToString,
) -> LawResult {
    LawResult::Violated(Violation {
        site: site.into(),
        witnesses,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}
