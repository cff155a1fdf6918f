//! Exhaustive and exact self-checks, grouped into a fast and a full suite.

use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::asymptotics::check_es;
use crate::diagram::partitions;
use crate::insertion::{hecke, hecke_inverse, heckeshape};
use crate::kjdt::k_rectify;
use crate::measures::{
    exact_plancherel_hecke, exact_plancherel_rsk, hecke_pushforward, markov_transition,
    plancherel_hecke_terms, ExactGuard,
};
use crate::patience::{pile_count, play_greedy, Ties};
use crate::word::{all_words, lds, lis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {} ({:.2}s): {}", c.name, c.seconds, c.detail)?;
        }
        Ok(())
    }
}

struct Ranges {
    /// Largest `(n, q)` for the sum identity and the exact measures.
    identity: (usize, u32),
    /// Words checked exhaustively against the LIS/LDS oracle and patience.
    words: (usize, u32),
    roundtrip: (usize, u32),
    pushforward: (usize, u32),
    rectify: (usize, u32),
    markov_sizes: (usize, u32),
    markov_push: (usize, u32),
}

impl Level {
    fn ranges(self) -> Ranges {
        match self {
            Level::Fast => Ranges {
                identity: (6, 4),
                words: (6, 3),
                roundtrip: (5, 3),
                pushforward: (5, 3),
                rectify: (4, 3),
                markov_sizes: (6, 4),
                markov_push: (5, 3),
            },
            Level::Full => Ranges {
                identity: (7, 4),
                words: (7, 4),
                roundtrip: (7, 4),
                pushforward: (6, 3),
                rectify: (6, 4),
                markov_sizes: (8, 5),
                markov_push: (7, 4),
            },
        }
    }
}

fn run(report: &mut Report, name: &str, check: impl FnOnce() -> (bool, String)) {
    let start = Instant::now();
    let (passed, detail) = check();
    report.checks.push(CheckResult {
        name: name.to_string(),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    });
}

/// Runs every check at `level` and collects the results.
pub fn run_suite(level: Level) -> Report {
    let r = level.ranges();
    let mut report = Report::default();

    run(&mut report, "sum identity q^n = sum d^l(q) e^l(n)", || {
        let (max_n, max_q) = r.identity;
        let mut bad = Vec::new();
        for q in 1..=max_q {
            for n in 0..=max_n {
                let sum: BigUint = plancherel_hecke_terms(n, q)
                    .iter()
                    .map(|(_, d, e)| d * e)
                    .sum();
                if sum != BigUint::from(q).pow(n as u32) {
                    bad.push((n, q));
                }
            }
        }
        let sum43: BigUint = plancherel_hecke_terms(4, 3)
            .iter()
            .map(|(_, d, e)| d * e)
            .sum();
        (
            bad.is_empty() && sum43 == BigUint::from(81u32),
            format!(
                "n <= {max_n}, q <= {max_q}; (n,q) = (4,3) sums to {sum43} = 3^4; failures {bad:?}"
            ),
        )
    });

    run(&mut report, "first row = LIS, first column = LDS", || {
        let (max_n, max_q) = r.words;
        let mut checked = 0u64;
        let mut failures = 0u64;
        for q in 1..=max_q {
            for n in 0..=max_n {
                for w in all_words(n, q) {
                    let s = heckeshape(&w);
                    checked += 1;
                    if s.first_row() != lis(&w) || s.first_column() != lds(&w) {
                        failures += 1;
                    }
                }
            }
        }
        (
            failures == 0,
            format!("{checked} words (n <= {max_n}, q <= {max_q}), {failures} failures"),
        )
    });

    run(&mut report, "inverse insertion round trip", || {
        let (max_n, max_q) = r.roundtrip;
        let mut checked = 0u64;
        let mut failures = 0u64;
        for q in 1..=max_q {
            for n in 0..=max_n {
                for w in all_words(n, q) {
                    checked += 1;
                    if hecke_inverse(&hecke(&w), q).ok().as_ref() != Some(&w) {
                        failures += 1;
                    }
                }
            }
        }
        (
            failures == 0,
            format!("{checked} words (n <= {max_n}, q <= {max_q}), {failures} failures"),
        )
    });

    run(
        &mut report,
        "shape pushforward equals exact measure",
        || {
            let (max_n, max_q) = r.pushforward;
            let guard = ExactGuard { max_n, max_q };
            let mut bad = Vec::new();
            for q in 1..=max_q {
                for n in 0..=max_n {
                    let exact = exact_plancherel_hecke(n, q, &guard).expect("inside guard");
                    if hecke_pushforward(n, q) != exact {
                        bad.push((n, q));
                    }
                }
            }
            (
                bad.is_empty(),
                format!("n <= {max_n}, q <= {max_q}; mismatches {bad:?}"),
            )
        },
    );

    run(
        &mut report,
        "K-rectification equals insertion tableau",
        || {
            let (max_n, max_q) = r.rectify;
            let mut checked = 0u64;
            let mut failures = 0u64;
            for q in 1..=max_q {
                for n in 0..=max_n {
                    for w in all_words(n, q) {
                        checked += 1;
                        if k_rectify(&w).ok() != Some(hecke(&w).insertion) {
                            failures += 1;
                        }
                    }
                }
            }
            (
                failures == 0,
                format!("{checked} words (n <= {max_n}, q <= {max_q}), {failures} failures"),
            )
        },
    );

    run(
        &mut report,
        "patience piles = LIS, tops = first row",
        || {
            let (max_n, max_q) = r.words;
            let mut failures = 0u64;
            for q in 1..=max_q {
                for n in 0..=max_n {
                    for w in all_words(n, q) {
                        let s = play_greedy(&w, Ties::Allowed);
                        if pile_count(&s) != lis(&w) || s.tops() != hecke(&w).insertion.first_row()
                        {
                            failures += 1;
                        }
                    }
                }
            }
            (
                failures == 0,
                format!("n <= {max_n}, q <= {max_q}; {failures} failures"),
            )
        },
    );

    run(
        &mut report,
        "generalized Erdos-Szekeres implication",
        || {
            let (max_n, max_q) = r.words;
            let mut failures = 0u64;
            for q in 2..=max_q {
                for n in 0..=max_n {
                    for w in all_words(n, q) {
                        for a in 1..q {
                            for b in 1..q {
                                if !check_es(&w, a, b).expect("1 <= a, b < q") {
                                    failures += 1;
                                }
                            }
                        }
                    }
                }
            }
            (
                failures == 0,
                format!("n <= {max_n}, q <= {max_q}; {failures} failures"),
            )
        },
    );

    run(&mut report, "growth chain transitions sum to 1", || {
        let (max_size, max_q) = r.markov_sizes;
        let mut bad = Vec::new();
        for q in 1..=max_q {
            for size in 0..=max_size {
                for l in partitions(size) {
                    if l.num_rows() > q as usize {
                        continue;
                    }
                    let total: BigRational = l
                        .addable_cells()
                        .into_iter()
                        .map(|u| l.with_cell_added(u).expect("addable"))
                        .filter(|m| m.num_rows() <= q as usize)
                        .map(|m| markov_transition(&l, &m, q).expect("covering pair"))
                        .sum();
                    if !total.is_one() {
                        bad.push((l.clone(), q));
                    }
                }
            }
        }
        (
            bad.is_empty(),
            format!(
                "|shape| <= {max_size}, q <= {max_q}; failures {}",
                bad.len()
            ),
        )
    });

    run(
        &mut report,
        "growth chain pushes nu_n forward to nu_(n+1)",
        || {
            let (max_n, max_q) = r.markov_push;
            let mut bad = Vec::new();
            for q in 1..=max_q {
                let guard = ExactGuard {
                    max_n: max_n + 1,
                    max_q,
                };
                for n in 0..=max_n {
                    let now = exact_plancherel_rsk(n, q, &guard).expect("inside guard");
                    let next = exact_plancherel_rsk(n + 1, q, &guard).expect("inside guard");
                    for mu in partitions(n + 1) {
                        let pushed: BigRational = now
                            .entries()
                            .iter()
                            .filter(|(l, _)| l.is_covered_by(&mu))
                            .map(|(l, p)| p * markov_transition(l, &mu, q).expect("covering pair"))
                            .sum();
                        if pushed != next.prob(&mu) {
                            bad.push((n, q, mu));
                        }
                    }
                }
            }
            (
                bad.is_empty(),
                format!("n <= {max_n}, q <= {max_q}; failures {}", bad.len()),
            )
        },
    );

    report
}
