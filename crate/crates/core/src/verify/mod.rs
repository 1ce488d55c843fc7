//! Named verification suites over the identities implemented in this crate.

pub mod report;
mod suites;

use std::sync::Arc;
use std::time::Instant;

use serde_json::Value;

use crate::algebra::FiniteField;
use crate::error::{Error, Result};

pub use report::{CaseReport, Check, SuiteReport, SCHEMA_VERSION};
pub use suites::{
    admissible_etas, algebraic_limit_indices, divergence_points, min_bracket_exponent,
};

pub const SUITES: [&str; 13] = [
    "u-sinnott",
    "cyclotomic-zero",
    "dominance",
    "shuffle-hom",
    "finite-euler-carlitz",
    "analytic-limit",
    "algebraic-limit",
    "vanishing-reven",
    "t-expansion",
    "w-oracle",
    "gamma-routes",
    "hasse-schmidt",
    "explicit-identities",
];

/// Scale parameters shared by all suites. Suites read only the fields they need.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub r: u64,
    pub prec: i64,
    /// Degree bound for cyclotomic checks, analytic limits and the vanishing check.
    pub d_max: usize,
    /// Degree bound for finite MZVs.
    pub big_d_max: usize,
    /// Largest u-order N.
    pub n_max: usize,
    /// Weight bound; each suite has its own default when unset.
    pub weight_max: Option<i64>,
    /// Degree bound for u-Sinnott (n ≤ r^deg_max) and finite Euler–Carlitz.
    pub deg_max: usize,
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            r: 3,
            prec: 25,
            d_max: 4,
            big_d_max: 3,
            n_max: 2,
            weight_max: None,
            deg_max: 3,
            timings: false,
        }
    }
}

impl VerifyConfig {
    pub(crate) fn field(&self) -> Result<Arc<FiniteField>> {
        FiniteField::of_order(self.r)
    }
}

/// Outcome of one case before it is stamped with id and timing.
pub(crate) struct Outcome {
    pub pass: bool,
    pub check: Check,
    pub detail: String,
}

impl Outcome {
    pub fn exact(pass: bool, what: impl FnOnce() -> String) -> Self {
        Outcome {
            pass,
            check: Check::Exact,
            detail: if pass { String::new() } else { what() },
        }
    }

    pub fn certified(pass: bool, prec: i64, what: impl FnOnce() -> String) -> Self {
        Outcome {
            pass,
            check: Check::Certified { prec },
            detail: if pass { String::new() } else { what() },
        }
    }
}

pub(crate) struct Runner {
    timings: bool,
    cases: Vec<CaseReport>,
}

impl Runner {
    pub fn new(cfg: &VerifyConfig) -> Self {
        Runner {
            timings: cfg.timings,
            cases: Vec::new(),
        }
    }

    /// Runs one case; an error counts as a failure and is reported with the
    /// identity being checked.
    pub fn case(
        &mut self,
        id: impl Into<String>,
        inputs: Value,
        identity: &str,
        f: impl FnOnce() -> Result<Outcome>,
    ) {
        let start = Instant::now();
        let out = f();
        let elapsed = self.timings.then(|| start.elapsed());
        let id = id.into();
        let (pass, check, detail) = match out {
            Ok(o) => {
                let detail = if o.pass {
                    o.detail
                } else {
                    format!("{identity} fails for {inputs}: {}", o.detail)
                };
                (o.pass, o.check, detail)
            }
            Err(e) => (
                false,
                Check::Exact,
                format!("{identity} could not be evaluated for {inputs}: {e}"),
            ),
        };
        self.cases.push(CaseReport {
            id,
            inputs,
            pass,
            check,
            detail,
            elapsed,
        });
    }

    pub fn finish(self, suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            cases: self.cases,
        }
    }
}

/// Runs the named suite at the scale given by `cfg`.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let run: fn(&VerifyConfig) -> Result<SuiteReport> = match name {
        "u-sinnott" => suites::u_sinnott,
        "cyclotomic-zero" => suites::cyclotomic_zero,
        "dominance" => suites::dominance,
        "shuffle-hom" => suites::shuffle_hom,
        "finite-euler-carlitz" => suites::finite_euler_carlitz,
        "analytic-limit" => suites::analytic_limit,
        "algebraic-limit" => suites::algebraic_limit,
        "vanishing-reven" => suites::vanishing_reven,
        "t-expansion" => suites::t_expansion_suite,
        "w-oracle" => suites::w_oracle,
        "gamma-routes" => suites::gamma_routes,
        "hasse-schmidt" => suites::hasse_schmidt,
        "explicit-identities" => suites::explicit_identities,
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    run(cfg)
}
