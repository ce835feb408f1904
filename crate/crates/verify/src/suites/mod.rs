//! The three verification suites. Each suite is a list of [`Check`]s that
//! can be enumerated without running them.

use std::time::Instant;

use rayon::prelude::*;

use ramanujan_core::meijerg::ContourOptions;
use ramanujan_core::series::SeriesOptions;
use ramanujan_core::Result;

use crate::config::{Suite, SuiteConfig};
use crate::record::VerificationRecord;

pub mod closed_forms;
pub mod identities;
pub mod theorems;

pub use closed_forms::{closed_form_table, ClosedForm};

/// Two computed sides plus optional sub-comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub lhs: f64,
    pub rhs: f64,
    pub localization: Vec<VerificationRecord>,
}

impl Comparison {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        Self { lhs, rhs, localization: Vec::new() }
    }
}

type Body = Box<dyn Fn() -> Result<Comparison> + Send + Sync>;

/// A named comparison waiting to be run.
pub struct Check {
    pub id: String,
    pub tol: f64,
    body: Body,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).field("tol", &self.tol).finish_non_exhaustive()
    }
}

impl Check {
    pub fn new(id: impl Into<String>, tol: f64, body: impl Fn() -> Result<Comparison> + Send + Sync + 'static) -> Self {
        Self { id: id.into(), tol, body: Box::new(body) }
    }

    /// Runs the body. Errors become FAIL records.
    pub fn run(&self) -> VerificationRecord {
        let start = Instant::now();
        let mut record = match (self.body)() {
            Ok(c) => {
                let mut r = VerificationRecord::compare(self.id.clone(), c.lhs, c.rhs, self.tol);
                r.localization = c.localization;
                r
            }
            Err(e) => VerificationRecord::failed(self.id.clone(), f64::NAN, self.tol, e),
        };
        record.runtime_ms = start.elapsed().as_millis() as u64;
        record
    }
}

pub(crate) fn contour_options(config: &SuiteConfig) -> ContourOptions {
    ContourOptions { step: config.contour_step, t_max: config.t_max, ..ContourOptions::default() }
}

pub(crate) fn series_options(config: &SuiteConfig) -> SeriesOptions {
    SeriesOptions { max_terms: config.max_terms, contour: contour_options(config) }
}

/// Short label for a parameter value: `2`, `0.5`, `0.4`.
pub(crate) fn label(x: f64) -> String {
    format!("{x}")
}

pub fn checks_for(suite: Suite, config: &SuiteConfig) -> Vec<Check> {
    match suite {
        Suite::ClosedForms => closed_forms::checks(config),
        Suite::Theorems => theorems::checks(config),
        Suite::GIdentities => identities::checks(config),
        Suite::All => {
            let mut all = closed_forms::checks(config);
            all.extend(theorems::checks(config));
            all.extend(identities::checks(config));
            all
        }
    }
}

/// Runs checks on `workers` threads and returns the records sorted by id.
pub fn run_checks(checks: &[Check], workers: usize) -> Vec<VerificationRecord> {
    let mut records: Vec<VerificationRecord> = match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build()
    {
        Ok(pool) => pool.install(|| checks.par_iter().map(Check::run).collect()),
        Err(_) => checks.iter().map(Check::run).collect(),
    };
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

pub fn run_suite(config: &SuiteConfig) -> Vec<VerificationRecord> {
    run_checks(&checks_for(config.suite, config), config.workers)
}

pub fn run_closed_form_suite(config: &SuiteConfig) -> Vec<VerificationRecord> {
    run_checks(&closed_forms::checks(config), config.workers)
}

pub fn run_theorem_suite(config: &SuiteConfig) -> Vec<VerificationRecord> {
    run_checks(&theorems::checks(config), config.workers)
}

pub fn run_g_identity_suite(config: &SuiteConfig) -> Vec<VerificationRecord> {
    run_checks(&identities::checks(config), config.workers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramanujan_core::Error;

    #[test]
    fn errors_become_fail_records() {
        let check = Check::new("X", 1e-9, || Err(Error::ZeroArgument));
        let r = check.run();
        assert!(!r.passed());
        assert!(r.error.is_some());
    }

    #[test]
    fn records_sorted_by_id() {
        let checks = vec![
            Check::new("B", 1e-9, || Ok(Comparison::new(1.0, 1.0))),
            Check::new("A", 1e-9, || Ok(Comparison::new(1.0, 2.0))),
        ];
        let r = run_checks(&checks, 2);
        assert_eq!(r[0].id, "A");
        assert!(!r[0].passed());
        assert!(r[1].passed());
    }

    #[test]
    fn labels() {
        assert_eq!(label(2.0), "2");
        assert_eq!(label(0.4), "0.4");
        assert_eq!(label(0.5), "0.5");
    }
}
