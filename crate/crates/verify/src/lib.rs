//! Verification harness for `ramanujan-core`.
//!
//! Each suite compares series, quadrature and closed-form values and
//! produces [`VerificationRecord`]s, which [`report::emit_report`] writes
//! as JSON, CSV or a markdown table.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod record;
pub mod report;
pub mod suites;

pub use config::{ConfigError, ConfigOverrides, OutputFormat, Suite, SuiteConfig};
pub use record::{Status, VerificationRecord};
pub use report::{emit_report, exit_code};
pub use suites::{run_closed_form_suite, run_g_identity_suite, run_suite, run_theorem_suite, Check};
