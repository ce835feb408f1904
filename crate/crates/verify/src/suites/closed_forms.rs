use std::f64::consts::PI;

use ramanujan_core::quadratures::{ramanujan_rc, upsilon};

use super::{label, Check, Comparison};
use crate::config::SuiteConfig;

pub const QUADRATURE_TOL: f64 = 1e-9;
pub const RECIPROCITY_TOL: f64 = 1e-8;

/// A known exact value of R_C(m, n).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    pub m: u32,
    pub n: f64,
    pub value: f64,
}

pub fn closed_form_table() -> [ClosedForm; 10] {
    let (s2, s3, s5) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt());
    let cf = |m, n, value| ClosedForm { m, n, value };
    [
        cf(0, 0.0, 1.0 / 12.0),
        cf(0, 1.0, (2.0 - s2) / 8.0),
        cf(0, 2.0, 1.0 / 16.0),
        cf(0, 4.0, (3.0 - s2) / 32.0),
        cf(0, 6.0, (13.0 - 4.0 * s3) / 144.0),
        cf(0, 0.5, 1.0 / (4.0 * PI)),
        cf(0, 0.4, (8.0 - 3.0 * s5) / 16.0),
        cf(1, 0.5, (13.0 - 4.0 * PI) / (8.0 * PI * PI)),
        cf(1, 2.0, (0.5 - 3.0 / PI + 5.0 / (PI * PI)) / 64.0),
        cf(2, 2.0, (1.0 - 5.0 / PI + 5.0 / (PI * PI)) / 256.0),
    ]
}

pub const RECIPROCITY_N: [f64; 3] = [1.0, 2.0, 4.0];

pub(crate) fn checks(config: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for ClosedForm { m, n, value } in closed_form_table() {
        out.push(Check::new(format!("RC-{m}-{}", label(n)), config.tol_or(QUADRATURE_TOL), move || {
            Ok(Comparison::new(ramanujan_rc(m, n)?.value, value))
        }));
    }
    let tol = config.tol_or(RECIPROCITY_TOL);
    for n in RECIPROCITY_N {
        let scale = (2.0 / n).sqrt() / n;
        // R_C(0,n) = (1/n)√(2/n) Υ(1/n) − Υ(n)
        out.push(Check::new(format!("UPSILON-RECIP-A-{}", label(n)), tol, move || {
            let rhs = scale * upsilon(1.0 / n)?.value - upsilon(n)?.value;
            Ok(Comparison::new(ramanujan_rc(0, n)?.value, rhs))
        }));
        // Υ(n) = (1/n)√(2/n) R_C(0,1/n) + R_C(0,n)
        out.push(Check::new(format!("UPSILON-RECIP-B-{}", label(n)), tol, move || {
            let rhs = scale * ramanujan_rc(0, 1.0 / n)?.value + ramanujan_rc(0, n)?.value;
            Ok(Comparison::new(upsilon(n)?.value, rhs))
        }));
    }
    out
}
