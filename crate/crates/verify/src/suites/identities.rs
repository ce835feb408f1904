use std::f64::consts::PI;

use ramanujan_core::meijerg::MeijerGSpec;
use ramanujan_core::series::{rc_series_with, sum_g_series, GSeriesVariant, GTermFamily, ThetaSequence};
use ramanujan_core::Result;

use super::closed_forms::closed_form_table;
use super::theorems::SERIES_TOL;
use super::{contour_options, series_options, Check, Comparison};
use crate::config::SuiteConfig;
use crate::record::VerificationRecord;

pub const IDENTITY_TOL: f64 = 1e-5;
const RHS_TOL: f64 = 1e-12;

/// One displayed closed-form sum
/// Σ_k (2π + 2πk)^{-power} G(x_coef / (2π + 2πk)^4 | a; b) = rhs,
/// together with the R_C(m, n) it is derived from.
#[derive(Debug, Clone, PartialEq)]
pub struct GIdentity {
    pub index: usize,
    pub m: u32,
    pub n: f64,
    /// G orders (m, n) as printed.
    pub orders: (usize, usize),
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub power: f64,
    /// G argument numerator as printed.
    pub x_coef: f64,
    pub rhs: f64,
}

impl GIdentity {
    /// Factor 2^{4m+5/2}/π that turns the sum into R_C(m, n).
    pub fn scale(&self) -> f64 {
        2f64.powf(4.0 * f64::from(self.m) + 2.5) / PI
    }

    pub fn spec(&self) -> Result<MeijerGSpec> {
        MeijerGSpec::real(self.orders.0, self.orders.1, &self.a, &self.b)
    }
}

pub fn g_identities() -> Vec<GIdentity> {
    let (s2, s6, s10) = (2f64.sqrt(), 6f64.sqrt(), 10f64.sqrt());
    let pi2 = PI * PI;
    let g42 = |index, m: u32, n, power, x_coef, rhs| GIdentity {
        index,
        m,
        n,
        orders: (1, 4),
        a: (0..4).map(|j| (2.0 - 2.0 * f64::from(m) - j as f64) / 4.0).collect(),
        b: vec![0.0, 0.5],
        power,
        x_coef,
        rhs,
    };
    let g31 = |index, n, x_coef, rhs| GIdentity {
        index,
        m: 0,
        n,
        orders: (1, 3),
        a: vec![0.25, 0.0, -0.25],
        b: vec![0.0],
        power: 2.0,
        x_coef,
        rhs,
    };
    vec![
        g42(1, 1, 0.5, 4.0, 16.0 * pi2, s2 * (13.0 - 4.0 * PI) / (1024.0 * PI)),
        g42(2, 1, 2.0, 4.0, 64.0 * pi2, PI * s2 / 8192.0 * (0.5 - 3.0 / PI + 5.0 / pi2)),
        g42(3, 2, 2.0, 6.0, 256.0 * pi2, PI * s2 / (256.0 * 2048.0) * (1.0 - 5.0 / PI + 5.0 / pi2)),
        g31(4, 1.0, 64.0 * pi2, PI * (2.0 * s2 - 2.0) / 64.0),
        g31(5, 2.0, 256.0 * pi2, PI * s2 / 128.0),
        g31(6, 4.0, 1024.0 * pi2, PI * (3.0 * s2 - 2.0) / 256.0),
        g31(7, 6.0, 2304.0 * pi2, PI * (13.0 * s2 - 4.0 * s6) / 1152.0),
        g31(8, 0.5, 16.0 * pi2, s2 / 32.0),
        g31(9, 0.4, 256.0 * pi2 / 25.0, PI * (8.0 * s2 - 3.0 * s10) / 128.0),
    ]
}

fn closed_form(m: u32, n: f64) -> f64 {
    closed_form_table().into_iter().find(|cf| cf.m == m && cf.n == n).map_or(f64::NAN, |cf| cf.value)
}

fn sub_record(id: String, lhs: Result<f64>, rhs: f64, tol: f64) -> VerificationRecord {
    match lhs {
        Ok(lhs) => VerificationRecord::compare(id, lhs, rhs, tol),
        Err(e) => VerificationRecord::failed(id, rhs, tol, e),
    }
}

pub(crate) fn checks(config: &SuiteConfig) -> Vec<Check> {
    let tol = config.tol_or(IDENTITY_TOL);
    let series_tol = config.tol_or(SERIES_TOL);
    let contour = contour_options(config);
    let o = series_options(config);
    g_identities()
        .into_iter()
        .map(|g| {
            let id = format!("G-IDENTITY-{}", g.index);
            Check::new(id.clone(), tol, move || {
                let family = GTermFamily::new(g.spec()?, 1.0, g.power, g.x_coef, 4.0, contour)?;
                let rate = |k: usize| 2.0 * PI * (1.0 + k as f64);
                let lhs =
                    sum_g_series(&family, &ThetaSequence::pochhammer(1.0), &rate, o.max_terms, 1e-14)?.sum.value.re;
                let exact = closed_form(g.m, g.n);
                let rc = rc_series_with(g.m, g.n, GSeriesVariant::V1, 1e-14, &o).map(|r| r.sum.value.re);
                let localization = vec![
                    // Is the printed right side the scaled R_C(m, n)?
                    VerificationRecord::compare(format!("{id}/PRINTED-RHS"), g.rhs * g.scale(), exact, RHS_TOL),
                    // Does the printed left side sum to R_C(m, n)?
                    VerificationRecord::compare(format!("{id}/SCALED-LHS"), lhs * g.scale(), exact, tol),
                    // Does the unsimplified R_C(m, n) series reach the closed form?
                    sub_record(format!("{id}/RCSERIES"), rc, exact, series_tol),
                ];
                Ok(Comparison { lhs, rhs: g.rhs, localization })
            })
        })
        .collect()
}
