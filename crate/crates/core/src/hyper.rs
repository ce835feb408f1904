//! Generalized hypergeometric and Fox-Wright series.
//!
//! Both engines sum the defining series in index order with compensated
//! summation and stop after three consecutive terms fall below
//! `tol * |partial sum|`. Requiring three small terms in a row lets a series
//! pass through isolated zero terms (denominator gammas at their poles).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gammaplex::{log_gamma, nonpositive_integer};
use crate::summation::ComplexKahanSum;
use crate::ComplexValue;

pub const MAX_TERMS: usize = 100_000;
pub const DEFAULT_TOL: f64 = 1e-16;

const SMALL_RUN: usize = 3;

/// Parameters of pFq(α; β; z).
#[derive(Debug, Clone, PartialEq)]
pub struct PFqSpec {
    numerators: Vec<ComplexValue>,
    denominators: Vec<ComplexValue>,
}

impl PFqSpec {
    pub fn new(numerators: Vec<ComplexValue>, denominators: Vec<ComplexValue>) -> Result<Self> {
        if let Some(b) = denominators.iter().find(|b| nonpositive_integer(**b).is_some()) {
            return Err(Error::ParameterDomain(format!("denominator parameter {b} is a non-positive integer")));
        }
        Ok(Self { numerators, denominators })
    }

    pub fn real(numerators: &[f64], denominators: &[f64]) -> Result<Self> {
        Self::new(
            numerators.iter().map(|&a| ComplexValue::new(a, 0.0)).collect(),
            denominators.iter().map(|&b| ComplexValue::new(b, 0.0)).collect(),
        )
    }

    pub fn numerators(&self) -> &[ComplexValue] {
        &self.numerators
    }

    pub fn denominators(&self) -> &[ComplexValue] {
        &self.denominators
    }

    pub fn p(&self) -> usize {
        self.numerators.len()
    }

    pub fn q(&self) -> usize {
        self.denominators.len()
    }

    /// ω = Σβ − Σα.
    pub fn omega(&self) -> ComplexValue {
        self.denominators.iter().sum::<ComplexValue>() - self.numerators.iter().sum::<ComplexValue>()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergenceKind {
    AllZ,
    UnitDisk,
    UnitCircleAbsolute,
    UnitCircleConditional,
    Divergent,
    SectorRestricted,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceClass {
    pub kind: ConvergenceKind,
    /// ω for pFq; the sector half-angle (π/2)σ* for Fox-Wright.
    pub detail: ComplexValue,
    /// Set on the Re(ω) = 0, z ≠ 1 unit-circle case, which the classical
    /// trichotomy leaves open and which is reported as conditional.
    pub boundary_flag: bool,
}

impl ConvergenceClass {
    fn new(kind: ConvergenceKind, detail: ComplexValue) -> Self {
        Self { kind, detail, boundary_flag: false }
    }
}

/// Result of summing an infinite series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: ComplexValue,
    pub terms_used: usize,
    /// Non-negative bound on the neglected remainder.
    pub tail_estimate: f64,
    pub converged: bool,
    /// |t_{k+1} / t_k| at the last pair of non-zero terms; 0 after an exact
    /// zero term.
    pub last_ratio: f64,
}

fn on_unit_circle(z: ComplexValue) -> bool {
    (z.norm() - 1.0).abs() <= 4.0 * f64::EPSILON
}

pub fn pfq_classify(spec: &PFqSpec, z: ComplexValue) -> ConvergenceClass {
    use ConvergenceKind::*;
    let (p, q) = (spec.p(), spec.q());
    let omega = spec.omega();
    if p <= q || z == ComplexValue::new(0.0, 0.0) {
        return ConvergenceClass::new(AllZ, omega);
    }
    if p > q + 1 {
        return ConvergenceClass::new(Divergent, omega);
    }
    if on_unit_circle(z) {
        let is_one = (z - 1.0).norm() <= 4.0 * f64::EPSILON;
        if omega.re > 0.0 {
            ConvergenceClass::new(UnitCircleAbsolute, omega)
        } else if omega.re > -1.0 && !is_one {
            ConvergenceClass { kind: UnitCircleConditional, detail: omega, boundary_flag: omega.re == 0.0 }
        } else {
            ConvergenceClass::new(Divergent, omega)
        }
    } else if z.norm() < 1.0 {
        ConvergenceClass::new(UnitDisk, omega)
    } else {
        ConvergenceClass::new(Divergent, omega)
    }
}

/// Sequential compensated summation with the three-small-terms stopping rule.
pub(crate) struct SeriesAccumulator {
    sum: ComplexKahanSum,
    tol: f64,
    small_run: usize,
    terms: usize,
    last_nonzero: Option<ComplexValue>,
    last_ratio: f64,
    last_term: f64,
}

impl SeriesAccumulator {
    pub(crate) fn new(tol: f64) -> Self {
        Self {
            sum: ComplexKahanSum::new(),
            tol,
            small_run: 0,
            terms: 0,
            last_nonzero: None,
            last_ratio: 0.0,
            last_term: 0.0,
        }
    }

    /// Adds a term; returns true once the stopping rule is met.
    pub(crate) fn push(&mut self, term: ComplexValue) -> bool {
        self.sum.add(term);
        self.terms += 1;
        let mag = term.norm();
        if mag > 0.0 {
            if let Some(prev) = self.last_nonzero {
                self.last_ratio = mag / prev.norm();
            }
            self.last_nonzero = Some(term);
        } else {
            self.last_ratio = 0.0;
        }
        self.last_term = mag;
        if mag < self.tol * self.sum.value().norm() {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run >= SMALL_RUN
    }

    pub(crate) fn finish(self) -> SeriesSum {
        let value = self.sum.value();
        let tail_estimate =
            if self.last_ratio < 1.0 { (self.last_term / (1.0 - self.last_ratio)).max(0.0) } else { f64::INFINITY };
        let converged = self.last_ratio < 1.0 && tail_estimate <= self.tol * value.norm().max(1.0);
        SeriesSum { value, terms_used: self.terms, tail_estimate, converged, last_ratio: self.last_ratio }
    }
}

/// Sums pFq(α; β; z) from its defining series.
///
/// `tol` is relative: the run stops once three consecutive terms are below
/// `tol * |partial sum|`, and `converged` additionally requires the geometric
/// tail bound to be below `tol * max(1, |value|)`.
pub fn pfq_eval(spec: &PFqSpec, z: ComplexValue, tol: f64) -> Result<SeriesSum> {
    if pfq_classify(spec, z).kind == ConvergenceKind::Divergent {
        return Err(Error::DivergentInput);
    }
    let mut acc = SeriesAccumulator::new(tol);
    let mut term = ComplexValue::new(1.0, 0.0);
    if acc.push(term) {
        return Ok(acc.finish());
    }
    for k in 0..MAX_TERMS - 1 {
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for a in &spec.numerators {
            ratio *= a + kf;
        }
        for b in &spec.denominators {
            ratio /= b + kf;
        }
        term *= ratio;
        if acc.push(term) {
            return Ok(acc.finish());
        }
    }
    Err(Error::NoConvergence(MAX_TERMS))
}

/// Parameters of the Fox-Wright function pΨq[(α_i, A_i); (β_j, B_j); z].
#[derive(Debug, Clone, PartialEq)]
pub struct FoxWrightSpec {
    upper: Vec<(ComplexValue, f64)>,
    lower: Vec<(ComplexValue, f64)>,
}

impl FoxWrightSpec {
    pub fn new(upper: Vec<(ComplexValue, f64)>, lower: Vec<(ComplexValue, f64)>) -> Result<Self> {
        let bad = upper.iter().chain(lower.iter()).any(|&(_, c)| c == 0.0 || !c.is_finite());
        if bad {
            return Err(Error::ParameterDomain("Fox-Wright coefficients must be finite and non-zero".into()));
        }
        Ok(Self { upper, lower })
    }

    pub fn real(upper: &[(f64, f64)], lower: &[(f64, f64)]) -> Result<Self> {
        let lift = |v: &[(f64, f64)]| v.iter().map(|&(a, c)| (ComplexValue::new(a, 0.0), c)).collect();
        Self::new(lift(upper), lift(lower))
    }

    pub fn upper(&self) -> &[(ComplexValue, f64)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(ComplexValue, f64)] {
        &self.lower
    }

    /// Whether every coefficient is exactly 1 (the pFq reduction).
    pub fn unit_coefficients(&self) -> bool {
        self.upper.iter().chain(self.lower.iter()).all(|&(_, c)| c == 1.0)
    }

    /// Δ* = ΣB_j − ΣA_i.
    pub fn delta_star(&self) -> f64 {
        self.lower.iter().map(|p| p.1).sum::<f64>() - self.upper.iter().map(|p| p.1).sum::<f64>()
    }

    /// t_{k+1} / (t_k z) for terms that are non-zero at both k and k + 1.
    fn term_ratio(&self, k: usize) -> Result<ComplexValue> {
        let kf = k as f64;
        let mut r = ComplexValue::new(1.0 / (kf + 1.0), 0.0);
        for &(a, c) in &self.upper {
            r *= gamma_ratio(a + c * kf, c)?;
        }
        for &(b, c) in &self.lower {
            r /= gamma_ratio(b + c * kf, c)?;
        }
        Ok(r)
    }

    /// ln of ∏Γ(α_i + kA_i) / (∏Γ(β_j + kB_j) k!), or `None` for an exact zero
    /// term (a denominator gamma at a pole).
    pub(crate) fn ln_coefficient(&self, k: usize) -> Result<Option<ComplexValue>> {
        let kf = k as f64;
        let mut acc = -log_gamma(ComplexValue::new(kf + 1.0, 0.0))?;
        for &(a, c) in &self.upper {
            acc += log_gamma(a + c * kf).map_err(|_| Error::NumeratorPole(k))?;
        }
        for &(b, c) in &self.lower {
            match log_gamma(b + c * kf) {
                Ok(v) => acc -= v,
                Err(_) => return Ok(None),
            }
        }
        Ok(Some(acc))
    }
}

/// Derived Fox-Wright quantities and the contour-integral classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoxWrightClass {
    pub delta_star: f64,
    /// δ* = ∏|A_i|^{-A_i} ∏|B_j|^{B_j}; reported, not used in any decision.
    pub small_delta_star: f64,
    pub mu_star: ComplexValue,
    pub sigma_star: f64,
    pub class: ConvergenceClass,
}

pub fn fox_wright_classify(spec: &FoxWrightSpec) -> FoxWrightClass {
    let delta_star = spec.delta_star();
    let small_delta_star = spec.upper.iter().map(|&(_, a)| a.abs().powf(-a)).product::<f64>()
        * spec.lower.iter().map(|&(_, b)| b.abs().powf(b)).product::<f64>();
    let (p, q) = (spec.upper.len() as f64, spec.lower.len() as f64);
    let mu_star = spec.lower.iter().map(|p| p.0).sum::<ComplexValue>()
        - spec.upper.iter().map(|p| p.0).sum::<ComplexValue>()
        + (p - q) / 2.0;
    let sigma_star = 1.0 - delta_star;
    let class = if sigma_star > 1e-12 {
        ConvergenceClass::new(ConvergenceKind::SectorRestricted, ComplexValue::new(0.5 * PI * sigma_star, 0.0))
    } else if sigma_star.abs() <= 1e-12 && mu_star.re > 0.5 {
        // Only the ray arg(-z) = 0 is admitted.
        ConvergenceClass::new(ConvergenceKind::SectorRestricted, ComplexValue::new(0.0, 0.0))
    } else {
        ConvergenceClass::new(ConvergenceKind::Divergent, ComplexValue::new(0.0, 0.0))
    };
    FoxWrightClass { delta_star, small_delta_star, mu_star, sigma_star, class }
}

/// Sums the Fox-Wright series. Term ratios are exact products for integer
/// coefficients and log-gamma differences otherwise; after a zero term the
/// next term is rebuilt from the log-domain coefficient.
///
/// The series itself converges for every z when 1 + Δ* > 0; that, rather
/// than the contour classification of [`fox_wright_classify`], gates the
/// evaluation. With 1 + Δ* = 0 the series is attempted and reports
/// `NoConvergence` outside its disk.
pub fn fox_wright_eval(spec: &FoxWrightSpec, z: ComplexValue, tol: f64) -> Result<SeriesSum> {
    let zero = ComplexValue::new(0.0, 0.0);
    if z != zero && 1.0 + spec.delta_star() < -1e-12 {
        return Err(Error::DivergentInput);
    }
    let mut acc = SeriesAccumulator::new(tol);
    let mut term = match spec.ln_coefficient(0)? {
        Some(c) => c.exp(),
        None => zero,
    };
    if acc.push(term) || z == zero {
        return Ok(acc.finish());
    }
    let ln_z = z.ln();
    for k in 1..MAX_TERMS {
        term = if spec.lower.iter().any(|&(b, c)| nonpositive_integer(b + c * k as f64).is_some()) {
            zero
        } else if spec.upper.iter().any(|&(a, c)| nonpositive_integer(a + c * k as f64).is_some()) {
            return Err(Error::NumeratorPole(k));
        } else if term == zero {
            match spec.ln_coefficient(k)? {
                Some(c) => (c + ln_z * k as f64).exp(),
                None => zero,
            }
        } else {
            term * spec.term_ratio(k - 1)? * z
        };
        if acc.push(term) {
            return Ok(acc.finish());
        }
    }
    Err(Error::NoConvergence(MAX_TERMS))
}

/// Γ(x + c) / Γ(x), as a finite product when c is a small integer.
fn gamma_ratio(x: ComplexValue, c: f64) -> Result<ComplexValue> {
    if c.fract() == 0.0 && c.abs() <= 32.0 {
        let n = c as i64;
        let mut r = ComplexValue::new(1.0, 0.0);
        if n >= 0 {
            for j in 0..n {
                r *= x + j as f64;
            }
        } else {
            for j in 1..=-n {
                r /= x - j as f64;
            }
        }
        Ok(r)
    } else {
        Ok((log_gamma(x + c)? - log_gamma(x)?).exp())
    }
}

/// Wright function Φ(α, β; z) = 0Ψ1[(β, α); z] with no upper pairs.
pub fn wright_phi(alpha: f64, beta: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if !(alpha > 0.0) {
        return Err(Error::ParameterDomain("Wright function needs alpha > 0".into()));
    }
    let spec = FoxWrightSpec::new(vec![], vec![(beta, alpha)])?;
    Ok(fox_wright_eval(&spec, z, DEFAULT_TOL)?.value)
}

/// Wright generalized Bessel function in the J_ν^μ(−x) convention:
/// returns Φ(μ, ν + 1; −x).
pub fn wright_bessel(mu: f64, nu: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    wright_phi(mu, nu + 1.0, -x)
}

/// Two-parameter Mittag-Leffler function E_{α,β}(z) = 1Ψ1[(1,1); (β, α); z].
pub fn mittag_leffler(alpha: f64, beta: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if !(alpha > 0.0) {
        return Err(Error::ParameterDomain("Mittag-Leffler function needs alpha > 0".into()));
    }
    let spec = FoxWrightSpec::new(vec![(ComplexValue::new(1.0, 0.0), 1.0)], vec![(beta, alpha)])?;
    Ok(fox_wright_eval(&spec, z, DEFAULT_TOL)?.value)
}
