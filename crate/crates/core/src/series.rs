//! Series of Meijer G-functions for the Ramanujan-type cosine integrals
//!
//! I*_C(v, b, c, λ, y) = ∫₀^∞ x^{v-1} e^{-λb√x} Σ_k Θ(k)/k! e^{-ck√x} cos(xy) dx
//!
//! and its specialisations Ξ_C (Fox-Wright Θ), ∇_C (pFq Θ), I_C (binomial Θ)
//! and R_C(m, n). Term k is Θ(k)/k! times the Laplace-cosine integral at rate
//! s_k = λb + ck, and each form below writes that integral as
//! `coef · s^{-power} · G(x_coef · s^{-x_power})`.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gammaplex::{ln_pochhammer, log_gamma};
use crate::hyper::{FoxWrightSpec, PFqSpec, SeriesAccumulator, SeriesSum};
use crate::meijerg::{leading_small_argument, limit_at_zero, ContourKernel, ContourOptions, MeijerGSpec};
use crate::summation::ComplexKahanSum;
use crate::ComplexValue;

pub const DEFAULT_MAX_TERMS: usize = 2000;

/// Trailing terms used for the tail fit.
const FIT_WINDOW: usize = 400;
const FIT_COLUMNS: usize = 4;
const CHUNK: usize = 64;

/// Asymptotics of the weight Θ(k)/k!.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailModel {
    /// Faster than any power; plain truncation suffices.
    Truncate,
    /// |Θ(k)/k!| ~ C k^{weight_exponent}.
    Algebraic { weight_exponent: f64 },
}

type WeightFn = dyn Fn(usize) -> Result<ComplexValue> + Send + Sync;

/// The coefficient sequence Θ(k), stored as the weight Θ(k)/k! so that
/// factorially growing Θ never overflows.
#[derive(Clone)]
pub struct ThetaSequence {
    weight: Arc<WeightFn>,
    /// Declared bound on |Θ(k)|; infinite when no bound is claimed.
    pub bound: f64,
    pub tail: TailModel,
}

impl std::fmt::Debug for ThetaSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ThetaSequence").field("bound", &self.bound).field("tail", &self.tail).finish()
    }
}

fn ln_factorial(k: usize) -> f64 {
    log_gamma(ComplexValue::new(k as f64 + 1.0, 0.0)).map(|v| v.re).unwrap_or(f64::INFINITY)
}

impl ThetaSequence {
    /// A bounded sequence, |Θ(k)| ≤ bound.
    pub fn bounded(theta: impl Fn(usize) -> ComplexValue + Send + Sync + 'static, bound: f64) -> Self {
        let weight = move |k: usize| Ok(theta(k) * (-ln_factorial(k)).exp());
        Self { weight: Arc::new(weight), bound, tail: TailModel::Truncate }
    }

    /// Θ(k) = (λ)_k, the binomial coefficients of (1 - w)^{-λ}.
    pub fn pochhammer(lambda: f64) -> Self {
        let a = ComplexValue::new(lambda, 0.0);
        let weight = move |k: usize| {
            Ok(match ln_pochhammer(a, k as u64) {
                Some(lp) => (lp - ln_factorial(k)).exp(),
                None => ComplexValue::new(0.0, 0.0),
            })
        };
        Self {
            weight: Arc::new(weight),
            bound: f64::INFINITY,
            tail: TailModel::Algebraic { weight_exponent: lambda - 1.0 },
        }
    }

    /// Θ(k) = ∏(α_i)_k / ∏(β_j)_k.
    pub fn from_pfq(spec: &PFqSpec) -> Result<Self> {
        let (p, q) = (spec.p(), spec.q());
        let tail = if p <= q {
            TailModel::Truncate
        } else if p == q + 1 {
            TailModel::Algebraic { weight_exponent: -spec.omega().re - 1.0 }
        } else {
            return Err(Error::ParameterDomain(format!("pFq with p = {p} > q + 1 = {}", q + 1)));
        };
        let spec = spec.clone();
        let weight = move |k: usize| {
            let mut ln = ComplexValue::new(-ln_factorial(k), 0.0);
            for a in spec.numerators() {
                match ln_pochhammer(*a, k as u64) {
                    Some(v) => ln += v,
                    None => return Ok(ComplexValue::new(0.0, 0.0)),
                }
            }
            for b in spec.denominators() {
                ln -= ln_pochhammer(*b, k as u64)
                    .ok_or_else(|| Error::ParameterDomain(format!("denominator parameter {b} vanishes")))?;
            }
            Ok(ln.exp())
        };
        Ok(Self { weight: Arc::new(weight), bound: f64::INFINITY, tail })
    }

    /// Θ(k) = ∏Γ(α_i + kA_i) / ∏Γ(β_j + kB_j).
    pub fn from_fox_wright(spec: &FoxWrightSpec) -> Result<Self> {
        let delta = spec.delta_star();
        let tail = if 1.0 + delta > 1e-12 {
            TailModel::Truncate
        } else if spec.unit_coefficients() && spec.upper().len() == spec.lower().len() + 1 {
            let omega: ComplexValue = spec.lower().iter().map(|p| p.0).sum::<ComplexValue>()
                - spec.upper().iter().map(|p| p.0).sum::<ComplexValue>();
            TailModel::Algebraic { weight_exponent: -omega.re - 1.0 }
        } else {
            return Err(Error::ParameterDomain(format!(
                "Fox-Wright weights with 1 + Δ* = {} have no usable tail model",
                1.0 + delta
            )));
        };
        let spec = spec.clone();
        let weight = move |k: usize| Ok(spec.ln_coefficient(k)?.map_or(ComplexValue::new(0.0, 0.0), |c| c.exp()));
        Ok(Self { weight: Arc::new(weight), bound: f64::INFINITY, tail })
    }

    pub fn weight(&self, k: usize) -> Result<ComplexValue> {
        let w = (self.weight)(k)?;
        if self.bound.is_finite() && w.norm().ln() + ln_factorial(k) > self.bound.ln() + 1e-12 {
            return Err(Error::UnboundedTheta(k));
        }
        Ok(w)
    }
}

/// Real parameters (v, b, c, λ, y) of I*_C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamanujanParams {
    pub v: f64,
    pub b: f64,
    pub c: f64,
    pub lambda: f64,
    pub y: f64,
}

impl RamanujanParams {
    pub fn new(v: f64, b: f64, c: f64, lambda: f64, y: f64) -> Result<Self> {
        let fine = [v, b, c, lambda, y].iter().all(|x| x.is_finite());
        if !fine || v <= 0.0 || c <= 0.0 || y <= 0.0 {
            return Err(Error::ParameterDomain(format!("need v > 0, c > 0, y > 0; got v={v} c={c} y={y}")));
        }
        // With c > 0 the rates λb + ck are all positive iff λb is.
        if lambda * b <= 0.0 {
            return Err(Error::ParameterDomain(format!("rate λb = {} must be positive", lambda * b)));
        }
        Ok(Self { v, b, c, lambda, y })
    }

    /// s_k = λb + ck.
    pub fn rate(&self, k: usize) -> f64 {
        self.lambda * self.b + self.c * k as f64
    }
}

/// The five equivalent G-forms of the Laplace-cosine integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GSeriesVariant {
    V1,
    V2,
    V3,
    V4,
    V5,
}

impl GSeriesVariant {
    pub const ALL: [GSeriesVariant; 5] = [Self::V1, Self::V2, Self::V3, Self::V4, Self::V5];

    pub fn index(self) -> u8 {
        self as u8 + 1
    }
}

/// s ↦ coef · s^{-power} · G(x_coef · s^{-x_power}) with a fixed G spec.
#[derive(Debug, Clone)]
pub struct GTermFamily {
    kernel: Option<ContourKernel>,
    spec: MeijerGSpec,
    coef: f64,
    power: f64,
    x_coef: f64,
    x_power: f64,
    /// G(0+), used when x_coef = 0.
    g_zero: Option<f64>,
}

impl GTermFamily {
    pub fn new(
        spec: MeijerGSpec,
        coef: f64,
        power: f64,
        x_coef: f64,
        x_power: f64,
        options: ContourOptions,
    ) -> Result<Self> {
        if x_coef < 0.0 {
            return Err(Error::ParameterDomain(format!("G argument scale {x_coef} is negative")));
        }
        let (kernel, g_zero) = if x_coef == 0.0 {
            (None, Some(limit_at_zero(&spec)?.re))
        } else {
            (Some(ContourKernel::vertical(&spec, options)?), None)
        };
        Ok(Self { kernel, spec, coef, power, x_coef, x_power, g_zero })
    }

    /// The form for the Laplace-cosine integral
    /// ∫₀^∞ x^{v-1} e^{-s√x} cos(xy) dx.
    pub fn laplace(v: f64, y: f64, variant: GSeriesVariant, options: ContourOptions) -> Result<Self> {
        let quarter = |offsets: [f64; 4]| offsets.map(|o| (o - 2.0 * v) / 4.0);
        let x4 = 64.0 * y * y;
        let (spec, coef, power, x_coef, x_power) = match variant {
            GSeriesVariant::V1 => (
                MeijerGSpec::real(1, 4, &quarter([4.0, 3.0, 2.0, 1.0]), &[0.0, 0.5])?,
                2f64.powf(4.0 * v - 1.5) / PI,
                2.0 * v,
                x4,
                4.0,
            ),
            GSeriesVariant::V2 => (
                MeijerGSpec::real(1, 4, &quarter([3.0, 2.0, 1.0, 0.0]), &[-0.25, 0.25])?,
                y.sqrt() * 2f64.powf(4.0 * v) / PI,
                2.0 * v + 1.0,
                x4,
                4.0,
            ),
            GSeriesVariant::V3 => (
                MeijerGSpec::real(1, 4, &quarter([6.0, 5.0, 4.0, 3.0]), &[0.5, 1.0])?,
                2f64.powf(4.0 * v - 4.5) / (PI * y),
                2.0 * v - 2.0,
                x4,
                4.0,
            ),
            GSeriesVariant::V4 => (
                MeijerGSpec::real(1, 4, &quarter([2.0, 1.0, 0.0, -1.0]), &[-0.5, 0.0])?,
                y * 2f64.powf(4.0 * v + 1.5) / PI,
                2.0 * v + 2.0,
                x4,
                4.0,
            ),
            GSeriesVariant::V5 => {
                let a: Vec<f64> = (0..8).map(|j| (8.0 - j as f64 - 2.0 * v) / 8.0).collect();
                (
                    MeijerGSpec::real(2, 8, &a, &[0.0, 0.5, 0.25, 0.75])?,
                    2f64.powf(6.0 * v - 3.5) / PI.powi(3),
                    2.0 * v,
                    4f64.powi(8) * y.powi(4),
                    8.0,
                )
            }
        };
        Self::new(spec, coef, power, x_coef, x_power, options)
    }

    /// The forms of the R_C(m, n) series, each term normalised as written:
    /// coef · (2π + 2πk)^{-power} · G(x_coef / (2π + 2πk)^{x_power}).
    pub fn rc(m: u32, n: f64, variant: GSeriesVariant, options: ContourOptions) -> Result<Self> {
        let mf = f64::from(m);
        let quarter = |offsets: [f64; 4]| offsets.map(|o| (o - 2.0 * mf) / 4.0);
        let x4 = 64.0 * n * n * PI * PI;
        let (spec, coef, power, x_coef, x_power) = match variant {
            GSeriesVariant::V1 => (
                MeijerGSpec::real(1, 4, &quarter([2.0, 1.0, 0.0, -1.0]), &[0.0, 0.5])?,
                2f64.powf(4.0 * mf + 2.5) / PI,
                2.0 * mf + 2.0,
                x4,
                4.0,
            ),
            GSeriesVariant::V2 => (
                MeijerGSpec::real(1, 4, &quarter([1.0, -1.0, 0.0, -2.0]), &[-0.25, 0.25])?,
                2f64.powf(4.0 * mf + 4.0) * n.sqrt() / PI.sqrt(),
                2.0 * mf + 3.0,
                x4,
                4.0,
            ),
            GSeriesVariant::V3 => (
                MeijerGSpec::real(1, 4, &quarter([4.0, 3.0, 2.0, 1.0]), &[0.5, 1.0])?,
                2f64.powf(4.0 * mf - 0.5) / (n * PI * PI),
                2.0 * mf,
                x4,
                4.0,
            ),
            GSeriesVariant::V4 => (
                MeijerGSpec::real(1, 4, &quarter([0.0, -1.0, -2.0, -3.0]), &[-0.5, 0.0])?,
                n * 2f64.powf(4.0 * mf + 5.5),
                2.0 * mf + 4.0,
                x4,
                4.0,
            ),
            GSeriesVariant::V5 => {
                let a: Vec<f64> = (0..8).map(|j| (6.0 - j as f64 - 2.0 * mf) / 8.0).collect();
                (
                    MeijerGSpec::real(2, 8, &a, &[0.0, 0.5, 0.25, 0.75])?,
                    2f64.powf(6.0 * mf + 2.5) / PI.powi(3),
                    2.0 * mf + 2.0,
                    4f64.powi(8) * n.powi(4) * PI.powi(4),
                    8.0,
                )
            }
        };
        Self::new(spec, coef, power, x_coef, x_power, options)
    }

    pub fn spec(&self) -> &MeijerGSpec {
        &self.spec
    }

    /// The G argument at rate s.
    pub fn argument(&self, s: f64) -> f64 {
        self.x_coef * s.powf(-self.x_power)
    }

    /// coef · s^{-power} · G(argument(s)).
    pub fn term(&self, s: f64) -> Result<f64> {
        let g = match (&self.kernel, self.g_zero) {
            (Some(kernel), _) => kernel.eval(self.argument(s))?.re,
            (None, Some(g0)) => g0,
            (None, None) => unreachable!("family has a kernel or a limit"),
        };
        Ok(self.coef * s.powf(-self.power) * g)
    }

    /// Exponent p with term(s) ~ C s^{-p} as s → ∞.
    pub fn leading_power(&self) -> Result<f64> {
        if self.x_coef == 0.0 {
            return Ok(self.power);
        }
        let (_, b1) = leading_small_argument(&self.spec)?;
        Ok(self.power + self.x_power * b1.re)
    }
}

/// Output of [`tail_accelerate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEstimate {
    /// Estimate of Σ_{k ≥ K} t_k.
    pub tail: f64,
    /// Twice the relative fit residual times |tail|.
    pub error: f64,
    /// Fitted coefficients A_j.
    pub coefficients: [f64; FIT_COLUMNS],
    /// Log-log slope -d ln|t_k| / d ln(k+1) across the window.
    pub observed_exponent: f64,
}

/// Hurwitz zeta ζ(s, a) = Σ_{k≥0} (k + a)^{-s} for s > 1, a > 0, by
/// Euler-Maclaurin summation.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !(a > 0.0) {
        return Err(Error::ParameterDomain(format!("hurwitz_zeta needs s > 1, a > 0; got s={s} a={a}")));
    }
    // B_{2j} / (2j)!
    const BERNOULLI: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
        1.0 / 74724249600.0,
        -3617.0 / 10670622842880000.0,
    ];
    let n = (20.0 - a).ceil().max(0.0) as usize;
    let mut direct = crate::summation::KahanSum::new();
    for k in 0..n {
        direct.add((a + k as f64).powf(-s));
    }
    let x = a + n as f64;
    let mut sum = direct.value() + x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    // (s)_{2j-1} x^{-s-2j+1}
    let mut rising = s;
    let mut power = x.powf(-s - 1.0);
    for (j, b) in BERNOULLI.iter().enumerate() {
        sum += b * rising * power;
        let j = j as f64 + 1.0;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        power /= x * x;
    }
    Ok(sum)
}

/// Estimates Σ_{k ≥ K} t_k from trailing terms t_{k_start}, …, t_{K-1}
/// (K = k_start + terms.len()) by least squares on
/// t_k ≈ Σ_j A_j (k+1)^{-s_j} and Hurwitz-zeta tails of each power.
pub fn tail_accelerate(terms: &[f64], k_start: usize, exponents: &[f64]) -> Result<TailEstimate> {
    if terms.len() < 8 {
        return Err(Error::ParameterDomain(format!("need at least 8 trailing terms, got {}", terms.len())));
    }
    if exponents.is_empty() || exponents.len() > FIT_COLUMNS {
        return Err(Error::ParameterDomain(format!("need 1 to {FIT_COLUMNS} decay exponents")));
    }
    let k_end = k_start + terms.len();
    let observed_exponent = {
        let (first, last) = (terms[0].abs(), terms[terms.len() - 1].abs());
        -(last.ln() - first.ln()) / (((k_end) as f64).ln() - ((k_start + 1) as f64).ln())
    };
    if terms.iter().all(|t| *t == 0.0) {
        return Ok(TailEstimate {
            tail: 0.0,
            error: 0.0,
            coefficients: [0.0; FIT_COLUMNS],
            observed_exponent: f64::NAN,
        });
    }
    if let Some(s) = exponents.iter().find(|s| !(**s > 1.0)) {
        return Err(Error::ParameterDomain(format!("decay exponent {s} gives a divergent tail")));
    }

    // Columns scaled to unit norm before the SVD.
    let rows = terms.len();
    let cols = exponents.len();
    let mut design = DMatrix::<f64>::zeros(rows, cols);
    for (i, k) in (k_start..k_end).enumerate() {
        for (j, s) in exponents.iter().enumerate() {
            design[(i, j)] = ((k + 1) as f64).powf(-s);
        }
    }
    let scales: Vec<f64> = (0..cols).map(|j| design.column(j).norm()).collect();
    for (j, scale) in scales.iter().enumerate() {
        design.column_mut(j).scale_mut(1.0 / scale);
    }
    let rhs = DVector::from_column_slice(terms);
    let svd = design.clone().svd(true, true);
    let sol = svd.solve(&rhs, 1e-13).map_err(|e| Error::ParameterDomain(format!("least squares failed: {e}")))?;
    let residual = (&design * &sol - &rhs).norm() / (rows as f64).sqrt();

    let mut coefficients = [0.0; FIT_COLUMNS];
    for j in 0..cols {
        coefficients[j] = sol[j] / scales[j];
    }
    let leading = (coefficients[0] * (k_end as f64).powf(-exponents[0])).abs();
    if residual > 0.1 * leading {
        return Err(Error::FitUnstable { residual, leading });
    }
    let mut tail = 0.0;
    for (a, s) in coefficients.iter().zip(exponents) {
        tail += a * hurwitz_zeta(*s, (k_end + 1) as f64)?;
    }
    let rms = (terms.iter().map(|t| t * t).sum::<f64>() / rows as f64).sqrt();
    let error = 2.0 * (residual / rms) * tail.abs();
    Ok(TailEstimate { tail, error, coefficients, observed_exponent })
}

/// A G-series sum with its acceleration diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GSeriesOutcome {
    pub sum: SeriesSum,
    /// Sum of the computed terms only.
    pub partial: ComplexValue,
    pub tail: Option<TailEstimate>,
}

/// Σ_k weight(k) · family.term(rate(k)).
///
/// Weights of [`TailModel::Truncate`] sequences are summed until three
/// consecutive terms fall below `tol` relative to the partial sum; algebraic
/// sequences take `max_terms` terms plus a fitted tail, and `converged` then
/// means the tail error bar is below `tol · |value|`.
pub fn sum_g_series(
    family: &GTermFamily,
    theta: &ThetaSequence,
    rate: &(dyn Fn(usize) -> f64 + Sync),
    max_terms: usize,
    tol: f64,
) -> Result<GSeriesOutcome> {
    let term = |k: usize| -> Result<ComplexValue> {
        let w = theta.weight(k)?;
        if w == ComplexValue::new(0.0, 0.0) {
            return Ok(w);
        }
        Ok(w * family.term(rate(k))?)
    };
    match theta.tail {
        TailModel::Truncate => {
            let mut acc = SeriesAccumulator::new(tol);
            let mut start = 0;
            while start < max_terms {
                let end = (start + CHUNK).min(max_terms);
                let chunk: Vec<ComplexValue> = (start..end).into_par_iter().map(term).collect::<Result<_>>()?;
                for t in chunk {
                    if acc.push(t) {
                        let sum = acc.finish();
                        return Ok(GSeriesOutcome { sum, partial: sum.value, tail: None });
                    }
                }
                start = end;
            }
            Err(Error::NoConvergence(max_terms))
        }
        TailModel::Algebraic { weight_exponent } => {
            if max_terms < 8 + FIT_COLUMNS {
                return Err(Error::ParameterDomain(format!("max_terms {max_terms} too small for a tail fit")));
            }
            let terms: Vec<ComplexValue> = (0..max_terms).into_par_iter().map(term).collect::<Result<_>>()?;
            let mut partial = ComplexKahanSum::new();
            for t in &terms {
                partial.add(*t);
            }
            let partial = partial.value();
            let s0 = family.leading_power()? - weight_exponent;
            let exponents: Vec<f64> = (0..FIT_COLUMNS).map(|j| s0 + j as f64).collect();
            let window = FIT_WINDOW.min(max_terms / 2);
            let k_start = max_terms - window;
            let re: Vec<f64> = terms[k_start..].iter().map(|t| t.re).collect();
            let im: Vec<f64> = terms[k_start..].iter().map(|t| t.im).collect();
            let tail_re = tail_accelerate(&re, k_start, &exponents)?;
            let tail_im = tail_accelerate(&im, k_start, &exponents)?;
            let value = partial + ComplexValue::new(tail_re.tail, tail_im.tail);
            let error = tail_re.error + tail_im.error;
            let last = terms[max_terms - 1];
            let prev = terms[max_terms - 2];
            let sum = SeriesSum {
                value,
                terms_used: max_terms,
                tail_estimate: error,
                converged: error <= tol * value.norm(),
                last_ratio: if prev.norm() > 0.0 { last.norm() / prev.norm() } else { 0.0 },
            };
            Ok(GSeriesOutcome { sum, partial, tail: Some(tail_re) })
        }
    }
}

/// Settings shared by the series operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub max_terms: usize,
    pub contour: ContourOptions,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self { max_terms: DEFAULT_MAX_TERMS, contour: ContourOptions::default() }
    }
}

/// I*_C as a series of G-functions.
pub fn ic_star_series(
    theta: &ThetaSequence,
    params: &RamanujanParams,
    variant: GSeriesVariant,
    tol: f64,
) -> Result<SeriesSum> {
    Ok(ic_star_series_with(theta, params, variant, tol, &SeriesOptions::default())?.sum)
}

pub fn ic_star_series_with(
    theta: &ThetaSequence,
    params: &RamanujanParams,
    variant: GSeriesVariant,
    tol: f64,
    options: &SeriesOptions,
) -> Result<GSeriesOutcome> {
    let family = GTermFamily::laplace(params.v, params.y, variant, options.contour)?;
    sum_g_series(&family, theta, &|k| params.rate(k), options.max_terms, tol)
}

/// Ξ_C: Θ from the Fox-Wright coefficients.
pub fn xi_c(spec: &FoxWrightSpec, params: &RamanujanParams, variant: GSeriesVariant, tol: f64) -> Result<SeriesSum> {
    ic_star_series(&ThetaSequence::from_fox_wright(spec)?, params, variant, tol)
}

/// ∇_C: Θ from the pFq coefficients.
pub fn nabla_c(spec: &PFqSpec, params: &RamanujanParams, variant: GSeriesVariant, tol: f64) -> Result<SeriesSum> {
    ic_star_series(&ThetaSequence::from_pfq(spec)?, params, variant, tol)
}

/// I_C(v, b, λ, y) = ∫₀^∞ x^{v-1} (e^{b√x} - 1)^{-λ} cos(xy) dx.
pub fn i_c(v: f64, b: f64, lambda: f64, y: f64, variant: GSeriesVariant, tol: f64) -> Result<SeriesSum> {
    Ok(i_c_with(v, b, lambda, y, variant, tol, &SeriesOptions::default())?.sum)
}

pub fn i_c_with(
    v: f64,
    b: f64,
    lambda: f64,
    y: f64,
    variant: GSeriesVariant,
    tol: f64,
    options: &SeriesOptions,
) -> Result<GSeriesOutcome> {
    if !(lambda > 0.0 && b > 0.0) {
        return Err(Error::ParameterDomain(format!("need λ > 0 and b > 0, got λ={lambda} b={b}")));
    }
    if !(2.0 * v > lambda) {
        return Err(Error::ParameterDomain(format!("integral diverges at 0 unless 2v > λ (v={v}, λ={lambda})")));
    }
    let params = RamanujanParams::new(v, b, b, lambda, y)?;
    ic_star_series_with(&ThetaSequence::pochhammer(lambda), &params, variant, tol, options)
}

/// R_C(m, n) from the series of G-functions written for it.
pub fn rc_series(m: u32, n: f64, variant: GSeriesVariant, tol: f64) -> Result<SeriesSum> {
    Ok(rc_series_with(m, n, variant, tol, &SeriesOptions::default())?.sum)
}

pub fn rc_series_with(
    m: u32,
    n: f64,
    variant: GSeriesVariant,
    tol: f64,
    options: &SeriesOptions,
) -> Result<GSeriesOutcome> {
    if !(n >= 0.0) {
        return Err(Error::ParameterDomain(format!("n must be non-negative, got {n}")));
    }
    let family = GTermFamily::rc(m, n, variant, options.contour)?;
    let rate = |k: usize| 2.0 * PI * (1.0 + k as f64);
    sum_g_series(&family, &ThetaSequence::pochhammer(1.0), &rate, options.max_terms, tol)
}
