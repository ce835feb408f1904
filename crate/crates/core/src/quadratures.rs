//! Oscillatory quadrature on (0, ∞) for the Fourier-type integrals.
//!
//! Every integral is taken in the variable t = √x, where e^{-s√x} becomes
//! plain exponential decay and cos(xy) becomes the chirp cos(yt²). The range
//! (0, T] is split at the chirp zeros, at geometric breakpoints around the
//! decay scale, and each cell is integrated with 15-point Gauss-Legendre and
//! adaptive bisection.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::summation::KahanSum;

const GL_ORDER: usize = 15;
const MAX_DEPTH: u32 = 40;
/// Target accuracy relative to ∫|integrand|.
const REL_TOL: f64 = 1e-15;
/// e^{-42} ≈ 6e-19.
const DECAY_LOGS: f64 = 42.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    /// Number of top-level cells integrated.
    pub cells: usize,
}

fn gauss_legendre() -> &'static ([f64; GL_ORDER], [f64; GL_ORDER]) {
    static RULE: OnceLock<([f64; GL_ORDER], [f64; GL_ORDER])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_ORDER;
        let mut nodes = [0.0; GL_ORDER];
        let mut weights = [0.0; GL_ORDER];
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-17 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

/// P_n(x) and P_n'(x).
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gl15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (nodes, weights) = gauss_legendre();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = KahanSum::new();
    for (x, w) in nodes.iter().zip(weights) {
        sum.add(w * f(mid + half * x));
    }
    half * sum.value()
}

/// Adaptive bisection; the error estimate at each accepted leaf is the
/// difference between the whole-cell rule and the two half-cell rules.
fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, abs_tol: f64, depth: u32) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let left = gl15(f, a, mid);
    let right = gl15(f, mid, b);
    let halves = left + right;
    let diff = (halves - whole).abs();
    if diff <= abs_tol || depth >= MAX_DEPTH || mid <= a || mid >= b {
        return (halves, diff);
    }
    let (lv, le) = adaptive(f, a, mid, left, 0.5 * abs_tol, depth + 1);
    let (rv, re) = adaptive(f, mid, b, right, 0.5 * abs_tol, depth + 1);
    (lv + rv, le + re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oscillation {
    /// cos(y t²)
    Cos,
    /// sin(y t²)
    Sin,
}

/// Integrand in t: `amplitude(t)` times the chirp, where
/// amplitude(t) ~ t^origin_power near 0 and decays like e^{-t/decay_scale}.
pub struct ChirpIntegral<'a> {
    pub amplitude: &'a dyn Fn(f64) -> f64,
    pub oscillation: Oscillation,
    /// Chirp rate y; zero means no oscillation.
    pub y: f64,
    pub t_max: f64,
    pub origin_power: f64,
    pub decay_scale: f64,
}

impl ChirpIntegral<'_> {
    fn chirp(&self, t: f64) -> f64 {
        match self.oscillation {
            Oscillation::Cos => (self.y * t * t).cos(),
            Oscillation::Sin => (self.y * t * t).sin(),
        }
    }

    fn breakpoints(&self) -> Vec<f64> {
        let t_max = self.t_max;
        let mut points = Vec::new();
        if self.y > 0.0 {
            let offset = match self.oscillation {
                Oscillation::Cos => 0.5,
                Oscillation::Sin => 1.0,
            };
            let mut j = 0.0;
            loop {
                let t = ((j + offset) * PI / self.y).sqrt();
                if t >= t_max {
                    break;
                }
                points.push(t);
                j += 1.0;
            }
        }
        for j in -8..=8 {
            let t = self.decay_scale * 2f64.powi(j);
            if t < t_max {
                points.push(t);
            }
        }
        // Unit cells keep non-oscillatory stretches from being one huge cell.
        let mut t = 1.0;
        while t < t_max {
            points.push(t);
            t += 1.0;
        }
        points.push(t_max);
        points.sort_by(f64::total_cmp);
        points.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
        points
    }

    pub fn integrate(&self) -> QuadratureResult {
        let f = |t: f64| (self.amplitude)(t) * self.chirp(t);
        let points = self.breakpoints();
        let alpha = self.origin_power;
        let singular = alpha.fract() != 0.0 || alpha < 0.0;

        // First cell [0, t1]: with t = t1 u^{1/(α+1)}, t^α dt becomes
        // t1^{α+1}/(α+1) du.
        let t1 = points[0];
        let first: Box<dyn Fn(f64) -> f64 + '_> = if singular {
            let e = 1.0 / (alpha + 1.0);
            let scale = t1.powf(alpha + 1.0) * e;
            Box::new(move |u: f64| {
                let t = t1 * u.powf(e);
                if t == 0.0 {
                    0.0
                } else {
                    scale * f(t) / t.powf(alpha)
                }
            })
        } else {
            Box::new(f)
        };
        let (first_lo, first_hi) = if singular { (0.0, 1.0) } else { (0.0, t1) };

        // Coarse pass fixes the absolute tolerance.
        let mut coarse = Vec::with_capacity(points.len());
        coarse.push(gl15(&*first, first_lo, first_hi));
        for w in points.windows(2) {
            coarse.push(gl15(&f, w[0], w[1]));
        }
        let l1: f64 = coarse.iter().map(|v| v.abs()).sum();
        let cell_tol = REL_TOL * l1.max(f64::MIN_POSITIVE);

        let mut value = KahanSum::new();
        let mut err = 0.0;
        let (v, e) = adaptive(&*first, first_lo, first_hi, coarse[0], cell_tol, 0);
        value.add(v);
        err += e;
        for (w, &whole) in points.windows(2).zip(&coarse[1..]) {
            let (v, e) = adaptive(&f, w[0], w[1], whole, cell_tol, 0);
            value.add(v);
            err += e;
        }
        QuadratureResult { value: value.value(), abs_error_estimate: err, cells: points.len() }
    }
}

/// Decay of f(x) declared to [`fourier_cosine_transform`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Decay {
    /// |f(x)| ≲ e^{-rate·x}
    Exponential(f64),
    /// |f(x)| ≲ e^{-rate·√x}
    RootExponential(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayHint {
    pub decay: Decay,
    /// β with f(x) ~ x^β as x → 0; must exceed -1.
    pub origin_power: f64,
}

/// ∫₀^∞ f(x) cos(xy) dx.
pub fn fourier_cosine_transform(f: &dyn Fn(f64) -> f64, y: f64, hint: DecayHint) -> Result<QuadratureResult> {
    fourier_transform(f, y, hint, Oscillation::Cos)
}

/// ∫₀^∞ f(x) sin(xy) dx.
pub fn fourier_sine_transform(f: &dyn Fn(f64) -> f64, y: f64, hint: DecayHint) -> Result<QuadratureResult> {
    fourier_transform(f, y, hint, Oscillation::Sin)
}

fn fourier_transform(
    f: &dyn Fn(f64) -> f64,
    y: f64,
    hint: DecayHint,
    oscillation: Oscillation,
) -> Result<QuadratureResult> {
    if !(y >= 0.0) || !(hint.origin_power > -1.0) {
        return Err(Error::ParameterDomain(format!(
            "need y >= 0 and origin power > -1, got y = {y}, power = {}",
            hint.origin_power
        )));
    }
    // Solve t^α e^{-(r t)^d} = e^{-42} for the truncation height, α being the
    // power of the amplitude in t.
    let alpha = (2.0 * hint.origin_power + 1.0).max(0.0);
    let (rate, degree) = match hint.decay {
        Decay::Exponential(r) if r > 0.0 => (r.sqrt(), 2.0),
        Decay::RootExponential(r) if r > 0.0 => (r, 1.0),
        _ => return Err(Error::ParameterDomain("decay rate must be positive".into())),
    };
    let mut t_max: f64 = DECAY_LOGS.powf(1.0 / degree) / rate;
    for _ in 0..8 {
        t_max = (DECAY_LOGS + alpha * t_max.max(1.0).ln()).powf(1.0 / degree) / rate;
    }
    let decay_scale = 1.0 / rate;
    let amplitude = |t: f64| 2.0 * t * f(t * t);
    let integral = ChirpIntegral {
        amplitude: &amplitude,
        oscillation,
        y,
        t_max,
        origin_power: 2.0 * hint.origin_power + 1.0,
        decay_scale,
    };
    let result = integral.integrate();

    // The neglected tail must be as small as the hint promised.
    let tail: f64 = (0..8)
        .map(|j| {
            let a = t_max * (1.0 + j as f64 / 8.0);
            gl15(&|t: f64| amplitude(t).abs(), a, a + t_max / 8.0)
        })
        .sum();
    let scale = result.value.abs().max(result.abs_error_estimate).max(f64::MIN_POSITIVE);
    if tail > 1e-12 * scale && tail > 1e-300 {
        return Err(Error::Truncation(tail));
    }
    Ok(QuadratureResult { abs_error_estimate: result.abs_error_estimate + tail, ..result })
}

fn check_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::ParameterDomain(format!("{name} must be positive, got {value}")))
    }
}

/// ∫₀^∞ x^{v-1} e^{-s√x} cos(xy) dx.
pub fn laplace_sqrt_cos(v: f64, s: f64, y: f64) -> Result<QuadratureResult> {
    check_positive("v", v)?;
    check_positive("s", s)?;
    check_positive("y", y)?;
    let alpha = 2.0 * v - 1.0;
    let amplitude = |t: f64| 2.0 * (alpha * t.ln() - s * t).exp();
    Ok(ChirpIntegral {
        amplitude: &amplitude,
        oscillation: Oscillation::Cos,
        y,
        t_max: (30.0 / s).max(20.0),
        origin_power: alpha,
        decay_scale: 1.0 / s,
    }
    .integrate())
}

/// t / (e^{2πt} - 1), finite at 0.
fn bose(t: f64) -> f64 {
    if t == 0.0 {
        1.0 / (2.0 * PI)
    } else {
        t / (2.0 * PI * t).exp_m1()
    }
}

/// Ramanujan's R_C(m, n) = ∫₀^∞ x^m cos(πnx) / (e^{2π√x} - 1) dx.
pub fn ramanujan_rc(m: u32, n: f64) -> Result<QuadratureResult> {
    ramanujan_rc_with(m, n, 20.0)
}

/// [`ramanujan_rc`] with an explicit truncation height in t = √x.
pub fn ramanujan_rc_with(m: u32, n: f64, t_max: f64) -> Result<QuadratureResult> {
    if !(n >= 0.0) {
        return Err(Error::ParameterDomain(format!("n must be non-negative, got {n}")));
    }
    let m = m as i32;
    let amplitude = |t: f64| 2.0 * t.powi(2 * m) * bose(t);
    Ok(ChirpIntegral {
        amplitude: &amplitude,
        oscillation: Oscillation::Cos,
        y: PI * n,
        t_max,
        origin_power: f64::from(2 * m),
        decay_scale: 1.0 / (2.0 * PI),
    }
    .integrate())
}

/// Υ(n) = 1/(2πn) + ∫₀^∞ sin(πnx) / (e^{2π√x} - 1) dx.
pub fn upsilon(n: f64) -> Result<QuadratureResult> {
    check_positive("n", n)?;
    let amplitude = |t: f64| 2.0 * bose(t);
    let r = ChirpIntegral {
        amplitude: &amplitude,
        oscillation: Oscillation::Sin,
        y: PI * n,
        t_max: 20.0,
        origin_power: 0.0,
        decay_scale: 1.0 / (2.0 * PI),
    }
    .integrate();
    Ok(QuadratureResult { value: r.value + 1.0 / (2.0 * PI * n), ..r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_is_exact_for_polynomials() {
        let (nodes, weights) = gauss_legendre();
        assert!((weights.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        for deg in 0..30u32 {
            let got: f64 = nodes.iter().zip(weights).map(|(x, w)| w * x.powi(deg as i32)).sum();
            let want = if deg % 2 == 1 { 0.0 } else { 2.0 / f64::from(deg + 1) };
            assert!((got - want).abs() < 1e-14, "degree {deg}");
        }
    }

    #[test]
    fn rc_examples() {
        let r = ramanujan_rc(0, 0.0).unwrap();
        assert!((r.value - 1.0 / 12.0).abs() < 1e-15);
        assert!((ramanujan_rc(0, 2.0).unwrap().value - 0.0625).abs() < 1e-15);
        let want = (13.0 - 4.0 * PI) / (8.0 * PI * PI);
        assert!((ramanujan_rc(1, 0.5).unwrap().value - want).abs() < 1e-15);
    }

    #[test]
    fn rc_reference_values() {
        // 30-digit reference quadrature.
        let table = [
            (0, 1.0, 0.07322330470336311890),
            (0, 4.0, 0.04955582617584077972),
            (0, 6.0, 0.04216525534530896407),
            (0, 0.5, 0.07957747154594766788),
            (0, 0.4, 0.08073725421878943192),
            (1, 1.0, 0.002867589533121751151),
            (1, 2.0, 0.0008074415571924506657),
            (2, 2.0, -0.0003318105965127519550),
        ];
        for (m, n, want) in table {
            let got = ramanujan_rc(m, n).unwrap();
            assert!((got.value - want).abs() < 1e-12 * want.abs(), "R_C({m},{n}) = {}", got.value);
            assert!(got.abs_error_estimate < 1e-12 * want.abs());
        }
    }

    #[test]
    fn upsilon_reference_values() {
        let table = [
            (1.0, 0.1767766952966368811),
            (2.0, 0.1022887357729738339),
            (4.0, 0.06408854171064613725),
            (0.5, 0.3295774715459476679),
            (0.25, 0.6428696254095489020),
            (100.0, 0.01131306323748547354),
        ];
        for (n, want) in table {
            let got = upsilon(n).unwrap().value;
            assert!((got - want).abs() < 1e-12 * want, "Υ({n}) = {got}");
        }
        assert!((upsilon(1.0).unwrap().value - 2f64.sqrt() / 8.0).abs() < 1e-14);
    }

    #[test]
    fn laplace_examples() {
        let near = laplace_sqrt_cos(1.0, 2.0 * PI, 1e-6).unwrap().value;
        let limit = 1.0 / (2.0 * PI * PI);
        assert!((near - limit).abs() < 1e-6 * limit);
        let far = laplace_sqrt_cos(1.0, 1e6, 1.0).unwrap().value;
        assert!((far - 2e-12).abs() < 1e-6 * 2e-12);
        // Closed form at v = 1/2: ∫ x^{-1/2} e^{-s√x} dx = 2/s as y → 0.
        let half = laplace_sqrt_cos(0.5, 3.0, 1e-9).unwrap().value;
        assert!((half - 2.0 / 3.0).abs() < 1e-9);
        assert!(laplace_sqrt_cos(0.0, 1.0, 1.0).is_err());
        assert!(laplace_sqrt_cos(1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn laplace_reference_values() {
        let table = [(1.0, 2.0 * PI, PI / 2.0, 0.046986375698636981999), (1.5, 2.0, 1.0, 0.0743748232249588527576)];
        for (v, s, y, want) in table {
            let got = laplace_sqrt_cos(v, s, y).unwrap().value;
            assert!((got - want).abs() < 1e-13 * want, "({v},{s},{y}) -> {got}");
        }
    }

    #[test]
    fn transform_examples() {
        let hint = DecayHint { decay: Decay::Exponential(1.0), origin_power: 0.0 };
        let r = fourier_cosine_transform(&|x: f64| (-x).exp(), 1.0, hint).unwrap();
        assert!((r.value - 0.5).abs() < 1e-14);
        let zero = fourier_cosine_transform(&|_| 0.0, 1.0, hint).unwrap();
        assert_eq!(zero.value, 0.0);
        let s = fourier_sine_transform(&|x: f64| (-x).exp(), 2.0, hint).unwrap();
        assert!((s.value - 0.4).abs() < 1e-14);
        // Declared decay is faster than the real one.
        let lying = DecayHint { decay: Decay::Exponential(50.0), origin_power: 0.0 };
        assert!(matches!(fourier_cosine_transform(&|x: f64| (-x).exp(), 1.0, lying), Err(Error::Truncation(_))));
    }

    #[test]
    fn truncation_height_is_negligible() {
        for &(m, n) in &[(0, 1.0), (1, 0.5), (2, 2.0), (0, 0.0)] {
            let a = ramanujan_rc_with(m, n, 20.0).unwrap().value;
            let b = ramanujan_rc_with(m, n, 40.0).unwrap().value;
            assert!((a - b).abs() < 1e-14, "R_C({m},{n}): {a} vs {b}");
        }
    }

    #[test]
    fn cell_count_grows_linearly_in_n() {
        let c1 = ramanujan_rc(0, 1.0).unwrap().cells as f64;
        let c4 = ramanujan_rc(0, 4.0).unwrap().cells as f64;
        // n·T² chirp zeros plus a fixed set of other breakpoints.
        assert!((c4 / c1 - 4.0).abs() < 0.3, "{c1} {c4}");
    }
}
