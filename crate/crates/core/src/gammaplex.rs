//! Complex gamma-family kernels.
//!
//! `log_gamma` uses the Stirling series after an upward recurrence shift so
//! that the series argument has modulus at least [`STIRLING_MIN_MODULUS`];
//! the left half-plane is reached through the reflection formula.
//! `reciprocal_gamma` is entire and never reports a pole.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::ComplexValue;

/// Distance below which an argument is treated as sitting on a gamma pole.
pub const POLE_THRESHOLD: f64 = 1e-14;

const STIRLING_MIN_MODULUS: f64 = 10.0;

/// B_{2k} / (2k (2k - 1)) for k = 1..10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Returns `Some(k)` when `z` lies within [`POLE_THRESHOLD`] of the
/// non-positive integer `k`.
pub fn nonpositive_integer(z: ComplexValue) -> Option<i64> {
    if z.re > 0.5 {
        return None;
    }
    let k = z.re.round();
    if (z - ComplexValue::new(k, 0.0)).norm() < POLE_THRESHOLD {
        Some(k as i64)
    } else {
        None
    }
}

/// sin(pi z) with exact zeros at the integers.
pub fn sin_pi(z: ComplexValue) -> ComplexValue {
    let n = z.re.round();
    let r = z.re - n;
    let (s, c) = (PI * r).sin_cos();
    let y = PI * z.im;
    let v = ComplexValue::new(s * y.cosh(), c * y.sinh());
    if (n as i64) % 2 == 0 {
        v
    } else {
        -v
    }
}

/// A logarithm of sin(pi z), stable for large |Im z|. Only its exponential
/// is meaningful (the imaginary part is defined modulo 2 pi).
fn ln_sin_pi(z: ComplexValue) -> ComplexValue {
    if z.im.abs() < 20.0 {
        return sin_pi(z).ln();
    }
    // Reduce Re z into [-1, 1); sin(pi z) has period 2.
    let shift = 2.0 * ((z.re + 1.0) / 2.0).floor();
    let w = (z - shift) * PI;
    let i = ComplexValue::i();
    if z.im > 0.0 {
        -i * w + ((2.0 * i * w).exp() - 1.0).ln() - (2.0 * i).ln()
    } else {
        i * w + (1.0 - (-2.0 * i * w).exp()).ln() - (2.0 * i).ln()
    }
}

fn stirling(w: ComplexValue) -> ComplexValue {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut corr = ComplexValue::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING_COEFFS {
        corr += pow * c;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_TWO_PI + corr
}

fn log_gamma_right(z: ComplexValue) -> ComplexValue {
    if z.norm() >= STIRLING_MIN_MODULUS {
        return stirling(z);
    }
    let shift = (STIRLING_MIN_MODULUS - z.re).ceil().max(0.0) as usize;
    let mut log_prod = ComplexValue::new(0.0, 0.0);
    for j in 0..shift {
        log_prod += (z + j as f64).ln();
    }
    stirling(z + shift as f64) - log_prod
}

/// Logarithm of the gamma function.
///
/// The real part is ln|Γ(z)|. On Re z ≥ 1/2 the imaginary part follows the
/// branch that is continuous from the positive real axis; in the left
/// half-plane it is fixed only modulo 2π, so `exp(log_gamma(z))` is always Γ(z).
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole(z));
    }
    if z.re >= 0.5 {
        Ok(log_gamma_right(z))
    } else {
        let reflected = log_gamma_right(1.0 - z);
        Ok(ComplexValue::new(PI.ln(), 0.0) - ln_sin_pi(z) - reflected)
    }
}

pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    Ok(log_gamma(z)?.exp())
}

/// 1/Γ(z); entire, exactly zero at the non-positive integers.
pub fn reciprocal_gamma(z: ComplexValue) -> ComplexValue {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return ComplexValue::new(0.0, 0.0);
    }
    if z.re >= 0.5 {
        return (-log_gamma_right(z)).exp();
    }
    // 1/Γ(z) = sin(πz) Γ(1 - z) / π
    let reflected = log_gamma_right(1.0 - z);
    if z.im.abs() < 20.0 {
        sin_pi(z) * reflected.exp() / PI
    } else {
        (ln_sin_pi(z) + reflected - PI.ln()).exp()
    }
}

/// Rising factorial (a)_n.
pub fn pochhammer(a: ComplexValue, n: u64) -> ComplexValue {
    if n == 0 {
        return ComplexValue::new(1.0, 0.0);
    }
    let end = a + n as f64;
    let near_pole = nonpositive_integer(a).is_some() || nonpositive_integer(end).is_some();
    if n <= 64 || near_pole || a.re <= 0.0 {
        let mut prod = ComplexValue::new(1.0, 0.0);
        for j in 0..n {
            prod *= a + j as f64;
        }
        return prod;
    }
    // Both arguments lie off the poles and in the right half-plane here.
    (log_gamma_right(end) - log_gamma_right(a)).exp()
}

/// Natural log of (a)_n, or `None` when the product contains an exact zero.
pub fn ln_pochhammer(a: ComplexValue, n: u64) -> Option<ComplexValue> {
    if n == 0 {
        return Some(ComplexValue::new(0.0, 0.0));
    }
    if let Some(k) = nonpositive_integer(a) {
        if (-k) < n as i64 {
            return None;
        }
        // (a)_n = (-1)^n (1 - a - n)_n, whose arguments are positive.
        let flipped = 1.0 - a - n as f64;
        let mag = log_gamma_right(1.0 - a) - log_gamma_right(flipped);
        let sign = if n.is_multiple_of(2) { 0.0 } else { PI };
        return Some(mag + ComplexValue::new(0.0, sign));
    }
    let end = a + n as f64;
    match (log_gamma(end), log_gamma(a)) {
        (Ok(num), Ok(den)) => Some(num - den),
        _ => {
            let p = pochhammer(a, n);
            if p == ComplexValue::new(0.0, 0.0) {
                None
            } else {
                Some(p.ln())
            }
        }
    }
}

/// e^d - 1 for complex d, accurate when d is small modulo 2πi.
fn exp_m1(d: ComplexValue) -> ComplexValue {
    let im = d.im - 2.0 * PI * (d.im / (2.0 * PI)).round();
    let half = (0.5 * im).sin();
    ComplexValue::new(d.re.exp_m1() * im.cos() - 2.0 * half * half, d.re.exp() * im.sin())
}

/// Relative residual of the Gauss-Legendre multiplication theorem
/// Γ(mz) = (2π)^{(1-m)/2} m^{mz-1/2} ∏_{j=1}^{m} Γ(z + (j-1)/m).
pub fn gauss_multiplication_residual(z: ComplexValue, m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::ParameterDomain("multiplication order must be positive".into()));
    }
    let mf = m as f64;
    let lhs = log_gamma(z * mf)?;
    let mut rhs = (z * mf - 0.5) * mf.ln() + 0.5 * (1.0 - mf) * (2.0 * PI).ln();
    for j in 0..m {
        rhs += log_gamma(z + j as f64 / mf)?;
    }
    Ok(exp_m1(rhs - lhs).norm())
}
