//! Meijer G-functions by numerical Mellin-Barnes quadrature.
//!
//! With the right pole family from Γ(b_j - ζ), j ≤ m, and the left family
//! from Γ(1 - a_j + ζ), j ≤ n,
//!
//! G(X) = 1/(2πi) ∫_L Π Γ(b_j - ζ) Π Γ(1 - a_j + ζ)
//!                    / (Π Γ(1 - b_j + ζ) Π Γ(a_j - ζ)) X^ζ dζ.
//!
//! For κ > 0 the integrand decays like exp(-κπ|t|) on a vertical line and L
//! is that line. For κ ≤ 0 with q > p the vertical-line integral is only
//! conditionally convergent; L is then bent into the parabola
//! ζ = γ + c t² + i t, which keeps the same pole separation for real
//! parameters and decays faster than any exponential.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gammaplex::{log_gamma, nonpositive_integer};
use crate::summation::ComplexKahanSum;
use crate::ComplexValue;

/// Spacing of pole offsets below which two pole families count as colliding.
pub const COLLISION_TOL: f64 = 1e-9;

const SCAN_STEP: f64 = 0.25;
const SCAN_LIMIT: f64 = 5000.0;
const DECAY_RATIO: f64 = 1e-18;

#[derive(Debug, Clone, PartialEq)]
pub struct MeijerGSpec {
    m: usize,
    n: usize,
    a: Vec<ComplexValue>,
    b: Vec<ComplexValue>,
    kappa: f64,
}

impl MeijerGSpec {
    pub fn new(m: usize, n: usize, a: Vec<ComplexValue>, b: Vec<ComplexValue>) -> Result<Self> {
        let (p, q) = (a.len(), b.len());
        if m < 1 || m > q || n > p {
            return Err(Error::ParameterDomain(format!("need 1 <= m <= q and n <= p, got m={m} n={n} p={p} q={q}")));
        }
        // A right pole b_j + k meets a left pole a_i - 1 - l iff a_i - b_j is a
        // positive integer.
        for ai in &a[..n] {
            for bj in &b[..m] {
                let d = ai - bj;
                let r = d.re.round();
                if r >= 1.0 && (d - r).norm() < COLLISION_TOL {
                    return Err(Error::PoleCollision(format!("a = {ai}, b = {bj}")));
                }
            }
        }
        let kappa = (m + n) as f64 - (p + q) as f64 / 2.0;
        Ok(Self { m, n, a, b, kappa })
    }

    pub fn real(m: usize, n: usize, a: &[f64], b: &[f64]) -> Result<Self> {
        Self::new(
            m,
            n,
            a.iter().map(|&x| ComplexValue::new(x, 0.0)).collect(),
            b.iter().map(|&x| ComplexValue::new(x, 0.0)).collect(),
        )
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[ComplexValue] {
        &self.a
    }

    pub fn b(&self) -> &[ComplexValue] {
        &self.b
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    fn is_real(&self) -> bool {
        self.a.iter().chain(self.b.iter()).all(|x| x.im == 0.0)
    }

    /// G^{n,m}_{q,p}(1/X | 1 - b; 1 - a), equal to this G at X.
    pub fn inverted(&self) -> Result<Self> {
        let flip = |v: &[ComplexValue]| v.iter().map(|x| 1.0 - x).collect();
        Self::new(self.n, self.m, flip(&self.b), flip(&self.a))
    }

    /// Sum of the log-gamma factors at ζ; `None` where a denominator gamma has
    /// a pole (the integrand vanishes there).
    fn ln_gamma_ratio(&self, zeta: ComplexValue) -> Result<Option<ComplexValue>> {
        let mut acc = ComplexValue::new(0.0, 0.0);
        for bj in &self.b[..self.m] {
            acc += log_gamma(bj - zeta)?;
        }
        for aj in &self.a[..self.n] {
            acc += log_gamma(1.0 - aj + zeta)?;
        }
        let denominators =
            self.b[self.m..].iter().map(|bj| 1.0 - bj + zeta).chain(self.a[self.n..].iter().map(|aj| aj - zeta));
        for w in denominators {
            if nonpositive_integer(w).is_some() {
                return Ok(None);
            }
            acc -= log_gamma(w)?;
        }
        Ok(Some(acc))
    }
}

/// Whether the contour integral converges for this argument: κ > 0 and
/// |arg z| < πκ.
pub fn sector_check(spec: &MeijerGSpec, z: ComplexValue) -> Result<bool> {
    if z == ComplexValue::new(0.0, 0.0) {
        return Err(Error::ZeroArgument);
    }
    Ok(spec.kappa > 0.0 && z.arg().abs() < PI * spec.kappa)
}

/// Quadrature settings for [`eval_contour`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourOptions {
    /// Trapezoid step before any halving.
    pub step: f64,
    /// Overrides the scanned truncation height.
    pub t_max: Option<f64>,
    pub max_halvings: u32,
    /// Relative change between successive halvings that counts as converged.
    pub tol: f64,
}

impl Default for ContourOptions {
    fn default() -> Self {
        Self { step: 0.05, t_max: None, max_halvings: 3, tol: 1e-12 }
    }
}

/// Contour ζ(t) = gamma + bend·t² + i t for t in [-t_max, t_max].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourPlan {
    pub gamma: f64,
    pub t_max: f64,
    pub step: f64,
    /// Zero for a vertical line.
    pub bend: f64,
}

impl ContourPlan {
    fn zeta(&self, t: f64) -> ComplexValue {
        ComplexValue::new(self.gamma + self.bend * t * t, t)
    }

    /// dζ/(2πi dt).
    fn weight(&self, t: f64) -> ComplexValue {
        ComplexValue::new(1.0, -2.0 * self.bend * t) / (2.0 * PI)
    }
}

/// The open interval of abscissae separating the pole families.
fn separating_interval(spec: &MeijerGSpec) -> (f64, f64) {
    let right = spec.b[..spec.m].iter().map(|b| b.re).fold(f64::INFINITY, f64::min);
    let left = spec.a[..spec.n].iter().map(|a| a.re - 1.0).fold(f64::NEG_INFINITY, f64::max);
    (left, right)
}

/// Chooses the contour for G(x), x > 0.
pub fn plan_contour(spec: &MeijerGSpec, x: f64, options: &ContourOptions) -> Result<ContourPlan> {
    if !(x > 0.0) {
        return Err(Error::ParameterDomain(format!("contour argument must be positive, got {x}")));
    }
    let (left, right) = separating_interval(spec);
    if left >= right {
        return Err(Error::NoSeparatingLine { left, right });
    }
    let gamma = if left.is_finite() { 0.5 * (left + right) } else { right - 0.5 };
    let bend = if spec.kappa > 0.0 {
        0.0
    } else if spec.q() > spec.p() && spec.is_real() {
        let saddle = x.powf(1.0 / (spec.q() - spec.p()) as f64);
        0.5 / saddle.max(1.0)
    } else {
        return Err(Error::NoDecay(format!("kappa = {} and the contour cannot be bent", spec.kappa)));
    };
    let mut plan = ContourPlan { gamma, t_max: 0.0, step: options.step, bend };
    plan.t_max = match options.t_max {
        Some(t) => t,
        None => scan_t_max(spec, &plan, x.ln())?,
    };
    Ok(plan)
}

/// Smallest sampled height beyond which ln|integrand| stays below the
/// running maximum by ln(1e-18).
fn scan_t_max(spec: &MeijerGSpec, plan: &ContourPlan, ln_x: f64) -> Result<f64> {
    let threshold = DECAY_RATIO.ln();
    let log_mag = |t: f64| -> Result<f64> {
        let zeta = plan.zeta(t);
        let up = spec.ln_gamma_ratio(zeta)?.map_or(f64::NEG_INFINITY, |g| g.re + zeta.re * ln_x);
        let down = spec.ln_gamma_ratio(zeta.conj())?.map_or(f64::NEG_INFINITY, |g| g.re + zeta.re * ln_x);
        Ok(up.max(down) + plan.weight(t).norm().ln())
    };
    let mut peak = f64::NEG_INFINITY;
    let mut quiet = 0;
    let mut t = 0.0;
    while t <= SCAN_LIMIT {
        let lm = log_mag(t)?;
        peak = peak.max(lm);
        if peak > f64::NEG_INFINITY && lm < peak + threshold {
            quiet += 1;
            // Eight quiet samples in a row, i.e. two units of t.
            if quiet >= 8 {
                return Ok(t - 7.0 * SCAN_STEP);
            }
        } else {
            quiet = 0;
        }
        t += SCAN_STEP;
    }
    Err(Error::NoDecay(format!("integrand still above 1e-18 of its peak at t = {SCAN_LIMIT}")))
}

#[derive(Debug, Clone, Copy)]
struct KernelNode {
    t: f64,
    /// ln of gamma ratio times the contour weight at +t and -t.
    up: Option<ComplexValue>,
    down: Option<ComplexValue>,
}

/// Precomputed contour nodes for one spec and plan.
///
/// On a vertical line the gamma ratio does not depend on the argument, so one
/// kernel serves every x; this is what makes long G-series cheap.
#[derive(Debug, Clone)]
pub struct ContourKernel {
    spec: MeijerGSpec,
    plan: ContourPlan,
    options: ContourOptions,
    /// Nodes at the finest step, t = i·step/2^max_halvings, i ≥ 0.
    nodes: Vec<KernelNode>,
}

impl ContourKernel {
    pub fn new(spec: &MeijerGSpec, plan: ContourPlan, options: ContourOptions) -> Result<Self> {
        let fine = plan.step / f64::from(1u32 << options.max_halvings);
        let count = (plan.t_max / fine).ceil() as usize;
        let mut nodes = Vec::with_capacity(count + 1);
        for i in 0..=count {
            let t = i as f64 * fine;
            let zeta = plan.zeta(t);
            let up = spec.ln_gamma_ratio(zeta)?.map(|g| g + plan.weight(t).ln());
            let down = spec.ln_gamma_ratio(zeta.conj())?.map(|g| g + plan.weight(-t).ln());
            nodes.push(KernelNode { t, up, down });
        }
        Ok(Self { spec: spec.clone(), plan, options, nodes })
    }

    /// Kernel for the vertical line, reusable for every positive argument.
    pub fn vertical(spec: &MeijerGSpec, options: ContourOptions) -> Result<Self> {
        if spec.kappa <= 0.0 {
            return Err(Error::NoDecay(format!("kappa = {} on a vertical line", spec.kappa)));
        }
        // The plan does not depend on x when the line is vertical.
        let plan = plan_contour(spec, 1.0, &options)?;
        Self::new(spec, plan, options)
    }

    pub fn plan(&self) -> &ContourPlan {
        &self.plan
    }

    pub fn spec(&self) -> &MeijerGSpec {
        &self.spec
    }

    /// G(x) from the stored nodes, halving the step until two successive
    /// trapezoid sums agree.
    pub fn eval(&self, x: f64) -> Result<ComplexValue> {
        if !(x > 0.0) {
            return Err(Error::ParameterDomain(format!("contour argument must be positive, got {x}")));
        }
        let ln_x = x.ln();
        let levels = self.options.max_halvings;
        let node_value = |node: &KernelNode, sign: f64| -> ComplexValue {
            let lg = if sign > 0.0 { node.up } else { node.down };
            match lg {
                Some(lg) => {
                    let zeta = self.plan.zeta(sign * node.t);
                    (lg + zeta * ln_x).exp()
                }
                None => ComplexValue::new(0.0, 0.0),
            }
        };
        // Pair sums over the nodes that level L adds to level L - 1.
        let level_sum = |level: u32| -> (ComplexValue, f64) {
            let stride = 1usize << (levels - level);
            let (start, step) = if level == 0 { (0, stride) } else { (stride, 2 * stride) };
            let mut sum = ComplexKahanSum::new();
            let mut l1 = 0.0;
            for (i, node) in self.nodes.iter().enumerate().skip(start).step_by(step) {
                let pair = if i == 0 { node_value(node, 1.0) } else { node_value(node, 1.0) + node_value(node, -1.0) };
                l1 += pair.norm();
                sum.add(pair);
            }
            (sum.value(), l1)
        };

        let mut h = self.plan.step;
        let (s0, l0) = level_sum(0);
        let mut value = s0 * h;
        let mut l1 = l0 * h;
        let mut change = f64::INFINITY;
        for level in 1..=levels {
            let (s, l) = level_sum(level);
            let next = 0.5 * value + s * (0.5 * h);
            h *= 0.5;
            l1 = 0.5 * l1 + l * h;
            change = (next - value).norm();
            value = next;
            let floor = 64.0 * f64::EPSILON * l1;
            if change <= self.options.tol * value.norm() + floor {
                if self.spec.is_real() && value.im.abs() > self.options.tol * value.norm() + floor {
                    return Err(Error::ImaginaryResidue(value.im.abs()));
                }
                return Ok(value);
            }
        }
        Err(Error::NotConverged { halvings: levels, change })
    }
}

/// G(x) for x > 0 by trapezoid quadrature on the planned contour.
pub fn eval_contour(spec: &MeijerGSpec, x: f64, options: &ContourOptions) -> Result<ComplexValue> {
    let plan = plan_contour(spec, x, options)?;
    ContourKernel::new(spec, plan, *options)?.eval(x)
}

/// Leading small-argument behaviour G(x) ~ C x^{b_1}, from the residue at the
/// first right-family pole b_1 (smallest Re b_j, j ≤ m).
/// Returns (C, b_1).
pub fn leading_small_argument(spec: &MeijerGSpec) -> Result<(ComplexValue, ComplexValue)> {
    let (idx, b1) = spec.b[..spec.m]
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.re.total_cmp(&y.1.re))
        .map(|(i, b)| (i, *b))
        .expect("m >= 1");
    let mut ln_c = ComplexValue::new(0.0, 0.0);
    for (j, bj) in spec.b[..spec.m].iter().enumerate() {
        if j != idx {
            ln_c += log_gamma(bj - b1)
                .map_err(|_| Error::PoleCollision(format!("b = {bj} and b = {b1} give a double pole")))?;
        }
    }
    for aj in &spec.a[..spec.n] {
        ln_c += log_gamma(1.0 - aj + b1)?;
    }
    let denominators = spec.b[spec.m..].iter().map(|bj| 1.0 - bj + b1).chain(spec.a[spec.n..].iter().map(|aj| aj - b1));
    for w in denominators {
        if nonpositive_integer(w).is_some() {
            return Ok((ComplexValue::new(0.0, 0.0), b1));
        }
        ln_c -= log_gamma(w)?;
    }
    Ok((ln_c.exp(), b1))
}

/// lim_{x→0+} G(x), finite when the leading right pole sits at 0.
pub fn limit_at_zero(spec: &MeijerGSpec) -> Result<ComplexValue> {
    let (c, b1) = leading_small_argument(spec)?;
    if b1.norm() > COLLISION_TOL {
        return Err(Error::ParameterDomain(format!(
            "G(0+) is not a finite non-zero limit when the leading pole is at {b1}"
        )));
    }
    Ok(c)
}

/// Spec, prefactor and G argument of the five Meijer-G forms of cos(z).
pub fn cosine_spec(variant: u8, z: f64) -> Result<(MeijerGSpec, f64, f64)> {
    let x2 = z * z / 4.0;
    let root_pi = PI.sqrt();
    let out = match variant {
        1 => (MeijerGSpec::real(1, 0, &[], &[0.0, 0.5])?, root_pi, x2),
        2 => (MeijerGSpec::real(1, 0, &[], &[-0.25, 0.25])?, (PI * z / 2.0).sqrt(), x2),
        3 => (MeijerGSpec::real(1, 0, &[], &[0.5, 1.0])?, 2.0 * root_pi / z, x2),
        4 => (MeijerGSpec::real(1, 0, &[], &[-0.5, 0.0])?, root_pi * z / 2.0, x2),
        5 => (MeijerGSpec::real(2, 0, &[], &[0.0, 0.5, 0.25, 0.75])?, (2.0 * PI).sqrt(), z.powi(4) / 256.0),
        _ => return Err(Error::ParameterDomain(format!("cosine variant {variant} not in 1..=5"))),
    };
    Ok(out)
}

/// cos(z) for z > 0 through the chosen Meijer-G representation.
pub fn cosine_rep(variant: u8, z: f64, options: &ContourOptions) -> Result<ComplexValue> {
    if !(z > 0.0) {
        return Err(Error::ParameterDomain(format!("cosine_rep needs z > 0, got {z}")));
    }
    let (spec, prefactor, x) = cosine_spec(variant, z)?;
    Ok(eval_contour(&spec, x, options)? * prefactor)
}
