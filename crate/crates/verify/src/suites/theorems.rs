use std::f64::consts::PI;

use ramanujan_core::hyper::{mittag_leffler, wright_phi, FoxWrightSpec, PFqSpec};
use ramanujan_core::quadratures::{fourier_cosine_transform, laplace_sqrt_cos, Decay, DecayHint};
use ramanujan_core::series::{
    i_c_with, ic_star_series_with, rc_series_with, GSeriesVariant, GTermFamily, RamanujanParams, SeriesOptions,
    ThetaSequence,
};
use ramanujan_core::{ComplexValue, Result};

use super::closed_forms::closed_form_table;
use super::{contour_options, label, series_options, Check, Comparison};
use crate::config::SuiteConfig;

pub const TERM_TOL: f64 = 1e-8;
pub const VARIANT_TOL: f64 = 1e-7;
pub const SERIES_TOL: f64 = 1e-6;
pub const GRID_TOL: f64 = 1e-5;
pub const TERM_K_MAX: usize = 50;

const SUM_TOL: f64 = 1e-14;

fn real(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

/// ∫₀^∞ x^{v-1} e^{-λb√x} h(e^{-c√x}) cos(xy) dx by quadrature.
fn ic_star_oracle(params: &RamanujanParams, h: impl Fn(f64) -> f64) -> Result<f64> {
    let RamanujanParams { v, b, c, lambda, y } = *params;
    let f = |x: f64| {
        let r = x.sqrt();
        ((v - 1.0) * x.ln() - lambda * b * r).exp() * h((-c * r).exp())
    };
    let hint = DecayHint { decay: Decay::RootExponential(lambda * b), origin_power: v - 1.0 };
    Ok(fourier_cosine_transform(&f, y, hint)?.value)
}

/// ∫₀^∞ x^{v-1} (e^{b√x} - 1)^{-λ} cos(xy) dx by quadrature.
pub fn i_c_oracle(v: f64, b: f64, lambda: f64, y: f64) -> Result<f64> {
    let f = |x: f64| ((v - 1.0) * x.ln() - lambda * (b * x.sqrt()).exp_m1().ln()).exp();
    let hint = DecayHint { decay: Decay::RootExponential(lambda * b), origin_power: v - 1.0 - lambda / 2.0 };
    Ok(fourier_cosine_transform(&f, y, hint)?.value)
}

fn ic_star(theta: &ThetaSequence, params: &RamanujanParams, variant: GSeriesVariant, o: &SeriesOptions) -> Result<f64> {
    Ok(ic_star_series_with(theta, params, variant, SUM_TOL, o)?.sum.value.re)
}

fn term_checks(config: &SuiteConfig, out: &mut Vec<Check>) {
    let (v, b, y) = (1.0, 2.0 * PI, PI / 2.0);
    let options = contour_options(config);
    for variant in GSeriesVariant::ALL {
        for k in 0..=TERM_K_MAX {
            let id = format!("TERM-V{}-K{k:02}", variant.index());
            out.push(Check::new(id, config.tol_or(TERM_TOL), move || {
                let s = b * (1.0 + k as f64);
                let family = GTermFamily::laplace(v, y, variant, options)?;
                Ok(Comparison::new(family.term(s)?, laplace_sqrt_cos(v, s, y)?.value))
            }));
        }
    }
}

fn variant_checks(config: &SuiteConfig, out: &mut Vec<Check>) {
    let tol = config.tol_or(VARIANT_TOL);
    let o = series_options(config);
    for variant in &GSeriesVariant::ALL[1..] {
        let variant = *variant;
        let n = variant.index();
        out.push(Check::new(format!("VARIANTS-ICSTAR-V{n}"), tol, move || {
            let params = RamanujanParams::new(1.5, 2.0, 1.0, 1.0, 1.0)?;
            let theta = ThetaSequence::bounded(|_| real(1.0), 1.0);
            Ok(Comparison::new(
                ic_star(&theta, &params, variant, &o)?,
                ic_star(&theta, &params, GSeriesVariant::V1, &o)?,
            ))
        }));
        out.push(Check::new(format!("VARIANTS-IC-V{n}"), tol, move || {
            let ic = |variant| -> Result<f64> { Ok(i_c_with(1.5, 2.0, 1.0, 1.0, variant, SUM_TOL, &o)?.sum.value.re) };
            Ok(Comparison::new(ic(variant)?, ic(GSeriesVariant::V1)?))
        }));
        out.push(Check::new(format!("VARIANTS-RC-V{n}"), tol, move || {
            let rc = |variant| -> Result<f64> { Ok(rc_series_with(1, 0.5, variant, SUM_TOL, &o)?.sum.value.re) };
            Ok(Comparison::new(rc(variant)?, rc(GSeriesVariant::V1)?))
        }));
    }
}

fn oracle_checks(config: &SuiteConfig, out: &mut Vec<Check>) {
    let tol = config.tol_or(SERIES_TOL);
    let o = series_options(config);
    let base = || RamanujanParams::new(1.5, 2.0, 1.0, 1.0, 1.0);
    let fw = || RamanujanParams::new(1.2, 1.5, 0.8, 1.0, 2.0);
    let (beta, big_b) = (1.5, 0.7);

    out.push(Check::new("ICSTAR-DELTA", config.tol_or(TERM_TOL), move || {
        let params = base()?;
        let theta = ThetaSequence::bounded(|k| real(if k == 0 { 1.0 } else { 0.0 }), 1.0);
        Ok(Comparison::new(ic_star(&theta, &params, GSeriesVariant::V1, &o)?, laplace_sqrt_cos(1.5, 2.0, 1.0)?.value))
    }));
    out.push(Check::new("ICSTAR-BINOMIAL", tol, move || {
        let params = RamanujanParams::new(2.0, 2.0 * PI, 2.0 * PI, 1.0, PI / 2.0)?;
        let lhs = ic_star(&ThetaSequence::pochhammer(1.0), &params, GSeriesVariant::V1, &o)?;
        Ok(Comparison::new(lhs, (13.0 - 4.0 * PI) / (8.0 * PI * PI)))
    }));
    out.push(Check::new("XI-EXP", tol, move || {
        let params = fw()?;
        let spec = FoxWrightSpec::real(&[(1.0, 1.0)], &[(1.0, 1.0)])?;
        let theta = ThetaSequence::from_fox_wright(&spec)?;
        Ok(Comparison::new(ic_star(&theta, &params, GSeriesVariant::V1, &o)?, ic_star_oracle(&params, f64::exp)?))
    }));
    out.push(Check::new("XI-WRIGHT", tol, move || {
        let params = fw()?;
        let spec = FoxWrightSpec::real(&[], &[(beta, big_b)])?;
        let theta = ThetaSequence::from_fox_wright(&spec)?;
        let rhs = ic_star_oracle(&params, |w| wright_phi(big_b, real(beta), real(w)).map_or(f64::NAN, |z| z.re))?;
        Ok(Comparison::new(ic_star(&theta, &params, GSeriesVariant::V2, &o)?, rhs))
    }));
    out.push(Check::new("XI-MITTAG-LEFFLER", tol, move || {
        let params = fw()?;
        let spec = FoxWrightSpec::real(&[(1.0, 1.0)], &[(beta, big_b)])?;
        let theta = ThetaSequence::from_fox_wright(&spec)?;
        let rhs = ic_star_oracle(&params, |w| mittag_leffler(big_b, real(beta), real(w)).map_or(f64::NAN, |z| z.re))?;
        Ok(Comparison::new(ic_star(&theta, &params, GSeriesVariant::V5, &o)?, rhs))
    }));
    out.push(Check::new("NABLA-0F0", tol, move || {
        let params = base()?;
        let theta = ThetaSequence::from_pfq(&PFqSpec::real(&[], &[])?)?;
        Ok(Comparison::new(ic_star(&theta, &params, GSeriesVariant::V3, &o)?, ic_star_oracle(&params, f64::exp)?))
    }));
    out.push(Check::new("NABLA-1F0", tol, move || {
        let (v, b, lambda, y) = (1.5, 2.0, 1.3, 1.0);
        let params = RamanujanParams::new(v, b, b, lambda, y)?;
        let theta = ThetaSequence::from_pfq(&PFqSpec::real(&[lambda], &[])?)?;
        let lhs = ic_star(&theta, &params, GSeriesVariant::V1, &o)?;
        Ok(Comparison::new(lhs, i_c_with(v, b, lambda, y, GSeriesVariant::V1, SUM_TOL, &o)?.sum.value.re))
    }));
    out.push(Check::new("NABLA-ZERO", config.tol_or(TERM_TOL), move || {
        let params = base()?;
        let theta = ThetaSequence::from_pfq(&PFqSpec::real(&[0.0], &[])?)?;
        Ok(Comparison::new(ic_star(&theta, &params, GSeriesVariant::V1, &o)?, laplace_sqrt_cos(1.5, 2.0, 1.0)?.value))
    }));
    out.push(Check::new("IC-RANDOM", config.tol_or(GRID_TOL), move || {
        let (v, b, lambda, y) = (2.3, 3.1, 1.7, 0.9);
        let lhs = i_c_with(v, b, lambda, y, GSeriesVariant::V1, SUM_TOL, &o)?.sum.value.re;
        Ok(Comparison::new(lhs, i_c_oracle(v, b, lambda, y)?))
    }));
}

/// The i_c parameter grid, with the points where the integral diverges at
/// the origin (2v ≤ λ) removed.
pub fn i_c_grid() -> Vec<(f64, f64, f64, f64, String)> {
    let mut out = Vec::new();
    for (v, vl) in [(0.7, "0.7"), (1.0, "1"), (2.5, "2.5")] {
        for (b, bl) in [(1.0, "1"), (2.0 * PI, "2PI")] {
            for (lambda, ll) in [(1.0, "1"), (1.5, "1.5")] {
                if 2.0 * v <= lambda {
                    continue;
                }
                for (y, yl) in [(0.5, "0.5"), (PI / 2.0, "PI_2"), (3.0, "3")] {
                    out.push((v, b, lambda, y, format!("ICGRID-V{vl}-B{bl}-L{ll}-Y{yl}")));
                }
            }
        }
    }
    out
}

fn grid_checks(config: &SuiteConfig, out: &mut Vec<Check>) {
    let o = series_options(config);
    for (v, b, lambda, y, id) in i_c_grid() {
        out.push(Check::new(id, config.tol_or(GRID_TOL), move || {
            let lhs = i_c_with(v, b, lambda, y, GSeriesVariant::V1, SUM_TOL, &o)?.sum.value.re;
            Ok(Comparison::new(lhs, i_c_oracle(v, b, lambda, y)?))
        }));
    }
}

fn rc_series_checks(config: &SuiteConfig, out: &mut Vec<Check>) {
    let o = series_options(config);
    for cf in closed_form_table() {
        out.push(Check::new(format!("RCSERIES-{}-{}", cf.m, label(cf.n)), config.tol_or(SERIES_TOL), move || {
            let lhs = rc_series_with(cf.m, cf.n, GSeriesVariant::V1, SUM_TOL, &o)?.sum.value.re;
            Ok(Comparison::new(lhs, cf.value))
        }));
    }
}

pub(crate) fn checks(config: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    term_checks(config, &mut out);
    variant_checks(config, &mut out);
    oracle_checks(config, &mut out);
    grid_checks(config, &mut out);
    rc_series_checks(config, &mut out);
    out
}
