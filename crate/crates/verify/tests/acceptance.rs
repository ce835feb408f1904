//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ramanujan_core::gammaplex::{gamma, gauss_multiplication_residual, reciprocal_gamma};
use ramanujan_core::hyper::{fox_wright_eval, mittag_leffler, pfq_eval, wright_bessel, FoxWrightSpec, PFqSpec};
use ramanujan_core::meijerg::{cosine_rep, ContourOptions};
use ramanujan_core::quadratures::{laplace_sqrt_cos, ramanujan_rc, upsilon};
use ramanujan_core::series::{i_c, rc_series, GSeriesVariant, GTermFamily};
use ramanujan_core::ComplexValue;
use ramanujan_verify::suites::closed_form_table;
use ramanujan_verify::suites::theorems::{i_c_grid, i_c_oracle};
use ramanujan_verify::{run_g_identity_suite, Status, SuiteConfig};

struct Outcome {
    pass: bool,
    /// A failure that matches a documented error in the source identities
    /// exactly; it is reported as FAIL but does not fail the run.
    known_finding: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, known_finding: false, detail: detail.into() }
}

/// R_C(1, 1), 30-digit reference.
const RC_1_1: f64 = 0.002867589533121751151;

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

fn c(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}

/// Runs a criterion, enforcing `limit` on its wall time when given.
fn criterion(number: u32, name: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            out.pass = false;
            out.detail = format!("{}; over the {:.0} s limit", out.detail, limit.as_secs_f64());
        }
    }
    let status = match (out.pass, out.known_finding) {
        (true, _) => "PASS",
        (false, true) => "FAIL (known finding)",
        (false, false) => "FAIL",
    };
    println!("criterion {number} {status} {name}: {} [{:.2} s]", out.detail, elapsed.as_secs_f64());
    out.pass || out.known_finding
}

fn closed_forms_by_quadrature() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for cf in closed_form_table() {
        let got = ramanujan_rc(cf.m, cf.n).map_or(f64::NAN, |r| r.value);
        let err = rel(got, cf.value);
        worst = worst.max(err);
        if !(err <= 1e-9) {
            failures.push(format!("R_C({},{}) = {got:.15e} vs {:.15e}", cf.m, cf.n, cf.value));
        }
    }
    let mut detail = format!("10 values, worst rel {worst:.2e} (tol 1e-9)");
    if !failures.is_empty() {
        detail = format!("{detail}; {}", failures.join("; "));
    }
    outcome(failures.is_empty(), detail)
}

fn cosine_representations() -> Outcome {
    let options = ContourOptions::default();
    let (lo, hi): (f64, f64) = (0.05, 20.0);
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for i in 0..100 {
        // log-spaced, ending at 20
        let z = lo * (hi / lo).powf((i + 1) as f64 / 100.0);
        for variant in 1..=5u8 {
            let got = cosine_rep(variant, z, &options).map_or(f64::NAN, |v| v.re);
            let err = (got - z.cos()).abs();
            worst = worst.max(err);
            if !(err <= 1e-9) {
                failures += 1;
            }
        }
    }
    outcome(failures == 0, format!("500 evaluations, worst abs {worst:.2e} (tol 1e-9), {failures} over"))
}

fn term_identity() -> Outcome {
    let (v, b, y) = (1.0, 2.0 * PI, PI / 2.0);
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for variant in GSeriesVariant::ALL {
        let family = match GTermFamily::laplace(v, y, variant, ContourOptions::default()) {
            Ok(f) => f,
            Err(e) => return outcome(false, format!("{variant:?}: {e}")),
        };
        for k in 0..=50 {
            let s = b * (1.0 + k as f64);
            let got = family.term(s).unwrap_or(f64::NAN);
            let want = laplace_sqrt_cos(v, s, y).map_or(f64::NAN, |r| r.value);
            worst = worst.max(rel(got, want)).max(if got.is_nan() { f64::INFINITY } else { 0.0 });
            count += 1;
        }
    }
    outcome(worst <= 1e-8, format!("{count} terms, worst rel {worst:.2e} (tol 1e-8)"))
}

fn series_vs_oracle() -> Outcome {
    let mut grid_worst: f64 = 0.0;
    let grid = i_c_grid();
    for (v, b, lambda, y, _) in &grid {
        let got = i_c(*v, *b, *lambda, *y, GSeriesVariant::V1, 1e-6).map_or(f64::NAN, |s| s.value.re);
        let want = i_c_oracle(*v, *b, *lambda, *y).unwrap_or(f64::NAN);
        let err = rel(got, want);
        grid_worst = if err.is_nan() { f64::INFINITY } else { grid_worst.max(err) };
    }
    let mut rc_worst: f64 = 0.0;
    for cf in closed_form_table() {
        let got = rc_series(cf.m, cf.n, GSeriesVariant::V1, 1e-6).map_or(f64::NAN, |s| s.value.re);
        let err = rel(got, cf.value);
        rc_worst = if err.is_nan() { f64::INFINITY } else { rc_worst.max(err) };
    }
    outcome(
        grid_worst <= 1e-5 && rc_worst <= 1e-6,
        format!(
            "i_c grid {} points worst rel {grid_worst:.2e} (tol 1e-5); rc_series 10 values worst rel {rc_worst:.2e} (tol 1e-6)",
            grid.len()
        ),
    )
}

fn g_identities() -> Outcome {
    let records = run_g_identity_suite(&SuiteConfig::default());
    let matched = records.iter().filter(|r| r.passed()).count();
    let mut notes = Vec::new();
    let mut all_localized = true;
    for r in records.iter().filter(|r| !r.passed()) {
        let sub = |suffix: &str| r.localization.iter().find(|l| l.id.ends_with(suffix));
        // The series-vs-closed-form comparison must hold, so the fault lies
        // in the displayed identity rather than in the evaluator.
        let located = matches!(
            (sub("/PRINTED-RHS"), sub("/SCALED-LHS"), sub("/RCSERIES")),
            (Some(p), Some(l), Some(s)) if s.status == Status::Pass && (p.status == Status::Fail || l.status == Status::Fail)
        );
        all_localized &= located;
        let lhs = sub("/SCALED-LHS").map_or(f64::NAN, |l| l.lhs);
        notes.push(format!(
            "{} rel {:.3e}, scaled LHS {lhs:.10e}, printed RHS {}, rc_series {}",
            r.id,
            r.rel_residual,
            sub("/PRINTED-RHS").map_or("missing".into(), |l| l.status.to_string()),
            sub("/RCSERIES").map_or("missing".into(), |l| l.status.to_string()),
        ));
    }
    // Known: the second identity prints the G argument for n = 1 (64π²)
    // with the right side for n = 2, so its left side sums to R_C(1, 1).
    let second = records.iter().find(|r| r.id == "G-IDENTITY-2");
    let scaled = second.and_then(|r| r.localization.iter().find(|l| l.id.ends_with("/SCALED-LHS")));
    let known = records.len() == 9
        && matched == 8
        && all_localized
        && second.is_some_and(|r| !r.passed())
        && scaled.is_some_and(|l| rel(l.lhs, RC_1_1) <= 1e-8);
    let mut out = outcome(
        matched == 9,
        format!("{matched}/9 identities match at 1e-5; all failures localized: {all_localized}; {}", notes.join("; ")),
    );
    if known {
        out.known_finding = true;
        out.detail += "; second identity sums to R_C(1,1): printed argument 64π² should be 256π²";
    }
    out
}

fn reciprocity() -> Outcome {
    let q = |x: Result<ramanujan_core::quadratures::QuadratureResult, _>| x.map_or(f64::NAN, |r| r.value);
    let mut worst: f64 = 0.0;
    for n in [1.0f64, 2.0, 4.0] {
        let s = (2.0 / n).sqrt() / n;
        let rc_n = q(ramanujan_rc(0, n));
        let rc_inv = q(ramanujan_rc(0, 1.0 / n));
        let up_n = q(upsilon(n));
        let up_inv = q(upsilon(1.0 / n));
        let a = (rc_n - (s * up_inv - up_n)).abs();
        let b = (up_n - (s * rc_inv + rc_n)).abs();
        worst = if a.is_nan() || b.is_nan() { f64::INFINITY } else { worst.max(a).max(b) };
    }
    outcome(worst <= 1e-8, format!("6 relations, worst abs residual {worst:.2e} (tol 1e-8)"))
}

fn bessel_j(nu: f64, z: f64) -> f64 {
    let s = (2.0 / (PI * z)).sqrt();
    if nu == 0.5 {
        return s * z.sin();
    }
    if nu == 1.5 {
        return s * (z.sin() / z - z.cos());
    }
    let half = z / 2.0;
    let mut term = half.powf(nu) / (1..=nu as u32).map(f64::from).product::<f64>();
    let mut sum = term;
    for k in 1..80 {
        let k = k as f64;
        term *= -half * half / (k * (k + nu));
        sum += term;
    }
    sum
}

fn function_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let crel = |a: ComplexValue, b: ComplexValue| (a - b).norm() / b.norm();

    let mut gauss: f64 = 0.0;
    for _ in 0..100 {
        let z = ComplexValue::new(rng.random_range(0.1..6.0), rng.random_range(-4.0..4.0));
        let m = rng.random_range(1..=5);
        gauss = gauss.max(gauss_multiplication_residual(z, m).unwrap_or(f64::INFINITY));
    }

    let mut reduction: f64 = 0.0;
    for _ in 0..200 {
        let q = rng.random_range(1..=3);
        let p = rng.random_range(0..=q);
        let mut param = || ComplexValue::new(rng.random_range(0.2..3.0), rng.random_range(-1.0..1.0));
        let alphas: Vec<_> = (0..p).map(|_| param()).collect();
        let betas: Vec<_> = (0..q).map(|_| param()).collect();
        let z = ComplexValue::from_polar(rng.random_range(0.0..5.0), rng.random_range(-3.1..3.1));
        let fw =
            FoxWrightSpec::new(alphas.iter().map(|&a| (a, 1.0)).collect(), betas.iter().map(|&b| (b, 1.0)).collect());
        let pf = PFqSpec::new(alphas.clone(), betas.clone());
        let err = match (fw, pf) {
            (Ok(fw), Ok(pf)) => {
                let pre = alphas.iter().map(|&a| gamma(a).unwrap_or(c(f64::NAN))).product::<ComplexValue>()
                    * betas.iter().map(|&b| reciprocal_gamma(b)).product::<ComplexValue>();
                let lhs = fox_wright_eval(&fw, z, 1e-16).map_or(c(f64::NAN), |s| s.value);
                let rhs = pfq_eval(&pf, z, 1e-16).map_or(c(f64::NAN), |s| s.value);
                crel(lhs, pre * rhs)
            }
            _ => f64::NAN,
        };
        reduction = if err.is_nan() { f64::INFINITY } else { reduction.max(err) };
    }

    let mut ml: f64 = 0.0;
    for _ in 0..100 {
        let z = ComplexValue::from_polar(rng.random_range(0.0..3.0), rng.random_range(-3.1..3.1));
        let e = mittag_leffler(1.0, c(1.0), z).map_or(f64::INFINITY, |v| crel(v, z.exp()));
        let ch = mittag_leffler(2.0, c(1.0), z * z).map_or(f64::INFINITY, |v| crel(v, z.cosh()));
        ml = ml.max(e).max(ch);
    }

    let mut wb: f64 = 0.0;
    for nu in [0.0, 0.5, 1.0, 1.5] {
        for i in 1..=50 {
            let z = 0.1 * i as f64;
            let got = wright_bessel(1.0, c(nu), c(z * z / 4.0)).map_or(f64::NAN, |v| (z / 2.0).powf(nu) * v.re);
            let err = (got - bessel_j(nu, z)).abs();
            wb = if err.is_nan() { f64::INFINITY } else { wb.max(err) };
        }
    }

    outcome(
        gauss <= 1e-12 && reduction <= 1e-11 && ml <= 1e-11 && wb <= 1e-11,
        format!(
            "Gauss multiplication {gauss:.2e} (1e-12), Fox-Wright reduction {reduction:.2e} (1e-11), \
             Mittag-Leffler {ml:.2e} (1e-11), Wright-Bessel {wb:.2e} (1e-11)"
        ),
    )
}

/// The report with every runtime line blanked.
fn without_runtimes(json: &str) -> String {
    json.lines()
        .map(|l| if l.trim_start().starts_with("\"runtime_ms\"") { "runtime" } else { l })
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_verify"))
            .args(["--suite", "all", "--format", "json", "--workers", workers])
            .output()
    };
    let (first, second) = match (run("1"), run("3")) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return outcome(false, format!("cannot run verify: {e}")),
    };
    let a = without_runtimes(&String::from_utf8_lossy(&first.stdout));
    let b = without_runtimes(&String::from_utf8_lossy(&second.stdout));
    let records = a.matches("\"id\"").count();
    let same = !a.is_empty() && a == b && first.status.code() == second.status.code();
    outcome(
        same,
        format!(
            "two runs (1 and 3 workers), {records} records incl. localization, identical apart from runtime_ms: {same}"
        ),
    )
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "closed forms by quadrature", Some(Duration::from_secs(5)), closed_forms_by_quadrature),
        criterion(2, "cosine G-representations", Some(Duration::from_secs(30)), cosine_representations),
        criterion(3, "term-level identity", None, term_identity),
        criterion(4, "series vs oracle", None, series_vs_oracle),
        criterion(5, "G-function series identities", None, g_identities),
        criterion(6, "reciprocity", None, reciprocity),
        criterion(7, "function-algebra properties", None, function_algebra),
        criterion(8, "determinism", None, determinism),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed or failed only on known findings", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
