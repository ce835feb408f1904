use std::f64::consts::PI;

use proptest::prelude::*;
use ramanujan_core::gammaplex::{
    gamma, gauss_multiplication_residual, log_gamma, pochhammer, reciprocal_gamma, sin_pi,
};
use ramanujan_core::series::hurwitz_zeta;
use ramanujan_core::ComplexValue;

fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

fn complex(re: std::ops::Range<f64>, im: std::ops::Range<f64>) -> impl Strategy<Value = ComplexValue> {
    (re, im).prop_map(|(re, im)| ComplexValue::new(re, im))
}

proptest! {
    #[test]
    fn recurrence(z in complex(0.1..8.0, -5.0..5.0)) {
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-13, "z={z}");
    }

    #[test]
    fn reflection(z in complex(0.05..0.95, -3.0..3.0)) {
        let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
        let rhs = ComplexValue::new(PI, 0.0) / sin_pi(z);
        prop_assert!(rel(lhs, rhs) < 1e-13, "z={z}");
    }

    #[test]
    fn gauss_multiplication(z in complex(0.1..6.0, -4.0..4.0), m in 1u32..=5) {
        prop_assert!(gauss_multiplication_residual(z, m).unwrap() <= 1e-12);
    }

    #[test]
    fn reciprocal_matches_gamma(z in complex(-4.5..6.0, 0.1..4.0)) {
        let product = reciprocal_gamma(z) * gamma(z).unwrap();
        prop_assert!((product - 1.0).norm() < 1e-13, "z={z}");
    }

    #[test]
    fn pochhammer_is_gamma_ratio(a in complex(0.2..5.0, -2.0..2.0), n in 0u64..30) {
        let want = (log_gamma(a + n as f64).unwrap() - log_gamma(a).unwrap()).exp();
        prop_assert!(rel(pochhammer(a, n), want) < 1e-11, "a={a} n={n}");
    }

    #[test]
    fn hurwitz_shift(s in 1.5f64..6.0, a in 0.2f64..30.0) {
        // ζ(s, a) = a^{-s} + ζ(s, a + 1)
        let lhs = hurwitz_zeta(s, a).unwrap();
        let rhs = a.powf(-s) + hurwitz_zeta(s, a + 1.0).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-13 * lhs, "s={s} a={a}");
    }
}
