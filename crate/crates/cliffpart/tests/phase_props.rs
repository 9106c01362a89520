mod common;

use cliffpart::phase_arith::{gen_hyperbolic, phase_modulus, phase_mul, PhaseExponent};
use num_complex::Complex64;
use proptest::prelude::*;

use common::hyperbolic_series;

#[test]
fn multiplication_is_a_group_law_exhaustively() {
    for n in 2..=6u32 {
        let l = phase_modulus(n) as i64;
        assert!(l <= 12);
        let all: Vec<PhaseExponent> = (0..l).map(|e| PhaseExponent::new(n, e).unwrap()).collect();
        for &x in &all {
            assert!((x * x.inv()).is_one());
            assert!(x.pow(l).is_one());
            for &y in &all {
                assert_eq!(x * y, y * x);
                for &z in &all {
                    assert_eq!((x * y) * z, x * (y * z));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn to_complex_is_a_homomorphism(n in 2u32..=9, a in -50i64..50, b in -50i64..50) {
        let x = PhaseExponent::new(n, a).unwrap();
        let y = PhaseExponent::new(n, b).unwrap();
        let lhs = phase_mul(x, y).unwrap().to_complex();
        prop_assert!((lhs - x.to_complex() * y.to_complex()).norm() < 1e-12);
        prop_assert!((x.to_complex().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_absorbs(n in 2u32..=9, a in -50i64..50) {
        let z = PhaseExponent::zero(n).unwrap();
        prop_assert!(phase_mul(z, PhaseExponent::new(n, a).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn hyperbolic_branches_sum_to_exp(n in 2u32..=7, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let x = Complex64::new(re, im);
        let f = gen_hyperbolic(n, x).unwrap();
        prop_assert!((f.sum() - x.exp()).norm() < 1e-12 * x.exp().norm().max(1.0));
        let series = hyperbolic_series(n, x);
        for (i, expected) in series.iter().enumerate() {
            prop_assert!((f.get(i) - expected).norm() < 1e-12 * x.norm().exp().max(1.0));
        }
    }

    #[test]
    fn hyperbolic_branches_rotate(n in 2u32..=7, re in -2.0f64..2.0, im in -2.0f64..2.0) {
        // f_i(ω x) = ω^i f_i(x).
        let x = Complex64::new(re, im);
        let w = PhaseExponent::omega_pow(n, 1).unwrap().to_complex();
        let f = gen_hyperbolic(n, x).unwrap();
        let g = gen_hyperbolic(n, w * x).unwrap();
        for i in 0..n as usize {
            prop_assert!((g.get(i) - w.powu(i as u32) * f.get(i)).norm() < 1e-12 * x.norm().exp().max(1.0));
        }
    }
}

#[test]
fn non_finite_arguments_are_rejected() {
    assert!(gen_hyperbolic(3, Complex64::new(f64::NAN, 0.0)).is_err());
    assert!(gen_hyperbolic(3, Complex64::new(0.0, f64::INFINITY)).is_err());
}
