use core::f64::consts::PI;

use proptest::prelude::*;
use zetalab::arithmetic::DirichletPolynomial;
use zetalab::explicit::*;
use zetalab::meansquare::{MeanSquareOptions, StripConfig};
use zetalab::quad::Serial;

fn cfg() -> StripConfig {
    StripConfig::with_sigma(0.4).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn sigma1_against_high_precision_termwise() {
    let a = DirichletPolynomial::from_real(&[1.0, 1.0]).unwrap();
    let cases = [
        (Normalization::Printed, -11.228_768_274_210_075),
        (Normalization::Transfer, 37.337_334_033_200_47),
        (Normalization::Expanded, -3.384_519_576_214_716_5),
    ];
    for (n, want) in cases {
        let v = FormulaVariant { normalization: n, ..Default::default() };
        let got = sigma1(500.0, 500.0, &cfg(), &a, &v).unwrap();
        assert!(rel(got.value, want) < 1e-10, "{n:?}: {} vs {want}", got.value);
        assert_eq!(got.terms, 500 + 1000 + 1000 + 500);
    }
}

#[test]
fn sigma2_against_high_precision_termwise() {
    let a = DirichletPolynomial::from_real(&[1.0, 1.0]).unwrap();
    let ycut = xi(500.0, 500.0);
    let cases = [
        (Normalization::Printed, Sigma2Twist::Kappa, 13.985_272_911_952_187),
        (Normalization::Transfer, Sigma2Twist::Kappa, 4.841_779_155_244_086),
        (Normalization::Printed, Sigma2Twist::KappaBar, 13.985_272_911_952_187),
    ];
    for (n, tw, want) in cases {
        let v = FormulaVariant { normalization: n, twist: tw, ..Default::default() };
        let got = sigma2(500.0, ycut, &cfg(), &a, &v).unwrap();
        assert!(rel(got.value, want) < 1e-10, "{n:?} {tw:?}: {} vs {want}", got.value);
    }
}

#[test]
fn twist_matters_once_kappa_bar_differs() {
    // pair (2, 5): kappa = 2, lambda = 5, kappa_bar = 3
    let a = DirichletPolynomial::from_real(&[0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
    let ycut = xi(300.0, 300.0);
    let k = sigma2(300.0, ycut, &cfg(), &a, &FormulaVariant::default()).unwrap();
    let kb = FormulaVariant { twist: Sigma2Twist::KappaBar, ..Default::default() };
    let kb = sigma2(300.0, ycut, &cfg(), &a, &kb).unwrap();
    assert!((k.value - kb.value).abs() > 1e-6);
}

#[test]
fn minus_radical_fails_past_its_range() {
    let a = DirichletPolynomial::one();
    let v = FormulaVariant { radical: RadicalSign::Minus, ..Default::default() };
    assert!(sigma1(100.0, 100.0, &cfg(), &a, &v).is_err());
    assert!(sigma1(100.0, 60.0, &cfg(), &a, &v).is_ok());
}

#[test]
fn residual_vanishes_for_zero_polynomial() {
    let a = DirichletPolynomial::from_real(&[0.0]).unwrap();
    let w = WindowConfig::centred(100.0).unwrap();
    let r = theorem1_residual(&w, &cfg(), &a, &FormulaVariant::default(), &MeanSquareOptions::default(), &Serial).unwrap();
    assert_eq!(r.residual, 0.0);
    let t2 =
        theorem2_reconstruction(&w, &cfg(), &a, 1.0, None, &FormulaVariant::default(), &MeanSquareOptions::default(), &Serial)
            .unwrap();
    assert_eq!(t2.difference, 0.0);
}

#[test]
fn one_level_telescoping() {
    let a = DirichletPolynomial::one();
    let w = WindowConfig::centred(300.0).unwrap();
    let r =
        theorem2_reconstruction(&w, &cfg(), &a, 1.0, Some(1), &FormulaVariant::default(), &MeanSquareOptions::default(), &Serial)
            .unwrap();
    assert_eq!(r.levels, 1);
    assert_eq!(r.level_residuals.len(), 1);
    assert!(r.difference.abs() < r.error_sum, "{} vs {}", r.difference, r.error_sum);
}

#[test]
fn cutoff_monotonicity() {
    let a = DirichletPolynomial::from_real(&[1.0, 0.5, -0.25]).unwrap();
    let v = FormulaVariant::default();
    let small = sigma1_terms(200.0, 150.0, &cfg(), &a, &v).unwrap();
    let large = sigma1_terms(200.0, 260.0, &cfg(), &a, &v).unwrap();
    for pair in 0..9 {
        let s: Vec<_> = small.iter().filter(|t| t.pair == pair).collect();
        let l: Vec<_> = large.iter().filter(|t| t.pair == pair).collect();
        assert!(l.len() >= s.len());
        for (x, y) in s.iter().zip(&l) {
            assert_eq!(x, y);
        }
    }
}

proptest! {
    #[test]
    fn xi_bounds_and_identity(t in 0.1f64..1e4, u in 0.0f64..1e4) {
        let x = xi(t, u);
        prop_assert!(x > 0.0 && x <= t / (2.0 * PI) * (1.0 + 1e-15));
        let lhs = (t / (2.0 * PI) + u / 2.0 - x).powi(2);
        let rhs = u * u / 4.0 + u * t / (2.0 * PI);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn sums_are_finite(t in 20.0f64..400.0, frac in 0.51f64..1.99, c1 in -1.0f64..1.0, c2 in -1.0f64..1.0) {
        let a = DirichletPolynomial::from_real(&[1.0, c1, c2]).unwrap();
        let y = frac * t;
        let e = explicit_terms(t, y, &cfg(), &a, &FormulaVariant::default()).unwrap();
        prop_assert!(e.sigma1.is_finite() && e.sigma2.is_finite() && e.main.is_finite());
    }
}

#[test]
fn phase_derivative_identity() {
    for i in 0..20 {
        for j in 0..20 {
            let t = 10.0 + 50.0 * i as f64;
            let u = 0.1 + 5.0 * j as f64;
            let h = 1e-4 * t;
            let d = (f_phase(t + h, u, RadicalSign::Plus).unwrap() - f_phase(t - h, u, RadicalSign::Plus).unwrap()) / (2.0 * h);
            let want = 2.0 * zetalab::special::arcsinh((PI * u / (2.0 * t)).sqrt());
            assert!((d - want).abs() < 1e-6, "T={t} u={u}: {d} vs {want}");
        }
    }
}
