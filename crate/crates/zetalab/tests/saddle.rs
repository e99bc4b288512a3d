use core::f64::consts::PI;

use proptest::prelude::*;
use zetalab::explicit::{f_phase, RadicalSign};
use zetalab::quad::Serial;
use zetalab::saddle::*;
use zetalab::Complex64;

fn opts() -> BenchOptions {
    BenchOptions::default()
}

fn pinned_spec() -> ExpIntegralSpec {
    ExpIntegralSpec {
        alpha: 0.6,
        beta: 0.6,
        gamma: 1.0,
        a_lo: 0.01,
        b_hi: 200.0,
        k_freq: 1.0,
        t: 100.0,
        sign: Sign::Plus,
        small_k: 1.0,
    }
}

#[test]
fn pinned_integral_against_high_precision() {
    let r = exp_integral_lhs(&pinned_spec(), &opts(), &Serial).unwrap();
    let want = Complex64::new(-0.728_422_328_136_902_3, -0.805_834_825_320_485_3);
    assert!((r.value - want).norm() < 1e-9, "{}", r.value);
    let tight = BenchOptions { quad: zetalab::quad::QuadOptions { abs_tol: 2.5e-11, rel_tol: 2.5e-11, ..opts().quad }, ..opts() };
    let s = exp_integral_lhs(&pinned_spec(), &tight, &Serial).unwrap();
    assert!((s.value - r.value).norm() <= r.abs_error_estimate + s.abs_error_estimate);
}

#[test]
fn monotone_phase_against_fixed_step_simpson() {
    // T = 0 with the minus sign: exp(-2 pi i k y) over [0.5, 3]
    let s = ExpIntegralSpec {
        alpha: 0.6,
        beta: 0.6,
        gamma: 1.0,
        a_lo: 0.5,
        b_hi: 3.0,
        k_freq: 1.0,
        t: 0.0,
        sign: Sign::Minus,
        small_k: 1.0,
    };
    let r = exp_integral_lhs(&s, &opts(), &Serial).unwrap();
    let h = 1e-3;
    let n = ((s.b_hi - s.a_lo) / h).round() as usize;
    let f = |y: f64| {
        let (si, co) = s.phase(y).sin_cos();
        Complex64::new(co, si) * s.modulus(y)
    };
    let mut acc = f(s.a_lo) + f(s.b_hi);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += f(s.a_lo + i as f64 * h) * w;
    }
    let simpson = acc * (h / 3.0);
    assert!((r.value - simpson).norm() < 1e-10, "{} vs {simpson}", r.value);
}

#[test]
fn integrand_modulus() {
    let s = pinned_spec();
    let y: f64 = 0.3;
    let want = y.powf(-0.6) * 1.3f64.powf(-0.6) / (1.3f64 / 0.3).ln();
    assert!((s.modulus(y) - want).abs() < 1e-14);
}

#[test]
fn saddle_phase_matches_f_pieces() {
    for (t, k) in [(100.0, 1.0), (400.0, 5.0), (2.0 * PI, 1.0)] {
        let v = saddle_v(t, k);
        let w = 2.0f64 * t * zetalab::special::arcsinh((PI * k / (2.0 * t)).sqrt());
        assert!((t * v - w).abs() < 1e-12 * w);
        // f(T, k) = TV + sqrt(2 pi k T + pi^2 k^2) - pi/4 and 2 pi k U is the same radical
        let f = f_phase(t, k, RadicalSign::Plus).unwrap();
        let u = saddle_u(t, k);
        assert!((f - (t * v + 2.0 * PI * k * u - PI / 4.0)).abs() < 1e-10 * f.abs());
    }
}

#[test]
fn minus_sign_has_no_explicit_term() {
    let s = ExpIntegralSpec { sign: Sign::Minus, ..pinned_spec() };
    assert!(saddle_term(&s).is_none());
    let r = lemma2_compare(&s, &opts(), &Serial).unwrap();
    assert_eq!(r.explicit, Complex64::new(0.0, 0.0));
    assert!(r.pass);
}

#[test]
fn saddle_comparison_rejects_bad_hypotheses() {
    let mut s = pinned_spec();
    s.a_lo = 0.6;
    assert!(lemma2_compare(&s, &opts(), &Serial).is_err());
    let mut s = pinned_spec();
    s.b_hi = 50.0;
    assert!(lemma2_compare(&s, &opts(), &Serial).is_err());
    assert!(ExpIntegralSpec::with_defaults(1.005, 0.6, 1.0, 100.0, Sign::Plus).is_err());
}

#[test]
fn saddle_modulus_scales_like_quarter_power() {
    let m: Vec<f64> = [1e2, 1e3, 1e4]
        .iter()
        .map(|&t| {
            let s = ExpIntegralSpec { alpha: 0.5, beta: 0.5, gamma: 1.0, t, b_hi: t, ..pinned_spec() };
            saddle_term(&s).unwrap().norm()
        })
        .collect();
    for w in m.windows(2) {
        let slope = (w[1] / w[0]).log10();
        assert!((slope - 0.25).abs() <= 0.05, "{slope}");
    }
}

#[test]
fn lemma2_grid_passes() {
    for al in [0.55, 0.6, 0.65] {
        for k in [1.0, 2.0, 5.0] {
            for t in [100.0, 400.0] {
                for sg in [Sign::Plus, Sign::Minus] {
                    let s = ExpIntegralSpec::with_defaults(al, al, k, t, sg).unwrap();
                    let r = lemma2_compare(&s, &opts(), &Serial).unwrap();
                    assert!(r.pass, "{s:?}: {} vs {}", r.difference, r.budget.total());
                }
            }
        }
    }
}

#[test]
fn decay_modulus_and_derivative_sign() {
    let x: f64 = 100.0;
    let want = x.powf(-1.5) / zetalab::special::arcsinh((PI / 200.0).sqrt()) * (0.25 + 100.0 / (2.0 * PI)).powf(-0.25);
    assert!((decay_modulus(1.5, 1.0, x) - want).abs() < 1e-15);
    for i in 0..200 {
        let x = 10.0 + 10.0 * i as f64;
        for k in [0.5, 1.0, 3.0] {
            let d = decay_phase_derivative(k, x);
            assert!(d < 0.0, "k={k} x={x}: {d}");
            let h = 1e-4 * x;
            let fd = -(decay_phase(k, x + h) - decay_phase(k, x - h)) / (2.0 * h);
            assert!((fd - d).abs() < 1e-7);
        }
    }
}

#[test]
fn decay_table() {
    let r = lemma3_decay(1.5, 1.0, &[50.0, 100.0, 200.0, 400.0], &opts(), &Serial).unwrap();
    assert!(r.pass);
    assert!((r.rows[0].ratio - 0.700_221_631_072_877_7).abs() < 1e-9);
    assert!((r.rows[3].ratio - 0.761_249_627_489_978).abs() < 1e-9);
    assert!(lemma3_decay(1.5, 1.0, &[50.0, 120.0], &opts(), &Serial).is_err());
}

#[test]
fn phi_weight_case_with_delta() {
    let s = Lemma4Spec::with_defaults(1.5, 3, 200.0).unwrap();
    let r = lemma4_compare(&s, &opts(), &Serial).unwrap();
    assert!(r.delta);
    let want = Complex64::new(0.012_141_308_179_509_063, -0.035_625_007_919_349_46);
    assert!((r.lhs.value - want).norm() < 1e-9);
    assert!(r.pass);
    assert!((r.budget.total() - 0.019).abs() < 1e-3);
}

#[test]
fn phi_weight_case_without_delta() {
    let mut s = Lemma4Spec::with_defaults(1.5, 40, 200.0).unwrap();
    s.b_hi = 10.0 * 200f64.sqrt();
    let r = lemma4_compare(&s, &opts(), &Serial).unwrap();
    assert!(!r.delta);
    assert_eq!(r.explicit, Complex64::new(0.0, 0.0));
    assert!(r.pass);
    assert_eq!(r.budget.saddle, 0.0);
}

#[test]
fn phi_weight_hypothesis_window() {
    let mut s = Lemma4Spec::with_defaults(1.5, 3, 200.0).unwrap();
    s.a_lo = 0.1;
    assert!(lemma4_compare(&s, &opts(), &Serial).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, ..ProptestConfig::default() })]
    #[test]
    fn halving_panels_stays_within_error(al in 0.3f64..0.9, be in 0.3f64..0.9, k in 0.5f64..4.0, t in 10.0f64..150.0) {
        let s = ExpIntegralSpec::with_defaults(al, be, k, t, Sign::Plus).unwrap();
        let coarse = exp_integral_lhs(&s, &opts(), &Serial).unwrap();
        let fine = exp_integral_lhs(&s, &BenchOptions { panel_scale: 0.5, ..opts() }, &Serial).unwrap();
        prop_assert!((coarse.value - fine.value).norm() <= coarse.abs_error_estimate.max(fine.abs_error_estimate));
    }
}
