use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use zetalab::arithmetic::{divisor_sigma, gcd};
use zetalab::voronoi::*;
use zetalab::Complex64;

fn spec() -> TwistedSumSpec {
    TwistedSumSpec::new(-0.2, 1, 3).unwrap()
}

fn model() -> VoronoiModel {
    let opts = VoronoiOptions { power_modulus: PowerModulus::Derived, ..Default::default() };
    VoronoiModel::new(spec(), opts, 1000.0).unwrap()
}

const ESTERMANN_CONSTANT: Complex64 = Complex64::new(0.366_960_462_448_170_3, 0.114_019_525_756_494_99);

#[test]
fn twisted_sum_brute_force_oracle() {
    // x = 10 halves the last term; x = 10.5 keeps it whole
    let v = twisted_sum(&spec(), 10.0).unwrap();
    let want = Complex64::new(0.720_668_095_030_449_4, 0.030_891_573_686_531_817);
    assert!((v - want).norm() < 1e-13, "{v}");
    assert!((model().twisted_sum(10.0).unwrap() - want).norm() < 1e-13);
    let whole = Complex64::new(-0.085_903_797_833_053_83, 1.427_915_072_083_120_6);
    assert!((twisted_sum(&spec(), 10.5).unwrap() - whole).norm() < 1e-13);
}

#[test]
fn main_terms_against_zeta_oracles() {
    let (lin, pw) = voronoi_main(&spec(), 100.0, PowerModulus::Printed).unwrap();
    assert!((lin - 149.619_854_051_403_7).abs() < 1e-10);
    assert!((pw + 825.273_014_596_147).abs() < 1e-10);
    let (_, pw) = voronoi_main(&spec(), 100.0, PowerModulus::Derived).unwrap();
    assert!((pw + 91.697_001_621_794_12).abs() < 1e-11);
}

#[test]
fn modulus_one_collapse() {
    let s = TwistedSumSpec::new(-0.3, 0, 1).unwrap();
    let abs_a = 0.3;
    let z1 = zetalab::special::zeta(Complex64::new(1.0 + abs_a, 0.0)).unwrap().re;
    let z2 = zetalab::special::zeta(Complex64::new(1.0 - abs_a, 0.0)).unwrap().re;
    for slot in [PowerModulus::Printed, PowerModulus::Derived] {
        let (lin, pw) = voronoi_main(&s, 7.0, slot).unwrap();
        assert!((lin - z1 * 7.0).abs() < 1e-13);
        assert!((pw - z2 / (1.0 - abs_a) * 7f64.powf(1.0 - abs_a)).abs() < 1e-13);
    }
}

#[test]
fn linear_term_is_homogeneous() {
    let (l1, _) = voronoi_main(&spec(), 37.25, PowerModulus::Printed).unwrap();
    let (l2, _) = voronoi_main(&spec(), 74.5, PowerModulus::Printed).unwrap();
    assert_eq!(l2, 2.0 * l1);
}

#[test]
fn fitted_constant_matches_estermann_value() {
    for x0 in [100.0, 400.0, 1000.0] {
        let opts = VoronoiOptions { power_modulus: PowerModulus::Derived, calibration_x0: x0, ..Default::default() };
        let m = VoronoiModel::new(spec(), opts, 1000.0).unwrap();
        let c = m.calibration();
        assert!(c.passes());
        assert!((c.c0 - ESTERMANN_CONSTANT).norm() < 3.0 * c.standard_error, "X0 = {x0}: {}", c.c0);
    }
}

#[test]
fn printed_modulus_exponent_shows_as_drift() {
    let m = VoronoiModel::new(spec(), VoronoiOptions::default(), 1000.0).unwrap();
    assert!(!m.calibration().passes());
    assert!(matches!(m.delta_direct(50.5), Err(zetalab::Error::Calibration(_))));
}

#[test]
fn delta_direct_has_zero_mean_on_the_window() {
    let m = model();
    let c = *m.calibration();
    let n = 30_000;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let u = c.x0.sqrt() * (1.0 + (i as f64 + 0.5) / n as f64);
        acc += m.delta_direct(u * u).unwrap();
    }
    let mean = acc / n as f64;
    assert!(mean.norm() < 0.1 * c.oscillation_rms, "{mean}");
}

#[test]
fn delta_direct_jumps_at_integers() {
    let m = model();
    for x in [17u64, 50, 123] {
        let xf = x as f64;
        let lo = m.delta_direct(xf - 1e-9).unwrap();
        let hi = m.delta_direct(xf + 1e-9).unwrap();
        let at = m.delta_direct(xf).unwrap();
        let jump = e_ratio(x % 3, 3) * divisor_sigma(-0.2, x);
        assert!((hi - lo - jump).norm() < 1e-7);
        assert!((at - 0.5 * (lo + hi)).norm() < 1e-7);
    }
}

#[test]
fn delta_direct_oracle_point() {
    let m = model();
    let d = m.delta_direct(50.5).unwrap();
    let want = Complex64::new(-0.309_549_204_488_394_85, -1.878_445_614_649_447);
    assert!((d - want).norm() < 3.0 * m.calibration().standard_error + 1e-12, "{d}");
}

#[test]
fn empty_series_is_zero() {
    let m = model();
    let plan = m.truncation_plan(0, (40.0, 60.0)).unwrap();
    let b = m.delta_bessel(50.0, &plan).unwrap();
    assert_eq!(b.value, Complex64::new(0.0, 0.0));
    assert!(b.tail_estimate > 0.0);
}

#[test]
fn bessel_terms_decay_in_dyadic_blocks() {
    let m = model();
    let terms = m.bessel_terms(50.0, 1023).unwrap();
    let mut prev = f64::INFINITY;
    for j in 2..10 {
        let block = &terms[(1 << j) - 1..(1 << (j + 1)) - 1];
        let mean = block.iter().map(|t| t.norm()).sum::<f64>() / block.len() as f64;
        assert!(mean < prev, "block {j}: {mean} vs {prev}");
        prev = mean;
    }
}

#[test]
fn bessel_series_matches_direct() {
    let m = model();
    let plan = m.truncation_plan(2000, (40.0, 400.0)).unwrap();
    let d = m.delta_direct(50.5).unwrap();
    let b = m.delta_bessel(50.5, &plan).unwrap();
    let tol = (3.0 * b.tail_estimate + m.calibration().standard_error).max(1e-3);
    assert!((d - b.value).norm() < tol);
}

#[test]
fn cosine_form_agrees_with_bessel_series() {
    let m = model();
    let plan = m.truncation_plan(2000, (200.0, 200.0)).unwrap();
    let b = m.delta_bessel(200.0, &plan).unwrap();
    let a = m.delta_asymptotic(200.0, &plan).unwrap();
    assert!((a.value - b.value).norm() <= 10.0 * 200f64.powf(0.4 - 1.25));
    let shifted = VoronoiOptions {
        power_modulus: PowerModulus::Derived,
        sine_correction: SineCorrection::ShiftedByOne,
        ..Default::default()
    };
    let s = VoronoiModel::new(spec(), shifted, 1000.0).unwrap().delta_asymptotic(200.0, &plan).unwrap();
    assert!((s.value - b.value).norm() > (a.value - b.value).norm());
}

#[test]
fn cosine_form_validity_floor() {
    let m = model();
    let plan = m.truncation_plan(10, (1.0, 10.0)).unwrap();
    assert!(matches!(m.delta_asymptotic(5.0, &plan), Err(zetalab::Error::Domain(_))));
}

#[test]
fn mean_square_windows_and_sign() {
    let m = model();
    let q = m.delta_mean_square(64.0).unwrap();
    assert!(q.value > 0.0);
    // midpoint rule on [32, 64]; the integrand jumps only at integers, which are cell edges
    let n = 32 * 400;
    let h = 32.0 / n as f64;
    let riemann: f64 = (0..n).map(|i| m.delta_direct(32.0 + (i as f64 + 0.5) * h).unwrap().norm_sqr() * h).sum();
    assert!((q.value - riemann).abs() < 1e-4 * q.value, "{} vs {riemann}", q.value);
    assert!(m.delta_mean_square(2.0).is_err());
}

#[test]
fn running_mean_stays_below_envelope() {
    let m = model();
    for j in 3..9 {
        let (lo, hi) = (f64::powi(2.0, j), f64::powi(2.0, j + 1));
        let n = 2000;
        let mean =
            (0..n).map(|i| m.delta_direct(lo + (hi - lo) * (i as f64 + 0.5) / n as f64).unwrap().norm()).sum::<f64>() / n as f64;
        assert!(mean <= 10.0 * pointwise_envelope(&spec(), hi), "block {j}");
    }
}

fn coprime_spec() -> impl Strategy<Value = (f64, u64, u64)> {
    (-0.45f64..-0.05, 2u64..12)
        .prop_flat_map(|(a, k)| (Just(a), (1..k).prop_filter("coprime", move |h| gcd(*h, k) == 1), Just(k)))
}

proptest! {
    #[test]
    fn conjugation_is_exact((a, h, k) in coprime_spec(), x in 1.0f64..300.0) {
        let s = TwistedSumSpec::new(a, h, k).unwrap();
        let t = TwistedSumSpec::new(a, k - h, k).unwrap();
        prop_assert_eq!(twisted_sum(&t, x).unwrap(), twisted_sum(&s, x).unwrap().conj());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, rng_seed: RngSeed::Fixed(20251014), ..ProptestConfig::default() })]
    #[test]
    fn doubling_terms_stays_within_tail((a, h, k) in coprime_spec(), x in 40.0f64..400.0, n in 500usize..2000) {
        let s = TwistedSumSpec::new(a, h, k).unwrap();
        let opts = VoronoiOptions { power_modulus: PowerModulus::Derived, calibration_x0: 100.0, ..Default::default() };
        let m = VoronoiModel::new(s, opts, 400.0).unwrap();
        let p1 = m.truncation_plan(n, (x, x)).unwrap();
        let p2 = m.truncation_plan(2 * n, (x, x)).unwrap();
        let v1 = m.delta_bessel(x, &p1).unwrap();
        let v2 = m.delta_bessel(x, &p2).unwrap();
        prop_assert!((v2.value - v1.value).norm() < 2.0 * v1.tail_estimate);
    }
}
