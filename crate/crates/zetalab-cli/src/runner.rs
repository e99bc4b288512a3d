//! Executes a resolved [`Scenario`] and builds its [`Report`].

use zetalab::arithmetic::DirichletPolynomial;
use zetalab::explicit::{
    theorem1_from_integral, theorem2_reconstruction, FormulaVariant, Normalization, RadicalSign, Sigma2Twist, Theorem1Report,
    WindowConfig,
};
use zetalab::meansquare::{e_value_with, integrate_mean_square_with, MainTermForm, MeanSquareOptions, StripConfig};
use zetalab::quad::{QuadOptions, QuadratureResult};
use zetalab::saddle::{lemma2_compare, lemma3_decay, lemma4_compare, BenchOptions, ExpIntegralSpec, Lemma4Spec, LogPhase, Sign};
use zetalab::special::PrecisionPolicy;
use zetalab::voronoi::{DualTwist, PowerModulus, SineCorrection, TwistedSumSpec, VoronoiModel, VoronoiOptions, YWeight};
use zetalab::{Complex64, Error};

use crate::error::CliError;
use crate::exec::Pool;
use crate::report::{Cell, Report, Table, Verdict};
use crate::scenario::*;

/// Run a scenario already passed through [`Scenario::resolve`].
pub fn run(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    match s.scenario.kind {
        Kind::MeanSquare => mean_square(s, pool),
        Kind::Theorem1 => theorem1(s, pool),
        Kind::Theorem2 => theorem2(s, pool),
        Kind::Voronoi => voronoi(s, pool),
        Kind::SaddleL2 => saddle_l2(s, pool),
        Kind::SaddleL3 => saddle_l3(s, pool),
        Kind::SaddleL4 => saddle_l4(s, pool),
    }
}

fn section<'a, T>(x: &'a Option<T>, name: &str) -> Result<&'a T, CliError> {
    x.as_ref().ok_or_else(|| CliError::Input(format!("missing [{name}] section (scenario not resolved?)")))
}

fn strip(s: &Scenario) -> Result<StripConfig, CliError> {
    let st = section(&s.strip, "strip")?;
    let p = PrecisionPolicy { working_precision: st.precision, ..PrecisionPolicy::default() };
    Ok(StripConfig::new(st.sigma, p)?)
}

fn polynomial(s: &Scenario) -> Result<DirichletPolynomial, CliError> {
    let p = section(&s.polynomial, "polynomial")?;
    let im = match &p.imaginary {
        Some(v) if v.len() != p.coefficients.len() => {
            return Err(CliError::Input(format!(
                "[polynomial] imaginary has {} entries, coefficients has {}",
                v.len(),
                p.coefficients.len()
            )))
        }
        Some(v) => v.clone(),
        None => vec![0.0; p.coefficients.len()],
    };
    let c = p.coefficients.iter().zip(im).map(|(&re, im)| Complex64::new(re, im)).collect();
    Ok(DirichletPolynomial::new(c)?)
}

fn heights(s: &Scenario) -> Result<Vec<f64>, CliError> {
    let g = section(&s.grid, "grid")?;
    if g.t.is_empty() {
        return Err(CliError::Input("[grid] t must not be empty".into()));
    }
    Ok(g.t.clone())
}

fn ms_options(s: &Scenario) -> Result<MeanSquareOptions, CliError> {
    let q = section(&s.quadrature, "quadrature")?;
    if !(q.abs_tol > 0.0 && q.rel_tol > 0.0 && q.panel_const > 0.0) {
        return Err(CliError::Input("[quadrature] abs_tol, rel_tol and panel_const must be positive".into()));
    }
    Ok(MeanSquareOptions {
        panel_const: q.panel_const,
        quad: QuadOptions { abs_tol: q.abs_tol, rel_tol: q.rel_tol, ..QuadOptions::default() },
    })
}

fn windows(s: &Scenario, ts: &[f64]) -> Result<Vec<WindowConfig>, CliError> {
    let w = section(&s.window, "window")?;
    ts.iter()
        .map(|&t| {
            let win = WindowConfig { c1: w.c1, c2: w.c2, y: w.y_over_t * t, t };
            win.validate()?;
            Ok(win)
        })
        .collect()
}

/// Library variant for a `[variant]` section.
pub fn formula_variant(v: &VariantSection) -> FormulaVariant {
    FormulaVariant {
        radical: match v.radical {
            RadicalName::Plus => RadicalSign::Plus,
            RadicalName::Minus => RadicalSign::Minus,
        },
        twist: match v.twist {
            TwistName::Kappa => Sigma2Twist::Kappa,
            TwistName::KappaBar => Sigma2Twist::KappaBar,
        },
        normalization: match v.normalization {
            NormalizationName::Printed => Normalization::Printed,
            NormalizationName::Expanded => Normalization::Expanded,
            NormalizationName::Transfer => Normalization::Transfer,
        },
        main: match v.main_term {
            MainName::Printed => MainTermForm::Printed,
            MainName::GcdWeighted => MainTermForm::GcdWeighted,
        },
    }
}

fn variant_labels(v: &FormulaVariant) -> [&'static str; 4] {
    [
        match v.radical {
            RadicalSign::Plus => "plus",
            RadicalSign::Minus => "minus",
        },
        match v.twist {
            Sigma2Twist::Kappa => "kappa",
            Sigma2Twist::KappaBar => "kappa-bar",
        },
        match v.normalization {
            Normalization::Printed => "printed",
            Normalization::Expanded => "expanded",
            Normalization::Transfer => "transfer",
        },
        match v.main {
            MainTermForm::Printed => "printed",
            MainTermForm::GcdWeighted => "gcd-weighted",
        },
    ]
}

fn variant_name(v: &FormulaVariant) -> String {
    variant_labels(v).join("/")
}

/// Every combination of the formula switches, configured default first.
pub fn all_variants() -> Vec<FormulaVariant> {
    let mut out = Vec::new();
    for main in [MainTermForm::Printed, MainTermForm::GcdWeighted] {
        for normalization in [Normalization::Printed, Normalization::Expanded, Normalization::Transfer] {
            for twist in [Sigma2Twist::Kappa, Sigma2Twist::KappaBar] {
                for radical in [RadicalSign::Plus, RadicalSign::Minus] {
                    out.push(FormulaVariant { radical, twist, normalization, main });
                }
            }
        }
    }
    out
}

/// `max / min` of non-negative values; 1 when all vanish.
pub fn spread(xs: &[f64]) -> f64 {
    let max = xs.iter().cloned().fold(0.0, f64::max);
    let min = xs.iter().cloned().fold(f64::INFINITY, f64::min);
    if max == 0.0 {
        1.0
    } else {
        max / min
    }
}

fn rms(xs: &[f64]) -> f64 {
    (xs.iter().map(|x| x * x).sum::<f64>() / xs.len() as f64).sqrt()
}

fn quotient(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}

fn mean_square(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    let cfg = strip(s)?;
    let a = polynomial(s)?;
    let ts = heights(s)?;
    let opts = ms_options(s)?;
    let form = MainTermForm::Printed;
    for &t in &ts {
        if !(t >= 2.0) {
            return Err(CliError::Input(format!("[grid] heights must be >= 2, got {t}")));
        }
    }
    let mut rep = Report::new(s);
    let mut tab = Table::new("mean_square", &["T", "integral", "integral_error", "panels", "evaluations", "main", "E"]);
    let mut worst: f64 = 0.0;
    for &t in &ts {
        let e = e_value_with(t, &cfg, &a, form, &opts, pool)?;
        let i = e.integral;
        worst = worst.max(i.abs_error_estimate / i.value.abs().max(1.0));
        tab.push(vec![
            t.into(),
            i.value.into(),
            i.abs_error_estimate.into(),
            i.panels.into(),
            i.evaluations.into(),
            e.main.into(),
            e.value.into(),
        ]);
    }
    rep.tables.push(tab);
    rep.set("max_rel_error", worst);
    let thr = s.verdict.max_rel_error.unwrap_or(1e-8);
    rep.verdict(Verdict::at_most("quadrature", worst, thr, "largest error estimate relative to max(1, |I|)"));
    Ok(rep)
}

/// One variant evaluated over the whole height grid.
#[derive(Debug, Clone)]
pub struct VariantRun {
    /// The variant.
    pub variant: FormulaVariant,
    /// Per-height reports.
    pub rows: Vec<Theorem1Report>,
    /// `max / min` of the normalized residual.
    pub band: f64,
    /// RMS of the oscillation increments.
    pub rms_oscillation: f64,
    /// Largest `|R|`.
    pub max_residual: f64,
    /// `max |R| / rms`.
    pub gate: f64,
}

impl VariantRun {
    fn passes(&self, band: f64, gate: f64) -> bool {
        self.band <= band && self.gate <= gate
    }
}

fn evaluate_variant(
    wins: &[WindowConfig],
    integrals: &[QuadratureResult],
    cfg: &StripConfig,
    a: &DirichletPolynomial,
    v: &FormulaVariant,
) -> Result<VariantRun, Error> {
    let rows =
        wins.iter().zip(integrals).map(|(w, i)| theorem1_from_integral(w, cfg, a, v, *i)).collect::<Result<Vec<_>, _>>()?;
    let norm: Vec<f64> = rows.iter().map(|r| r.normalized).collect();
    let osc: Vec<f64> = rows.iter().map(|r| r.oscillation).collect();
    let max_residual = rows.iter().map(|r| r.residual.abs()).fold(0.0, f64::max);
    let rms_oscillation = rms(&osc);
    Ok(VariantRun {
        variant: *v,
        band: spread(&norm),
        rms_oscillation,
        max_residual,
        gate: quotient(max_residual, rms_oscillation),
        rows,
    })
}

const RESIDUAL_COLUMNS: [&str; 21] = [
    "radical",
    "twist",
    "normalization",
    "main_term",
    "T",
    "Y",
    "integral",
    "integral_error",
    "main_lower",
    "sigma1_lower",
    "sigma2_lower",
    "terms1_lower",
    "terms2_lower",
    "main_upper",
    "sigma1_upper",
    "sigma2_upper",
    "terms1_upper",
    "terms2_upper",
    "residual",
    "normalized",
    "oscillation",
];

fn push_residuals(tab: &mut Table, run: &VariantRun) {
    let l = variant_labels(&run.variant);
    for r in &run.rows {
        let mut row: Vec<Cell> = l.iter().map(|&x| x.into()).collect();
        row.extend([
            r.window.t.into(),
            r.window.y.into(),
            r.integral.value.into(),
            r.integral.abs_error_estimate.into(),
            r.lower.main.into(),
            r.lower.sigma1.into(),
            r.lower.sigma2.into(),
            r.lower.terms_used_1.into(),
            r.lower.terms_used_2.into(),
            r.upper.main.into(),
            r.upper.sigma1.into(),
            r.upper.sigma2.into(),
            r.upper.terms_used_1.into(),
            r.upper.terms_used_2.into(),
            r.residual.into(),
            r.normalized.into(),
            r.oscillation.into(),
        ]);
        tab.push(row);
    }
}

fn theorem1(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    let cfg = strip(s)?;
    let a = polynomial(s)?;
    let ts = heights(s)?;
    let wins = windows(s, &ts)?;
    let opts = ms_options(s)?;
    let vs = section(&s.variant, "variant")?;
    let configured = formula_variant(vs);
    let band = s.verdict.band.unwrap_or(50.0);
    let gate = s.verdict.oscillation_gate.unwrap_or(0.2);

    let integrals =
        wins.iter().map(|w| integrate_mean_square_with(w.t, 2.0 * w.t, &cfg, &a, &opts, pool)).collect::<Result<Vec<_>, _>>()?;

    let first = evaluate_variant(&wins, &integrals, &cfg, &a, &configured);
    let mut rep = Report::new(s);
    let mut tab = Table::new("residuals", &RESIDUAL_COLUMNS);
    let mut sweep_tab = Table::new(
        "sweep",
        &["radical", "twist", "normalization", "main_term", "status", "band", "rms_oscillation", "max_residual", "gate"],
    );
    let needs_sweep = match &first {
        Ok(r) => !r.passes(band, gate),
        Err(_) => true,
    };
    let selected = if vs.sweep && needs_sweep {
        let runs: Vec<(FormulaVariant, Result<VariantRun, Error>)> =
            all_variants().into_iter().map(|v| (v, evaluate_variant(&wins, &integrals, &cfg, &a, &v))).collect();
        let mut best: Option<&VariantRun> = None;
        for (v, r) in &runs {
            let mut row: Vec<Cell> = variant_labels(v).iter().map(|&x| x.into()).collect();
            match r {
                Ok(r) => {
                    row.extend(["ok".into(), r.band.into(), r.rms_oscillation.into(), r.max_residual.into(), r.gate.into()]);
                    if best.is_none_or(|b| r.gate < b.gate) {
                        best = Some(r);
                    }
                }
                Err(e) => {
                    row.extend([Cell::Text(e.to_string()), f64::NAN.into(), f64::NAN.into(), f64::NAN.into(), f64::NAN.into()])
                }
            }
            sweep_tab.push(row);
        }
        if let Ok(r) = &first {
            push_residuals(&mut tab, r);
        }
        match best {
            Some(b) => b.clone(),
            None => return Err(CliError::Input("no formula variant could be evaluated".into())),
        }
    } else {
        first?
    };
    if selected.variant != configured || tab.rows.is_empty() {
        push_residuals(&mut tab, &selected);
    }
    rep.tables.push(tab);
    if !sweep_tab.rows.is_empty() {
        rep.tables.push(sweep_tab);
    }
    rep.set("configured_variant", variant_name(&configured));
    rep.set("selected_variant", variant_name(&selected.variant));
    rep.set("swept", vs.sweep && needs_sweep);
    rep.set("band", selected.band);
    rep.set("rms_oscillation", selected.rms_oscillation);
    rep.set("max_residual", selected.max_residual);
    rep.set("gate", selected.gate);
    let who = variant_name(&selected.variant);
    rep.verdict(Verdict::at_most("band", selected.band, band, format!("max/min of |R|/(T^(1-2 sigma) log T), variant {who}")));
    rep.verdict(Verdict::at_most(
        "oscillation_gate",
        selected.gate,
        gate,
        format!("max |R| / rms(S1 + S2 increments), variant {who}"),
    ));
    Ok(rep)
}

fn theorem2(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    let cfg = strip(s)?;
    let a = polynomial(s)?;
    let ts = heights(s)?;
    let wins = windows(s, &ts)?;
    let opts = ms_options(s)?;
    let v = formula_variant(section(&s.variant, "variant")?);
    let t2 = section(&s.theorem2, "theorem2")?;
    let factor = s.verdict.error_factor.unwrap_or(3.0);
    let mut rep = Report::new(s);
    let mut tab = Table::new(
        "reconstruction",
        &[
            "T",
            "levels",
            "direct",
            "telescoped",
            "difference",
            "error_sum",
            "integral",
            "integral_error",
            "stub",
            "stub_error",
            "ratio",
        ],
    );
    let mut lv = Table::new("levels", &["T", "level", "residual"]);
    let mut worst: f64 = 0.0;
    for w in &wins {
        let r = theorem2_reconstruction(w, &cfg, &a, t2.alpha, t2.levels, &v, &opts, pool)?;
        let ratio = quotient(r.difference.abs(), r.error_sum);
        worst = worst.max(ratio);
        tab.push(vec![
            w.t.into(),
            r.levels.into(),
            r.direct.into(),
            r.telescoped.into(),
            r.difference.into(),
            r.error_sum.into(),
            r.integral.value.into(),
            r.integral.abs_error_estimate.into(),
            r.stub.value.into(),
            r.stub.abs_error_estimate.into(),
            ratio.into(),
        ]);
        for (j, x) in r.level_residuals.iter().enumerate() {
            lv.push(vec![w.t.into(), (j + 1).into(), (*x).into()]);
        }
    }
    rep.tables.push(tab);
    rep.tables.push(lv);
    rep.set("variant", variant_name(&v));
    rep.set("worst_ratio", worst);
    rep.verdict(Verdict::at_most("consistency", worst, factor, "|direct - telescoped| / summed quadrature error estimates"));
    Ok(rep)
}

fn voronoi_options(v: &VoronoiSection) -> VoronoiOptions {
    VoronoiOptions {
        power_modulus: match v.power_modulus {
            PowerModulusName::Named(PowerSlot::Printed) => PowerModulus::Printed,
            PowerModulusName::Named(PowerSlot::Derived) => PowerModulus::Derived,
            PowerModulusName::Custom(p) => PowerModulus::Custom(p),
        },
        dual_twist: match v.dual_twist {
            DualTwistName::AsPrinted => DualTwist::AsPrinted,
            DualTwistName::Inverse => DualTwist::Inverse,
        },
        y_weight: match v.y_weight {
            YWeightName::HalfPi => YWeight::HalfPi,
            YWeightName::InverseTwoPi => YWeight::InverseTwoPi,
        },
        sine_correction: match v.sine_correction {
            SineName::Hankel => SineCorrection::Hankel,
            SineName::ShiftedByOne => SineCorrection::ShiftedByOne,
        },
        calibration_x0: v.calibration_x0,
    }
}

fn voronoi(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    let v = section(&s.voronoi, "voronoi")?;
    let spec = TwistedSumSpec::new(v.a, v.h, v.k)?;
    let mut x_top: f64 = 1.0;
    if let Some(e) = &v.equivalence {
        if !(e.x_min >= 1.0 && e.x_max >= e.x_min && e.points >= 1) {
            return Err(CliError::Input("[voronoi.equivalence] needs 1 <= x_min <= x_max and points >= 1".into()));
        }
        if e.points == 1 && e.x_max != e.x_min {
            return Err(CliError::Input("[voronoi.equivalence] a single point needs x_min = x_max".into()));
        }
        x_top = x_top.max(e.x_max);
    }
    if let Some(e) = &v.envelope {
        if e.u.is_empty() || e.u.iter().any(|&u| !(u >= 4.0)) {
            return Err(CliError::Input("[voronoi.envelope] u must be non-empty with every u >= 4".into()));
        }
        x_top = x_top.max(e.u.iter().cloned().fold(0.0, f64::max));
    }
    let model = VoronoiModel::new(spec, voronoi_options(v), x_top)?;
    let c = *model.calibration();
    let mut rep = Report::new(s);
    rep.set("c0_re", c.c0.re);
    rep.set("c0_im", c.c0.im);
    rep.set("calibration_standard_error", c.standard_error);
    rep.set("calibration_oscillation_rms", c.oscillation_rms);
    rep.set("calibration_lower_re", c.lower_fit.re);
    rep.set("calibration_lower_im", c.lower_fit.im);
    rep.set("calibration_upper_re", c.upper_fit.re);
    rep.set("calibration_upper_im", c.upper_fit.im);
    rep.verdict(Verdict::at_most(
        "calibration",
        c.standard_error,
        0.1 * c.oscillation_rms,
        "constant-term fit error against a tenth of the oscillation rms",
    ));
    if !c.passes() {
        return Ok(rep);
    }
    if let Some(e) = &v.equivalence {
        let plan = model.truncation_plan(e.n_terms, (e.x_min, e.x_max))?;
        let xs: Vec<f64> = (0..e.points)
            .map(|i| if e.points == 1 { e.x_min } else { e.x_min + (e.x_max - e.x_min) * i as f64 / (e.points - 1) as f64 })
            .collect();
        let rows = pool.map(&xs, |&x| -> Result<_, Error> {
            let d = model.delta_direct(x)?;
            let b = model.delta_bessel(x, &plan)?;
            Ok((x, d, b))
        });
        let mut tab = Table::new(
            "equivalence",
            &["x", "direct_re", "direct_im", "bessel_re", "bessel_im", "difference", "tail_estimate", "tolerance", "ratio"],
        );
        let mut worst: f64 = 0.0;
        for r in rows {
            let (x, d, b) = r?;
            let diff = (d - b.value).norm();
            let tol = e.floor.max(e.tail_factor * b.tail_estimate + c.standard_error);
            worst = worst.max(diff / tol);
            tab.push(vec![
                x.into(),
                d.re.into(),
                d.im.into(),
                b.value.re.into(),
                b.value.im.into(),
                diff.into(),
                b.tail_estimate.into(),
                tol.into(),
                (diff / tol).into(),
            ]);
        }
        rep.tables.push(tab);
        rep.set("equivalence_worst_ratio", worst);
        rep.verdict(Verdict::at_most(
            "equivalence",
            worst,
            1.0,
            "largest |direct - bessel| over max(floor, tail_factor tail + fit error)",
        ));
    }
    if let Some(e) = &v.envelope {
        let sigma = spec.sigma();
        let rows = pool.map(&e.u, |&u| model.delta_mean_square(u).map(|q| (u, q)));
        let mut tab = Table::new("envelope", &["u", "integral", "integral_error", "ratio"]);
        let mut ratios = Vec::new();
        for r in rows {
            let (u, q) = r?;
            let ratio = q.value / u.powf(0.5 + 2.0 * sigma);
            ratios.push(ratio);
            tab.push(vec![u.into(), q.value.into(), q.abs_error_estimate.into(), ratio.into()]);
        }
        rep.tables.push(tab);
        let sp = spread(&ratios);
        rep.set("envelope_spread", sp);
        rep.verdict(Verdict::at_most("envelope", sp, e.band, "max/min of int |Delta|^2 / u^(1/2 + 2 sigma)"));
    }
    Ok(rep)
}

fn sign(s: SignName) -> Sign {
    match s {
        SignName::Plus => Sign::Plus,
        SignName::Minus => Sign::Minus,
    }
}

fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

fn saddle_l2(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    let sd = section(&s.saddle, "saddle")?;
    let betas = match &sd.beta {
        Some(b) if b.len() != sd.alpha.len() => {
            return Err(CliError::Input("[saddle] beta must pair with alpha entry by entry".into()))
        }
        Some(b) => b.clone(),
        None => sd.alpha.clone(),
    };
    if !(sd.panel_scale > 0.0) {
        return Err(CliError::Input("[saddle] panel_scale must be positive".into()));
    }
    let mut specs = Vec::new();
    for (&alpha, &beta) in sd.alpha.iter().zip(&betas) {
        for &k in &sd.k {
            for &t in &sd.t {
                for &sg in &sd.signs {
                    let mut sp = ExpIntegralSpec::with_defaults(alpha, beta, k, t, sign(sg))?;
                    sp.gamma = sd.gamma;
                    sp.a_lo = sd.a_lo;
                    sp.small_k = sd.small_k;
                    sp.b_hi = sd.b_hi.unwrap_or_else(|| sp.b_min());
                    sp.validate()?;
                    sp.validate_saddle()?;
                    specs.push(sp);
                }
            }
        }
    }
    if specs.is_empty() {
        return Err(CliError::Input("[saddle] grid is empty".into()));
    }
    let opts = BenchOptions { panel_scale: sd.panel_scale, ..BenchOptions::default() };
    let factor = s.verdict.error_factor.unwrap_or(zetalab::saddle::BUDGET_CONSTANT);
    let results = pool.map(&specs, |sp| lemma2_compare(sp, &opts, pool));
    let mut rep = Report::new(s);
    let mut tab = Table::new(
        "lemma2",
        &[
            "alpha",
            "beta",
            "k",
            "T",
            "sign",
            "a",
            "b",
            "lhs_re",
            "lhs_im",
            "lhs_error",
            "explicit_re",
            "explicit_im",
            "difference",
            "budget",
            "ratio",
        ],
    );
    let mut worst: f64 = 0.0;
    for r in results {
        let r = r?;
        let b = r.budget.total();
        let ratio = quotient(r.difference, b);
        worst = worst.max(ratio);
        let sp = r.spec;
        tab.push(vec![
            sp.alpha.into(),
            sp.beta.into(),
            sp.k_freq.into(),
            sp.t.into(),
            sign_name(sp.sign).into(),
            sp.a_lo.into(),
            sp.b_hi.into(),
            r.lhs.value.re.into(),
            r.lhs.value.im.into(),
            r.lhs.abs_error_estimate.into(),
            r.explicit.re.into(),
            r.explicit.im.into(),
            r.difference.into(),
            b.into(),
            ratio.into(),
        ]);
    }
    rep.tables.push(tab);
    rep.set("worst_ratio", worst);
    rep.verdict(Verdict::at_most("budget", worst, factor, "largest |LHS - saddle term| / evaluated error budget"));
    Ok(rep)
}

fn saddle_l3(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    let d = section(&s.decay, "decay")?;
    if d.alpha.is_empty() {
        return Err(CliError::Input("[decay] alpha must not be empty".into()));
    }
    let band = s.verdict.band.unwrap_or(zetalab::saddle::DECAY_SPREAD);
    let opts = BenchOptions::default();
    let results = pool.map(&d.alpha, |&al| lemma3_decay(al, d.k, &d.t, &opts, pool));
    let mut rep = Report::new(s);
    let mut tab = Table::new("decay", &["alpha", "T", "integral_re", "integral_im", "integral_error", "ratio"]);
    let mut spreads = Table::new("spread", &["alpha", "max_over_min"]);
    let mut worst: f64 = 0.0;
    for r in results {
        let r = r?;
        for row in &r.rows {
            tab.push(vec![
                r.alpha.into(),
                row.t.into(),
                row.integral.value.re.into(),
                row.integral.value.im.into(),
                row.integral.abs_error_estimate.into(),
                row.ratio.into(),
            ]);
        }
        spreads.push(vec![r.alpha.into(), r.max_over_min.into()]);
        worst = worst.max(r.max_over_min);
    }
    rep.tables.push(tab);
    rep.tables.push(spreads);
    rep.set("worst_spread", worst);
    rep.verdict(Verdict::at_most("decay", worst, band, "max/min of |integral| / T^(3/4 - alpha) per alpha"));
    Ok(rep)
}

fn saddle_l4(s: &Scenario, pool: &Pool) -> Result<Report, CliError> {
    let l = section(&s.lemma4, "lemma4")?;
    let mut specs = Vec::new();
    for &t in &l.t {
        for &n in &l.n {
            let sp = Lemma4Spec {
                alpha: l.alpha,
                n,
                a_lo: l.a_over_sqrt_t * t.sqrt(),
                b_hi: l.b_over_sqrt_t * t.sqrt(),
                t,
                sign: sign(l.sign),
                phase: match l.phase {
                    PhaseName::TwoPi => LogPhase::TwoPi,
                    PhaseName::ThreePi => LogPhase::ThreePi,
                },
                sqrt_window: (l.sqrt_window[0], l.sqrt_window[1]),
            };
            sp.validate()?;
            specs.push(sp);
        }
    }
    if specs.is_empty() {
        return Err(CliError::Input("[lemma4] grid is empty".into()));
    }
    let factor = s.verdict.error_factor.unwrap_or(zetalab::saddle::BUDGET_CONSTANT);
    let opts = BenchOptions::default();
    let results = pool.map(&specs, |sp| lemma4_compare(sp, &opts, pool));
    let mut rep = Report::new(s);
    let mut tab = Table::new(
        "lemma4",
        &[
            "n",
            "T",
            "a",
            "b",
            "delta",
            "lhs_re",
            "lhs_im",
            "lhs_error",
            "explicit_re",
            "explicit_im",
            "difference",
            "alternate_difference",
            "budget",
            "ratio",
        ],
    );
    let mut worst: f64 = 0.0;
    let mut closer = 0usize;
    let mut stationary = 0usize;
    for r in results {
        let r = r?;
        let b = r.budget.total();
        let ratio = quotient(r.difference, b);
        worst = worst.max(ratio);
        if r.delta {
            stationary += 1;
            if r.difference < r.alternate_difference {
                closer += 1;
            }
        }
        let sp = r.spec;
        tab.push(vec![
            sp.n.into(),
            sp.t.into(),
            sp.a_lo.into(),
            sp.b_hi.into(),
            r.delta.into(),
            r.lhs.value.re.into(),
            r.lhs.value.im.into(),
            r.lhs.abs_error_estimate.into(),
            r.explicit.re.into(),
            r.explicit.im.into(),
            r.difference.into(),
            r.alternate_difference.into(),
            b.into(),
            ratio.into(),
        ]);
    }
    rep.tables.push(tab);
    rep.set("worst_ratio", worst);
    rep.set("stationary_cells", stationary);
    rep.set("configured_phase_closer", closer);
    rep.verdict(Verdict::at_most("budget", worst, factor, "largest |LHS - explicit| / evaluated error budget"));
    Ok(rep)
}
