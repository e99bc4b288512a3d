//! Scenario files: sectioned TOML, parsed at full precision and resolved
//! against the kind they describe.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// What a scenario computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// `I(T)`, `M(T)` and `E(T)` over a grid of heights.
    MeanSquare,
    /// `[T, 2T]` residuals and the oscillation gate.
    Theorem1,
    /// Direct against dyadic telescoped `E - S1 - S2`.
    Theorem2,
    /// Twisted divisor sums: calibration, Bessel equivalence, mean-square envelope.
    Voronoi,
    /// Saddle-point bench for the exponential integral.
    SaddleL2,
    /// Decay of the non-stationary integral.
    SaddleL3,
    /// The `phi_alpha` weighted integral.
    SaddleL4,
}

impl Kind {
    /// Name as written in scenario files.
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::MeanSquare => "mean-square",
            Kind::Theorem1 => "theorem1",
            Kind::Theorem2 => "theorem2",
            Kind::Voronoi => "voronoi",
            Kind::SaddleL2 => "saddle-l2",
            Kind::SaddleL3 => "saddle-l3",
            Kind::SaddleL4 => "saddle-l4",
        }
    }
}

/// Header section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Header {
    /// Report stem and display name.
    pub name: String,
    /// Scenario kind.
    pub kind: Kind,
}

/// `[strip]`: abscissa and precision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StripSection {
    /// `sigma` in `(1/4, 1/2)`.
    pub sigma: f64,
    /// Working precision in bits.
    #[serde(default = "default_precision")]
    pub precision: u32,
}

fn default_precision() -> u32 {
    53
}

/// `[polynomial]`: coefficients `a(1), ..., a(M)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialSection {
    /// Real parts.
    pub coefficients: Vec<f64>,
    /// Imaginary parts; zero when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imaginary: Option<Vec<f64>>,
}

/// `[window]`: `C1 T < Y < C2 T` with `Y = y_over_t * T`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowSection {
    /// Lower constant.
    #[serde(default = "half")]
    pub c1: f64,
    /// Upper constant.
    #[serde(default = "two")]
    pub c2: f64,
    /// `Y / T`.
    #[serde(default = "one")]
    pub y_over_t: f64,
}

impl Default for WindowSection {
    fn default() -> Self {
        Self { c1: 0.5, c2: 2.0, y_over_t: 1.0 }
    }
}

fn half() -> f64 {
    0.5
}
fn one() -> f64 {
    1.0
}
fn two() -> f64 {
    2.0
}

/// `[grid]`: heights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSection {
    /// Heights `T`.
    pub t: Vec<f64>,
}

/// Sign under the radical of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalName {
    /// `+ pi^2 u^2`.
    #[default]
    Plus,
    /// `- pi^2 u^2`.
    Minus,
}

/// Twist class of `S2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum TwistName {
    /// `kappa`.
    #[default]
    Kappa,
    /// `kappa_bar`.
    KappaBar,
}

/// Constant bundling of `S1`, `S2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizationName {
    /// Constants exactly as written in the main formula.
    #[default]
    Printed,
    /// The expanded constant `C` form.
    Expanded,
    /// Classical constants carried through `|chi|^2`.
    Transfer,
}

/// Main-term bundling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum MainName {
    /// `1 / [k, l]` overall.
    #[default]
    Printed,
    /// Extra `(k, l)^{1 - 2 sigma}`.
    GcdWeighted,
}

/// `[variant]`: formula switches.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct VariantSection {
    /// Radical sign.
    #[serde(default)]
    pub radical: RadicalName,
    /// `S2` twist.
    #[serde(default)]
    pub twist: TwistName,
    /// Constant bundling.
    #[serde(default)]
    pub normalization: NormalizationName,
    /// Main term.
    #[serde(default)]
    pub main_term: MainName,
    /// Evaluate every combination when the configured one fails its gates.
    #[serde(default)]
    pub sweep: bool,
}

/// `[quadrature]` for the mean-square integral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadratureSection {
    /// Absolute tolerance over the interval.
    #[serde(default = "default_abs_tol")]
    pub abs_tol: f64,
    /// Per-panel relative tolerance.
    #[serde(default = "default_rel_tol")]
    pub rel_tol: f64,
    /// Initial panel constant.
    #[serde(default = "default_panel_const")]
    pub panel_const: f64,
}

impl Default for QuadratureSection {
    fn default() -> Self {
        Self { abs_tol: default_abs_tol(), rel_tol: default_rel_tol(), panel_const: default_panel_const() }
    }
}

fn default_abs_tol() -> f64 {
    1e-9
}
fn default_rel_tol() -> f64 {
    1e-11
}
fn default_panel_const() -> f64 {
    4.0
}

/// `[theorem2]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Theorem2Section {
    /// Exponent in `L`.
    #[serde(default = "one")]
    pub alpha: f64,
    /// Level override.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<u32>,
}

impl Default for Theorem2Section {
    fn default() -> Self {
        Self { alpha: 1.0, levels: None }
    }
}

/// Power main-term modulus: `printed`, `derived` or a number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PowerModulusName {
    /// Named slot.
    Named(PowerSlot),
    /// Explicit exponent.
    Custom(f64),
}

/// Named modulus slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PowerSlot {
    /// `k^{1-a}`.
    Printed,
    /// `k^{-1-a}`.
    Derived,
}

/// Dual twist class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum DualTwistName {
    /// `e(-hn/k)`.
    #[default]
    AsPrinted,
    /// `e(-h_bar n/k)`.
    Inverse,
}

/// `Y` weight in the Bessel bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum YWeightName {
    /// `pi / 2`.
    #[default]
    HalfPi,
    /// `1 / 2 pi`.
    InverseTwoPi,
}

/// Sine coefficient of the cosine form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SineName {
    /// `16 sigma^2 - 1`.
    #[default]
    Hankel,
    /// `16 sigma^2 - 2`.
    ShiftedByOne,
}

/// `[voronoi]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VoronoiSection {
    /// Module exponent `a` of `sigma_a`.
    pub a: f64,
    /// Twist numerator.
    pub h: u64,
    /// Twist modulus.
    pub k: u64,
    /// Power main-term modulus.
    #[serde(default = "default_power")]
    pub power_modulus: PowerModulusName,
    /// Dual twist.
    #[serde(default)]
    pub dual_twist: DualTwistName,
    /// Bracket weight.
    #[serde(default)]
    pub y_weight: YWeightName,
    /// Cosine form correction.
    #[serde(default)]
    pub sine_correction: SineName,
    /// Calibration window start.
    #[serde(default = "default_x0")]
    pub calibration_x0: f64,
    /// Direct against Bessel sampling.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceSection>,
    /// Mean-square envelope windows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub envelope: Option<EnvelopeSection>,
}

fn default_power() -> PowerModulusName {
    PowerModulusName::Named(PowerSlot::Printed)
}
fn default_x0() -> f64 {
    1000.0
}

/// `[voronoi.equivalence]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivalenceSection {
    /// Lower sample end.
    pub x_min: f64,
    /// Upper sample end.
    pub x_max: f64,
    /// Number of evenly spaced samples.
    pub points: usize,
    /// Bessel terms kept.
    pub n_terms: usize,
    /// Absolute tolerance floor.
    #[serde(default = "default_floor")]
    pub floor: f64,
    /// Multiple of the tail estimate.
    #[serde(default = "default_tail_factor")]
    pub tail_factor: f64,
}

fn default_floor() -> f64 {
    1e-3
}
fn default_tail_factor() -> f64 {
    3.0
}

/// `[voronoi.envelope]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvelopeSection {
    /// Window tops `u`; windows are `[u/2, u]`.
    pub u: Vec<f64>,
    /// Allowed max/min of the normalized ratio.
    #[serde(default = "default_band20")]
    pub band: f64,
}

fn default_band20() -> f64 {
    20.0
}

/// Sign of the frequency term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignName {
    /// `+`.
    Plus,
    /// `-`.
    Minus,
}

/// `[saddle]` for the saddle-point bench: a product grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SaddleSection {
    /// `alpha` values; `beta = alpha` unless `beta` is given.
    pub alpha: Vec<f64>,
    /// `beta` values, paired with `alpha` by position.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<f64>>,
    /// `gamma`.
    #[serde(default = "one")]
    pub gamma: f64,
    /// Frequencies `k`.
    pub k: Vec<f64>,
    /// Heights.
    pub t: Vec<f64>,
    /// Signs.
    #[serde(default = "both_signs")]
    pub signs: Vec<SignName>,
    /// Lower end `a`.
    #[serde(default = "default_a_lo")]
    pub a_lo: f64,
    /// Upper end `b`; the smallest admissible value when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_hi: Option<f64>,
    /// Threshold `B` of the small-`k` case.
    #[serde(default = "one")]
    pub small_k: f64,
    /// Panel width multiplier.
    #[serde(default = "one")]
    pub panel_scale: f64,
}

fn both_signs() -> Vec<SignName> {
    vec![SignName::Plus, SignName::Minus]
}
fn default_a_lo() -> f64 {
    0.01
}

/// `[decay]` for the non-stationary decay bench.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecaySection {
    /// Exponents `alpha`.
    pub alpha: Vec<f64>,
    /// Frequency.
    #[serde(default = "one")]
    pub k: f64,
    /// Doubling height grid.
    pub t: Vec<f64>,
}

/// Constant in the explicit log phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum PhaseName {
    /// `log(T / 2 pi n)`.
    #[default]
    TwoPi,
    /// `log(T / 3 pi n)`.
    ThreePi,
}

/// `[lemma4]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lemma4Section {
    /// Weight exponent.
    pub alpha: f64,
    /// Frequency indices.
    pub n: Vec<u64>,
    /// Heights.
    pub t: Vec<f64>,
    /// Lower end as a multiple of `sqrt T`.
    #[serde(default = "one")]
    pub a_over_sqrt_t: f64,
    /// Upper end as a multiple of `sqrt T`.
    #[serde(default = "ten")]
    pub b_over_sqrt_t: f64,
    /// Window `(A, B)` for `A sqrt T < a < B sqrt T`.
    #[serde(default = "default_sqrt_window")]
    pub sqrt_window: [f64; 2],
    /// Sign of `4 pi x sqrt n`.
    #[serde(default = "plus")]
    pub sign: SignName,
    /// Explicit phase constant.
    #[serde(default)]
    pub phase: PhaseName,
}

fn ten() -> f64 {
    10.0
}
fn default_sqrt_window() -> [f64; 2] {
    [0.5, 2.0]
}
fn plus() -> SignName {
    SignName::Plus
}

/// `[verdict]`: thresholds; unset entries take the kind's default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct VerdictSection {
    /// Allowed max/min of a normalized ratio.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub band: Option<f64>,
    /// Largest `max |R| / rms(oscillation)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oscillation_gate: Option<f64>,
    /// Multiple of the quadrature error budget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_factor: Option<f64>,
    /// Largest relative quadrature error estimate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_rel_error: Option<f64>,
}

/// Report format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    /// One JSON document.
    Json,
    /// One CSV file per table.
    Csv,
}

/// `[output]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    /// Formats to write.
    #[serde(default = "both_formats")]
    pub formats: Vec<Format>,
    /// File stem; the scenario name when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stem: Option<String>,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self { formats: both_formats(), stem: None }
    }
}

fn both_formats() -> Vec<Format> {
    vec![Format::Json, Format::Csv]
}

/// A whole scenario file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Name and kind.
    pub scenario: Header,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub strip: Option<StripSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub polynomial: Option<PolynomialSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub window: Option<WindowSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub grid: Option<GridSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub variant: Option<VariantSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub quadrature: Option<QuadratureSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub theorem2: Option<Theorem2Section>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub voronoi: Option<VoronoiSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub saddle: Option<SaddleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub decay: Option<DecaySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    #[allow(missing_docs)]
    pub lemma4: Option<Lemma4Section>,
    #[serde(default)]
    #[allow(missing_docs)]
    pub verdict: VerdictSection,
    #[serde(default)]
    #[allow(missing_docs)]
    pub output: OutputSection,
}

type Need = (&'static str, bool);

impl Scenario {
    /// Parse TOML text.
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Input(format!("scenario does not parse: {e}")))
    }

    /// Read a scenario file. A `.json` file is taken to be a report and its
    /// embedded configuration is used.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        if path.extension().is_some_and(|x| x == "json") {
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{} does not parse: {e}", path.display())))?;
            let cfg = v.get("config").ok_or_else(|| CliError::Input(format!("{} has no config field", path.display())))?;
            return serde_json::from_value(cfg.clone()).map_err(|e| CliError::Input(format!("embedded config: {e}")));
        }
        Self::from_toml(&text)
    }

    /// Report stem.
    pub fn stem(&self) -> &str {
        self.output.stem.as_deref().unwrap_or(&self.scenario.name)
    }

    /// Fill default sections, reject sections the kind does not read, and
    /// apply a precision override.
    pub fn resolve(mut self, precision: Option<u32>) -> Result<Self, CliError> {
        if self.scenario.name.is_empty() || self.scenario.name.contains(['/', '\\']) {
            return Err(CliError::Input(format!("scenario name {:?} must be a non-empty file stem", self.scenario.name)));
        }
        let kind = self.scenario.kind;
        let strip = matches!(kind, Kind::MeanSquare | Kind::Theorem1 | Kind::Theorem2);
        let explicit = matches!(kind, Kind::Theorem1 | Kind::Theorem2);
        let needs: [Need; 11] = [
            ("strip", strip),
            ("polynomial", strip),
            ("window", explicit),
            ("grid", strip),
            ("variant", explicit),
            ("quadrature", strip),
            ("theorem2", kind == Kind::Theorem2),
            ("voronoi", kind == Kind::Voronoi),
            ("saddle", kind == Kind::SaddleL2),
            ("decay", kind == Kind::SaddleL3),
            ("lemma4", kind == Kind::SaddleL4),
        ];
        let present = [
            self.strip.is_some(),
            self.polynomial.is_some(),
            self.window.is_some(),
            self.grid.is_some(),
            self.variant.is_some(),
            self.quadrature.is_some(),
            self.theorem2.is_some(),
            self.voronoi.is_some(),
            self.saddle.is_some(),
            self.decay.is_some(),
            self.lemma4.is_some(),
        ];
        for ((name, used), here) in needs.iter().zip(present) {
            if here && !used {
                return Err(CliError::Input(format!("section [{name}] is not used by kind {}", kind.as_str())));
            }
        }
        let require = |here: bool, name: &str| {
            if here {
                Ok(())
            } else {
                Err(CliError::Input(format!("kind {} needs a [{name}] section", kind.as_str())))
            }
        };
        if strip {
            require(self.strip.is_some(), "strip")?;
            require(self.polynomial.is_some(), "polynomial")?;
            require(self.grid.is_some(), "grid")?;
            self.quadrature.get_or_insert_with(Default::default);
        }
        if explicit {
            self.window.get_or_insert_with(Default::default);
            self.variant.get_or_insert_with(Default::default);
        }
        match kind {
            Kind::Theorem2 => {
                self.theorem2.get_or_insert_with(Default::default);
            }
            Kind::Voronoi => require(self.voronoi.is_some(), "voronoi")?,
            Kind::SaddleL2 => require(self.saddle.is_some(), "saddle")?,
            Kind::SaddleL3 => require(self.decay.is_some(), "decay")?,
            Kind::SaddleL4 => require(self.lemma4.is_some(), "lemma4")?,
            _ => {}
        }
        if let Some(bits) = precision {
            match self.strip.as_mut() {
                Some(s) => s.precision = bits,
                None if bits != 53 => {
                    return Err(CliError::Input(format!("--precision {bits}: only 53-bit binary64 arithmetic is implemented")))
                }
                None => {}
            }
        }
        let v = &mut self.verdict;
        match kind {
            Kind::MeanSquare => {
                v.max_rel_error.get_or_insert(1e-8);
            }
            Kind::Theorem1 => {
                v.band.get_or_insert(50.0);
                v.oscillation_gate.get_or_insert(0.2);
            }
            Kind::Theorem2 => {
                v.error_factor.get_or_insert(3.0);
            }
            Kind::SaddleL2 | Kind::SaddleL4 => {
                v.error_factor.get_or_insert(zetalab::saddle::BUDGET_CONSTANT);
            }
            Kind::SaddleL3 => {
                v.band.get_or_insert(zetalab::saddle::DECAY_SPREAD);
            }
            Kind::Voronoi => {}
        }
        if self.output.formats.is_empty() {
            return Err(CliError::Input("[output] formats must not be empty".into()));
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_theorem1_resolves_defaults() {
        let s = Scenario::from_toml(
            "[scenario]\nname = \"t\"\nkind = \"theorem1\"\n[strip]\nsigma = 0.4\n[polynomial]\ncoefficients = [1.0]\n[grid]\nt = [100.0]\n",
        )
        .unwrap()
        .resolve(None)
        .unwrap();
        assert_eq!(s.window, Some(WindowSection::default()));
        assert_eq!(s.verdict.band, Some(50.0));
        assert_eq!(s.strip.unwrap().precision, 53);
    }

    #[test]
    fn foreign_section_rejected() {
        let s = Scenario::from_toml(
            "[scenario]\nname = \"t\"\nkind = \"saddle-l3\"\n[decay]\nalpha = [1.5]\nt = [50.0, 100.0]\n[window]\nc1 = 0.5\n",
        )
        .unwrap();
        let e = s.resolve(None).unwrap_err().to_string();
        assert!(e.contains("[window]"), "{e}");
    }

    #[test]
    fn unknown_key_rejected() {
        let e = Scenario::from_toml("[scenario]\nname = \"t\"\nkind = \"theorem1\"\n[strip]\nsigma = 0.4\nsgima = 1\n")
            .unwrap_err()
            .to_string();
        assert!(e.contains("sgima"), "{e}");
    }

    #[test]
    fn power_modulus_forms() {
        let parse = |v: &str| {
            let t =
                format!("[scenario]\nname = \"v\"\nkind = \"voronoi\"\n[voronoi]\na = -0.2\nh = 1\nk = 3\npower_modulus = {v}\n");
            Scenario::from_toml(&t).unwrap().voronoi.unwrap().power_modulus
        };
        assert_eq!(parse("\"derived\""), PowerModulusName::Named(PowerSlot::Derived));
        assert_eq!(parse("-0.75"), PowerModulusName::Custom(-0.75));
    }

    #[test]
    fn round_trips_through_json() {
        let s = Scenario::from_toml(
            "[scenario]\nname = \"l4\"\nkind = \"saddle-l4\"\n[lemma4]\nalpha = 1.5\nn = [3, 40]\nt = [200.0]\nphase = \"three-pi\"\n",
        )
        .unwrap()
        .resolve(None)
        .unwrap();
        let j = serde_json::to_string(&s).unwrap();
        let back: Scenario = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
