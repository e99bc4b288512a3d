//! Field-by-field comparison of a report against a baseline.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

/// Tolerance for one field: `|a - b| <= max(abs, rel * max(|a|, |b|))`.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerance {
    /// Relative part.
    #[serde(default)]
    pub rel: f64,
    /// Absolute part.
    #[serde(default)]
    pub abs: f64,
}

impl Tolerance {
    fn admits(&self, a: f64, b: f64) -> bool {
        if a == b {
            return true;
        }
        (a - b).abs() <= self.abs.max(self.rel * a.abs().max(b.abs()))
    }
}

/// Tolerance file: a default plus overrides keyed by full path or column name.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    /// Default relative tolerance.
    #[serde(default = "default_rel")]
    pub default_rel: f64,
    /// Default absolute tolerance.
    #[serde(default)]
    pub default_abs: f64,
    /// Per-field overrides.
    #[serde(default)]
    pub fields: BTreeMap<String, Tolerance>,
}

fn default_rel() -> f64 {
    1e-9
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { default_rel: default_rel(), default_abs: 0.0, fields: BTreeMap::new() }
    }
}

impl Tolerances {
    /// Read a TOML tolerance file.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(format!("read {}", path.display()), e))?;
        toml::from_str(&text).map_err(|e| CliError::Input(format!("tolerance file {}: {e}", path.display())))
    }

    fn for_field(&self, path: &str, key: &str) -> Tolerance {
        self.fields
            .get(path)
            .or_else(|| self.fields.get(key))
            .copied()
            .unwrap_or(Tolerance { rel: self.default_rel, abs: self.default_abs })
    }
}

/// One out-of-tolerance field.
#[derive(Debug, Clone, PartialEq)]
pub struct Drift {
    /// Path such as `tables.residuals[2].residual`.
    pub field: String,
    /// Report value.
    pub report: String,
    /// Baseline value.
    pub baseline: String,
}

impl std::fmt::Display for Drift {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: report {} vs baseline {}", self.field, self.report, self.baseline)
    }
}

/// Load two report files and compare them.
pub fn compare_files(report: &Path, baseline: &Path, tol: &Tolerances) -> Result<Vec<Drift>, CliError> {
    let load = |p: &Path| -> Result<Value, CliError> {
        let t = std::fs::read_to_string(p).map_err(|e| CliError::io(format!("read {}", p.display()), e))?;
        serde_json::from_str(&t).map_err(|e| CliError::Input(format!("{} is not a JSON report: {e}", p.display())))
    };
    compare(&load(report)?, &load(baseline)?, tol)
}

fn get<'a>(v: &'a Value, key: &str, which: &str) -> Result<&'a Value, CliError> {
    v.get(key).ok_or_else(|| CliError::Schema(format!("{which} has no {key} field")))
}

/// Compare two parsed reports. Schema, kind and table layouts must match;
/// numeric cells, summary entries and verdicts are checked against `tol`.
pub fn compare(report: &Value, baseline: &Value, tol: &Tolerances) -> Result<Vec<Drift>, CliError> {
    for key in ["schema_version", "kind"] {
        let (a, b) = (get(report, key, "report")?, get(baseline, key, "baseline")?);
        if a != b {
            return Err(CliError::Schema(format!("{key} {a} vs {b}")));
        }
    }
    let mut drift = Vec::new();
    let tables = |v: &Value, which| -> Result<BTreeMap<String, Value>, CliError> {
        let arr = get(v, "tables", which)?.as_array().ok_or_else(|| CliError::Schema(format!("{which} tables is not a list")))?;
        let mut m = BTreeMap::new();
        for t in arr {
            let name =
                t.get("name").and_then(Value::as_str).ok_or_else(|| CliError::Schema(format!("{which} table without name")))?;
            m.insert(name.to_string(), t.clone());
        }
        Ok(m)
    };
    let (ta, tb) = (tables(report, "report")?, tables(baseline, "baseline")?);
    if ta.keys().ne(tb.keys()) {
        return Err(CliError::Schema(format!(
            "tables {:?} vs {:?}",
            ta.keys().collect::<Vec<_>>(),
            tb.keys().collect::<Vec<_>>()
        )));
    }
    for (name, a) in &ta {
        let b = &tb[name];
        if a.get("columns") != b.get("columns") {
            return Err(CliError::Schema(format!("columns of table {name} differ")));
        }
        let cols: Vec<String> = a
            .get("columns")
            .and_then(Value::as_array)
            .map(|c| c.iter().filter_map(|x| x.as_str().map(String::from)).collect())
            .unwrap_or_default();
        let empty = Vec::new();
        let ra = a.get("rows").and_then(Value::as_array).unwrap_or(&empty);
        let rb = b.get("rows").and_then(Value::as_array).unwrap_or(&empty);
        if ra.len() != rb.len() {
            drift.push(Drift {
                field: format!("tables.{name}.rows"),
                report: ra.len().to_string(),
                baseline: rb.len().to_string(),
            });
            continue;
        }
        for (i, (x, y)) in ra.iter().zip(rb).enumerate() {
            let (x, y) = (x.as_array().unwrap_or(&empty), y.as_array().unwrap_or(&empty));
            for (j, col) in cols.iter().enumerate() {
                let path = format!("tables.{name}[{i}].{col}");
                cell(&path, col, x.get(j), y.get(j), tol, &mut drift);
            }
        }
    }
    let sa = get(report, "summary", "report")?.as_object().cloned().unwrap_or_default();
    let sb = get(baseline, "summary", "baseline")?.as_object().cloned().unwrap_or_default();
    let keys: std::collections::BTreeSet<&String> = sa.keys().chain(sb.keys()).collect();
    for k in keys {
        cell(&format!("summary.{k}"), k, sa.get(k), sb.get(k), tol, &mut drift);
    }
    let va = get(report, "verdicts", "report")?.as_array().cloned().unwrap_or_default();
    let vb = get(baseline, "verdicts", "baseline")?.as_array().cloned().unwrap_or_default();
    if va.len() != vb.len() {
        drift.push(Drift { field: "verdicts".into(), report: va.len().to_string(), baseline: vb.len().to_string() });
    } else {
        for (x, y) in va.iter().zip(&vb) {
            let name = x.get("name").and_then(Value::as_str).unwrap_or("?");
            for f in ["pass", "value", "threshold"] {
                cell(&format!("verdicts.{name}.{f}"), f, x.get(f), y.get(f), tol, &mut drift);
            }
        }
    }
    Ok(drift)
}

fn cell(path: &str, key: &str, a: Option<&Value>, b: Option<&Value>, tol: &Tolerances, out: &mut Vec<Drift>) {
    let show = |v: Option<&Value>| v.map_or_else(|| "<absent>".to_string(), Value::to_string);
    let ok = match (a, b) {
        (Some(Value::Number(x)), Some(Value::Number(y))) => match (x.as_f64(), y.as_f64()) {
            (Some(x), Some(y)) => tol.for_field(path, key).admits(x, y),
            _ => x == y,
        },
        (x, y) => x == y,
    };
    if !ok {
        out.push(Drift { field: path.to_string(), report: show(a), baseline: show(b) });
    }
}
