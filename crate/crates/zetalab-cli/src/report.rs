//! Reports: fixed-column tables, a summary map and verdicts, written as JSON
//! and CSV. JSON mirrors the CSV tables cell for cell.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::ser::{Serialize, Serializer};

use crate::error::CliError;
use crate::scenario::{Format, Scenario};

/// Version tag carried by every report.
pub const SCHEMA_VERSION: &str = "zetalab-report/1";

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Float; non-finite values are written as `"inf"`, `"-inf"`, `"nan"`.
    Num(f64),
    /// Integer.
    Int(i64),
    /// Label.
    Text(String),
    /// Flag.
    Bool(bool),
}

impl Cell {
    /// Text form used in CSV, identical to the JSON literal without quotes.
    pub fn render(&self) -> String {
        match self {
            Cell::Num(x) if x.is_finite() => serde_json::to_string(x).unwrap_or_default(),
            Cell::Num(x) => non_finite(*x).to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

fn non_finite(x: f64) -> &'static str {
    if x.is_nan() {
        "nan"
    } else if x > 0.0 {
        "inf"
    } else {
        "-inf"
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Num(x) if x.is_finite() => s.serialize_f64(*x),
            Cell::Num(x) => s.serialize_str(non_finite(*x)),
            Cell::Int(i) => s.serialize_i64(*i),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}
impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}
impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x as i64)
    }
}
impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(x as i64)
    }
}
impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}
impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}
impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

/// Rows under fixed columns.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Table {
    /// Table name, also the CSV file suffix.
    pub name: String,
    /// Column names.
    pub columns: Vec<String>,
    /// Rows, each as long as `columns`.
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    /// Empty table.
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    /// Append a row; panics on a column-count mismatch, which is a bug in the runner.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width for table {}", self.name);
        self.rows.push(row);
    }

    /// Column index by name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// CSV text.
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| CliError::Input(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(fail)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::render)).map_err(fail)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Input(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| CliError::Input(format!("csv: {e}")))
    }
}

/// A named pass/fail check.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Verdict {
    /// Check name.
    pub name: String,
    /// Outcome.
    pub pass: bool,
    /// Measured quantity.
    pub value: Cell,
    /// Threshold it was compared with.
    pub threshold: Cell,
    /// Human-readable reading of the check.
    pub detail: String,
}

impl Verdict {
    /// `value <= threshold`.
    pub fn at_most(name: &str, value: f64, threshold: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass: value <= threshold,
            value: value.into(),
            threshold: threshold.into(),
            detail: detail.into(),
        }
    }

    /// A plain flag.
    pub fn flag(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), pass, value: pass.into(), threshold: true.into(), detail: detail.into() }
    }
}

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Report {
    /// [`SCHEMA_VERSION`].
    pub schema_version: String,
    /// Scenario kind.
    pub kind: String,
    /// Scenario name.
    pub name: String,
    /// Fully resolved scenario; running it again reproduces the report.
    pub config: Scenario,
    /// Result tables.
    pub tables: Vec<Table>,
    /// Scalar results.
    pub summary: BTreeMap<String, Cell>,
    /// Checks.
    pub verdicts: Vec<Verdict>,
    /// All verdicts passed.
    pub pass: bool,
}

impl Report {
    /// Empty report for `config`.
    pub fn new(config: &Scenario) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            kind: config.scenario.kind.as_str().into(),
            name: config.scenario.name.clone(),
            config: config.clone(),
            tables: Vec::new(),
            summary: BTreeMap::new(),
            verdicts: Vec::new(),
            pass: true,
        }
    }

    /// Record a scalar.
    pub fn set(&mut self, key: &str, v: impl Into<Cell>) {
        self.summary.insert(key.into(), v.into());
    }

    /// Record a verdict.
    pub fn verdict(&mut self, v: Verdict) {
        self.pass &= v.pass;
        self.verdicts.push(v);
    }

    /// Table by name.
    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// Pretty JSON document.
    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| CliError::Input(format!("json: {e}")))?;
        s.push('\n');
        Ok(s)
    }

    /// Canonical bytes of the numeric payload: tables, summary and verdicts.
    pub fn payload(&self) -> Vec<u8> {
        #[derive(serde::Serialize)]
        struct P<'a> {
            tables: &'a [Table],
            summary: &'a BTreeMap<String, Cell>,
            verdicts: &'a [Verdict],
        }
        serde_json::to_vec(&P { tables: &self.tables, summary: &self.summary, verdicts: &self.verdicts }).unwrap_or_default()
    }

    /// Write the configured formats into `dir`, each file atomically.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
        fs::create_dir_all(dir).map_err(|e| CliError::io(format!("create {}", dir.display()), e))?;
        let stem = self.config.stem();
        let mut out = Vec::new();
        for f in &self.config.output.formats {
            match f {
                Format::Json => {
                    let p = dir.join(format!("{stem}.json"));
                    write_atomic(&p, self.to_json()?.as_bytes())?;
                    out.push(p);
                }
                Format::Csv => {
                    for t in &self.tables {
                        let p = dir.join(format!("{stem}.{}.csv", t.name));
                        write_atomic(&p, t.to_csv()?.as_bytes())?;
                        out.push(p);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Write to a sibling temporary file, then rename over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("report");
    let tmp = path.with_file_name(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, bytes).map_err(|e| CliError::io(format!("write {}", tmp.display()), e))?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        CliError::io(format!("rename onto {}", path.display()), e)
    })
}
