//! Suites: a list of scenario files run in order with one aggregate verdict.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::exec::Pool;
use crate::report::write_atomic;

/// Suite file contents.
#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteFile {
    /// Header.
    pub suite: SuiteHeader,
}

/// `[suite]`.
#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteHeader {
    /// Suite name, used for the summary file.
    pub name: String,
    /// Scenario paths relative to the suite file.
    pub scenarios: Vec<PathBuf>,
}

/// Outcome of one scenario or of a whole run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Every verdict passed.
    Pass,
    /// Computation finished, some verdict failed.
    Fail,
    /// Input or execution error.
    Error,
}

impl Status {
    /// Process exit status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 2,
            Status::Error => 1,
        }
    }
}

/// One suite entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteEntry {
    /// Scenario file as listed.
    pub scenario: PathBuf,
    /// Outcome.
    pub status: Status,
    /// Failed verdict names or the error message.
    pub detail: String,
    /// Files written.
    pub outputs: Vec<PathBuf>,
}

/// Aggregate result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    /// Suite name.
    pub name: String,
    /// Worst entry status.
    pub status: Status,
    /// Entries in file order.
    pub entries: Vec<SuiteEntry>,
}

/// Run every scenario of `path`, writing reports and `suite-<name>.json` into `out`.
pub fn run_suite(path: &Path, out: &Path, pool: &Pool, precision: Option<u32>) -> Result<SuiteReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(format!("read {}", path.display()), e))?;
    let file: SuiteFile = toml::from_str(&text).map_err(|e| CliError::Input(format!("suite {}: {e}", path.display())))?;
    if file.suite.scenarios.is_empty() {
        return Err(CliError::Input("suite lists no scenarios".into()));
    }
    let base = path.parent().unwrap_or(Path::new("."));
    let mut entries = Vec::new();
    for sc in &file.suite.scenarios {
        let entry = match crate::run_file(&base.join(sc), out, pool, precision) {
            Ok((rep, outputs)) => {
                let failed: Vec<&str> = rep.verdicts.iter().filter(|v| !v.pass).map(|v| v.name.as_str()).collect();
                SuiteEntry {
                    scenario: sc.clone(),
                    status: if rep.pass { Status::Pass } else { Status::Fail },
                    detail: failed.join(","),
                    outputs,
                }
            }
            Err(e) => SuiteEntry { scenario: sc.clone(), status: Status::Error, detail: e.to_string(), outputs: Vec::new() },
        };
        entries.push(entry);
    }
    let status = entries.iter().map(|e| e.status).max().unwrap_or(Status::Pass);
    let rep = SuiteReport { name: file.suite.name.clone(), status, entries };
    let mut json = serde_json::to_string_pretty(&rep).map_err(|e| CliError::Input(format!("json: {e}")))?;
    json.push('\n');
    std::fs::create_dir_all(out).map_err(|e| CliError::io(format!("create {}", out.display()), e))?;
    write_atomic(&out.join(format!("suite-{}.json", file.suite.name)), json.as_bytes())?;
    Ok(rep)
}
