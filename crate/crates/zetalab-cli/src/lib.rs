//! Batch front end for `zetalab`: scenario files, deterministic execution on a
//! thread pool, JSON/CSV reports and baseline comparison.

#![warn(missing_docs)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod compare;
pub mod error;
pub mod exec;
pub mod report;
pub mod runner;
pub mod scenario;
pub mod suite;

use std::path::{Path, PathBuf};

pub use error::CliError;
pub use exec::Pool;
pub use report::Report;
pub use scenario::Scenario;

/// Load, resolve and run one scenario file, then write its report into `out`.
pub fn run_file(path: &Path, out: &Path, pool: &Pool, precision: Option<u32>) -> Result<(Report, Vec<PathBuf>), CliError> {
    let s = Scenario::load(path)?.resolve(precision)?;
    let rep = runner::run(&s, pool)?;
    let files = rep.write(out)?;
    Ok((rep, files))
}
