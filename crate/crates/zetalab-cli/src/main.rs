use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zetalab_cli::compare::{compare_files, Tolerances};
use zetalab_cli::suite::{run_suite, Status};
use zetalab_cli::{run_file, CliError, Pool};

#[derive(Parser)]
#[command(name = "zetalab", version, about = "Mean-square laboratory for zeta(s) A(s) on 1/4 < sigma < 1/2")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Output directory.
    #[arg(long, default_value = "reports")]
    out: PathBuf,
    /// Worker threads; results do not depend on it.
    #[arg(long)]
    workers: Option<usize>,
    /// Working precision in bits (only 53 is implemented).
    #[arg(long)]
    precision: Option<u32>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one scenario file (TOML, or a JSON report to rerun its config).
    Run {
        scenario: PathBuf,
        #[command(flatten)]
        args: RunArgs,
    },
    /// Compare a report with a baseline; exit 2 on drift.
    Compare {
        report: PathBuf,
        baseline: PathBuf,
        /// Tolerance file; relative 1e-9 on every numeric field when absent.
        #[arg(long)]
        tol: Option<PathBuf>,
    },
    /// Run a suite file and aggregate the verdicts.
    Suite {
        suite: PathBuf,
        #[command(flatten)]
        args: RunArgs,
    },
}

fn pool(workers: Option<usize>) -> Result<Pool, CliError> {
    let n = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    Pool::new(n)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(s) => ExitCode::from(s.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<Status, CliError> {
    match cmd {
        Cmd::Run { scenario, args } => {
            let p = pool(args.workers)?;
            let (rep, files) = run_file(&scenario, &args.out, &p, args.precision)?;
            for v in &rep.verdicts {
                println!(
                    "{} {}: {} vs {} ({})",
                    if v.pass { "PASS" } else { "FAIL" },
                    v.name,
                    v.value.render(),
                    v.threshold.render(),
                    v.detail
                );
            }
            for f in files {
                println!("wrote {}", f.display());
            }
            Ok(if rep.pass { Status::Pass } else { Status::Fail })
        }
        Cmd::Compare { report, baseline, tol } => {
            let tol = match tol {
                Some(p) => Tolerances::load(&p)?,
                None => Tolerances::default(),
            };
            let drift = compare_files(&report, &baseline, &tol)?;
            for d in &drift {
                println!("drift {d}");
            }
            if drift.is_empty() {
                println!("match");
                Ok(Status::Pass)
            } else {
                Ok(Status::Fail)
            }
        }
        Cmd::Suite { suite, args } => {
            let p = pool(args.workers)?;
            let rep = run_suite(&suite, &args.out, &p, args.precision)?;
            for e in &rep.entries {
                let tag = match e.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Error => "ERROR",
                };
                println!("{tag} {} {}", e.scenario.display(), e.detail);
            }
            Ok(rep.status)
        }
    }
}
