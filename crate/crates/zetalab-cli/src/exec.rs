//! Thread-pool executor. Work is distributed across threads but every
//! result is collected in index order, so reductions stay bit-identical
//! for any worker count.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use zetalab::quad::{Executor, PanelOutcome};

use crate::error::CliError;

/// Fixed-size pool.
pub struct Pool {
    pool: ThreadPool,
    workers: usize,
}

impl std::fmt::Debug for Pool {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Pool").field("workers", &self.workers).finish()
    }
}

impl Pool {
    /// Pool with `workers >= 1` threads.
    pub fn new(workers: usize) -> Result<Self, CliError> {
        if workers == 0 {
            return Err(CliError::Input("--workers must be at least 1".into()));
        }
        let pool = ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| CliError::Input(format!("cannot start {workers} workers: {e}")))?;
        Ok(Self { pool, workers })
    }

    /// Thread count.
    pub fn workers(&self) -> usize {
        self.workers
    }

    /// `f` over `items`, results in input order.
    pub fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
        self.pool.install(|| items.par_iter().map(&f).collect())
    }
}

impl Executor for Pool {
    fn map(&self, n: usize, job: &(dyn Fn(usize) -> PanelOutcome + Sync)) -> Vec<PanelOutcome> {
        self.pool.install(|| (0..n).into_par_iter().map(job).collect())
    }
}
