//! Multi-threaded exact search.
//!
//! Each size `k` is split into shards by smallest element and the shards run
//! on a rayon pool. Once some shard finds a forcing set, shards with a larger
//! first element stop. The reported witness and `subsets_tested` only depend
//! on the shards up to the winner, all of which run to completion, so results
//! match the sequential search regardless of the worker count.

use std::cell::Cell;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use twistcube_core::solver::{
    exact, prepare, search_shard, start_size, ShardOutcome, SolveOptions,
};
use twistcube_core::{Graph, SolveResult, SolveStatus};

use crate::error::CliError;

/// How often, in closures, a shard publishes its count and checks the clock.
const POLL_INTERVAL: u64 = 1 << 12;

#[derive(Clone, Debug, Default)]
pub struct ParallelOptions {
    pub core: SolveOptions,
    pub time_budget: Option<Duration>,
    /// `0` uses rayon's default.
    pub workers: usize,
    /// A known forcing set, reported if the search is inconclusive.
    pub known_upper: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub result: SolveResult,
    pub elapsed: Duration,
    /// Set when the time or subset budget ran out.
    pub interrupted: bool,
}

pub fn solve_parallel(g: &Graph, opts: &ParallelOptions) -> Result<SolveReport, CliError> {
    let start = Instant::now();
    let sg = prepare(g, &opts.core)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let n = sg.order();
    let max_k = opts.core.max_k.unwrap_or(n).min(n);
    let deadline = opts.time_budget.map(|d| start + d);
    let budget = opts.core.subset_budget;
    let global = AtomicU64::new(0);
    let cancelled = AtomicBool::new(false);
    let mut tested = 0u64;
    let mut k = start_size(g);
    let finish = |result: SolveResult, interrupted: bool| SolveReport {
        result,
        elapsed: start.elapsed(),
        interrupted,
    };
    let out_of_budget = |total: u64| {
        budget.is_some_and(|b| total >= b) || deadline.is_some_and(|d| Instant::now() >= d)
    };
    while k <= max_k {
        if out_of_budget(global.load(Ordering::Relaxed)) {
            return Ok(finish(inconclusive(k, n, tested, opts), true));
        }
        let winner = AtomicUsize::new(usize::MAX);
        let outcomes: Vec<(ShardOutcome, u64)> = pool.install(|| {
            (0..n)
                .into_par_iter()
                .map(|first| {
                    let mut local = 0u64;
                    let flushed = Cell::new(0u64);
                    let stop = |t: u64| {
                        if winner.load(Ordering::Relaxed) < first {
                            return true;
                        }
                        if t - flushed.get() >= POLL_INTERVAL {
                            let fresh = t - flushed.get();
                            flushed.set(t);
                            let total = global.fetch_add(fresh, Ordering::Relaxed) + fresh;
                            if out_of_budget(total) {
                                cancelled.store(true, Ordering::Relaxed);
                            }
                        }
                        cancelled.load(Ordering::Relaxed)
                    };
                    let outcome = search_shard(&sg, k, first, &stop, &mut local);
                    global.fetch_add(local - flushed.get(), Ordering::Relaxed);
                    if let ShardOutcome::Found(_) = outcome {
                        winner.fetch_min(first, Ordering::Relaxed);
                    }
                    (outcome, local)
                })
                .collect()
        });
        for (outcome, local) in outcomes {
            match outcome {
                ShardOutcome::Found(mask) => {
                    tested += local;
                    return Ok(finish(exact(mask, tested), false));
                }
                ShardOutcome::Exhausted => tested += local,
                // Interrupted shards before the winner mean a budget ran out.
                ShardOutcome::Interrupted => {
                    tested += local;
                    return Ok(finish(inconclusive(k, n, tested, opts), true));
                }
            }
        }
        if cancelled.load(Ordering::Relaxed) {
            return Ok(finish(inconclusive(k + 1, n, tested, opts), true));
        }
        k += 1;
    }
    Ok(finish(inconclusive(k, n, tested, opts), false))
}

fn inconclusive(lower: usize, order: usize, tested: u64, opts: &ParallelOptions) -> SolveResult {
    let witness = opts
        .known_upper
        .clone()
        .unwrap_or_else(|| (0..order).collect());
    SolveResult {
        status: SolveStatus::Inconclusive,
        lower,
        upper: witness.len(),
        witness,
        subsets_tested: tested,
    }
}
