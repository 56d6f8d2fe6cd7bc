//! Exact zero forcing numbers by exhaustive subset search.
//!
//! Sizes are tried from the minimum degree upward. For a fixed size `k` the
//! `k`-subsets are walked depth first in lexicographic order while the
//! derived set of the current prefix is carried along: the derived set of
//! `prefix ∪ {x}` is the derived set of `derived(prefix) ∪ {x}`. A candidate
//! `x` already inside `derived(prefix)` is skipped, since the resulting set
//! has the same derived set as a smaller one, and all smaller sizes are
//! known to fail. The first success is therefore the lexicographically least
//! minimum zero forcing set.
//!
//! The search is split into shards by the smallest element so callers can
//! run shards concurrently; [`solve_exact`] runs them in order.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forcing::{mask_members, SmallGraph};
use crate::graph::{CubeGraph, Graph};

/// Orders above this need [`SolveOptions::allow_large`].
pub const DEFAULT_ORDER_LIMIT: usize = 32;
/// Hard limit of the mask-based search.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Give up (inconclusive) after exhausting this size.
    pub max_k: Option<usize>,
    /// Give up after this many closure evaluations.
    pub subset_budget: Option<u64>,
    /// Permit orders between [`DEFAULT_ORDER_LIMIT`] and [`MAX_ORDER`].
    pub allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Every set smaller than this is certified not to force.
    pub lower: usize,
    /// Size of `witness`.
    pub upper: usize,
    /// Smallest zero forcing set found; lexicographically least when exact.
    pub witness: Vec<usize>,
    /// Closure evaluations performed.
    pub subsets_tested: u64,
}

impl SolveResult {
    pub fn z(&self) -> Option<usize> {
        (self.status == SolveStatus::Exact).then_some(self.upper)
    }
}

/// Minimum degree, `0` for a graph without vertices or edges.
pub fn lower_bound(g: &Graph) -> usize {
    g.min_degree().unwrap_or(0)
}

/// The copy with final bit `0`, which forces any twisted hypercube.
pub fn upper_bound(cube: &CubeGraph) -> Result<(usize, Vec<usize>)> {
    if cube.dimension() == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    cube.recover_spec()?;
    let witness: Vec<usize> = (0..cube.graph().order()).filter(|v| v & 1 == 0).collect();
    if !crate::forcing::is_zero_forcing_set(cube.graph(), &witness)? {
        return Err(Error::Domain("copy-0 half does not force".into()));
    }
    Ok((witness.len(), witness))
}

/// Result of searching one shard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShardOutcome {
    /// Mask of the lexicographically least forcing set in the shard.
    Found(u64),
    Exhausted,
    Interrupted,
}

/// Searches the `k`-subsets of `sg` whose smallest element is `first`.
///
/// `stop` is polled between closures; `tested` counts closure evaluations.
pub fn search_shard(
    sg: &SmallGraph,
    k: usize,
    first: usize,
    stop: &dyn Fn(u64) -> bool,
    tested: &mut u64,
) -> ShardOutcome {
    let n = sg.order();
    if k == 0 || first + k > n {
        return ShardOutcome::Exhausted;
    }
    let mut search = Dfs {
        sg,
        k,
        stop,
        tested,
        chosen: 1u64 << first,
    };
    *search.tested += 1;
    let derived = sg.closure(1 << first);
    search.descend(first, 1, derived)
}

struct Dfs<'a> {
    sg: &'a SmallGraph,
    k: usize,
    stop: &'a dyn Fn(u64) -> bool,
    tested: &'a mut u64,
    chosen: u64,
}

impl Dfs<'_> {
    fn descend(&mut self, last: usize, depth: usize, derived: u64) -> ShardOutcome {
        if derived == self.sg.full() {
            return ShardOutcome::Found(self.chosen);
        }
        if depth == self.k {
            return ShardOutcome::Exhausted;
        }
        let n = self.sg.order();
        let remaining = self.k - depth;
        for x in last + 1..=n - remaining {
            if derived & (1 << x) != 0 {
                continue;
            }
            if (self.stop)(*self.tested) {
                return ShardOutcome::Interrupted;
            }
            *self.tested += 1;
            let next = self.sg.closure(derived | 1 << x);
            self.chosen |= 1 << x;
            match self.descend(x, depth + 1, next) {
                ShardOutcome::Exhausted => {}
                other => return other,
            }
            self.chosen &= !(1 << x);
        }
        ShardOutcome::Exhausted
    }
}

/// Prepares the mask graph after checking order limits.
pub fn prepare(g: &Graph, opts: &SolveOptions) -> Result<SmallGraph> {
    let limit = if opts.allow_large {
        MAX_ORDER
    } else {
        DEFAULT_ORDER_LIMIT
    };
    if g.order() == 0 {
        return Err(Error::Domain("graph has no vertices".into()));
    }
    if g.order() > limit {
        return Err(Error::Resource {
            what: "order for exact search",
            limit,
            got: g.order(),
        });
    }
    SmallGraph::new(g)
}

/// Smallest size worth trying: `max(1, δ)`.
pub fn start_size(g: &Graph) -> usize {
    lower_bound(g).max(1)
}

/// Exact zero forcing number, run shard by shard on the current thread.
pub fn solve_exact(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    let sg = prepare(g, opts)?;
    let n = sg.order();
    let mut tested = 0u64;
    let budget = opts.subset_budget;
    let stop = move |t: u64| budget.is_some_and(|b| t >= b);
    let max_k = opts.max_k.unwrap_or(n).min(n);
    let mut lower = start_size(g);
    while lower <= max_k {
        for first in 0..n {
            match search_shard(&sg, lower, first, &stop, &mut tested) {
                ShardOutcome::Found(mask) => {
                    return Ok(exact(mask, tested));
                }
                ShardOutcome::Exhausted => {}
                ShardOutcome::Interrupted => return Ok(inconclusive(lower, n, tested)),
            }
        }
        lower += 1;
    }
    Ok(inconclusive(lower, n, tested))
}

pub fn exact(mask: u64, tested: u64) -> SolveResult {
    let witness = mask_members(mask);
    SolveResult {
        status: SolveStatus::Exact,
        lower: witness.len(),
        upper: witness.len(),
        witness,
        subsets_tested: tested,
    }
}

/// Bounds after certifying that every set below `lower` fails. The whole
/// vertex set stands in as the upper witness.
pub fn inconclusive(lower: usize, order: usize, tested: u64) -> SolveResult {
    SolveResult {
        status: SolveStatus::Inconclusive,
        lower,
        upper: order,
        witness: (0..order).collect(),
        subsets_tested: tested,
    }
}
