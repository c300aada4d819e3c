//! Maxwell counting conditions in dimension `d`:
//!
//! 1. `|E| = d|V| - C(d+1, 2)`
//! 2. `|E(V')| <= d|V'| - C(d+1, 2)` for every `V'` with `|V'| >= d`.
//!
//! Condition 2 is checked by brute force. No pebble-game style shortcut is
//! known for these counts when `d >= 3`, so every subset of size at least `d`
//! is visited. Subsets are walked in Gray-code order inside fixed-prefix
//! chunks so each step updates the induced edge count with one popcount.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::trivial_motions;

pub const DEFAULT_ENUM_CAP: usize = 28;
/// Subsets are bitmasks in a `u64`.
pub const HARD_ENUM_LIMIT: usize = 63;
/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_ENV: &str = "RIGIDKIT_ENUM_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumOptions {
    /// Worker threads; `0` uses the global pool.
    pub parallelism: usize,
    pub cap: usize,
    /// Run condition 2 even when condition 1 fails.
    pub force_condition2: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            parallelism: 0,
            cap: DEFAULT_ENUM_CAP,
            force_condition2: false,
        }
    }
}

impl EnumOptions {
    /// Defaults, with the cap taken from the environment when set.
    pub fn from_env() -> Self {
        let cap = std::env::var(ENUM_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_ENUM_CAP);
        EnumOptions {
            cap,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition1 {
    pub expected: usize,
    pub actual: usize,
    pub pass: bool,
}

/// A vertex subset breaking condition 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub members: VertexSubset,
    pub induced_edges: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition2 {
    pub pass: bool,
    pub witness: Option<Witness>,
    pub subsets_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxwellReport {
    pub d: usize,
    pub pass: bool,
    pub condition1: Condition1,
    /// `None` when condition 2 was skipped.
    pub condition2: Option<Condition2>,
    pub subsets_checked: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn bound(d: usize, size: usize) -> usize {
    d * size - trivial_motions(d)
}

pub fn check_condition1(g: &Graph, d: usize) -> Result<Condition1> {
    if g.n() < d {
        return Err(Error::BelowDimension { n: g.n(), d });
    }
    let expected = bound(d, g.n());
    Ok(Condition1 {
        expected,
        actual: g.m(),
        pass: expected == g.m(),
    })
}

fn binom(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * u64::from(n - i) / u64::from(i + 1))
}

/// Subsets of size `>= d` among masks whose high bits equal a prefix with
/// `fixed` members, the remaining `free` bits ranging freely.
fn large_subsets(free: u32, fixed: u32, d: usize) -> u64 {
    let need = (d as u32).saturating_sub(fixed);
    (need..=free).map(|k| binom(free, k)).sum()
}

/// Smallest violating mask of one prefix chunk, or `None`. Returns early
/// (with `None`) once a chunk with a smaller prefix has reported a witness.
fn scan_chunk(
    adj: &[u64],
    d: usize,
    low: usize,
    prefix: u64,
    best_prefix: &AtomicU64,
) -> Option<u64> {
    let trivial = trivial_motions(d) as i64;
    let d = d as i64;
    let mut set = prefix << low;
    let mut size = i64::from(set.count_ones());
    let mut count: i64 = (0..adj.len())
        .filter(|&v| set >> v & 1 == 1)
        .map(|v| i64::from((adj[v] & set).count_ones()))
        .sum::<i64>()
        / 2;
    let violates = |size: i64, count: i64| size >= d && count > d * size - trivial;
    let mut best = violates(size, count).then_some(set);
    for k in 1u64..(1u64 << low) {
        if k & 0xffff == 0 && best_prefix.load(Ordering::Relaxed) < prefix {
            return None;
        }
        let j = k.trailing_zeros() as usize;
        let bit = 1u64 << j;
        if set & bit == 0 {
            count += i64::from((adj[j] & set).count_ones());
            set |= bit;
            size += 1;
        } else {
            set &= !bit;
            count -= i64::from((adj[j] & set).count_ones());
            size -= 1;
        }
        if violates(size, count) && best.is_none_or(|b| set < b) {
            best = Some(set);
        }
    }
    if best.is_some() {
        best_prefix.fetch_min(prefix, Ordering::Relaxed);
    }
    best
}

/// Exhaustive check of condition 2.
///
/// On failure the witness is the violating subset with the smallest bitmask
/// (vertex `i` is bit `i`), independent of scheduling and worker count.
/// `subsets_checked` counts the subsets of size `>= d` in every chunk up to
/// the one holding the witness, so it is deterministic too.
pub fn check_condition2(g: &Graph, d: usize, opts: &EnumOptions) -> Result<Condition2> {
    let n = g.n();
    if n < d {
        return Err(Error::BelowDimension { n, d });
    }
    let cap = opts.cap.min(HARD_ENUM_LIMIT);
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let adj = g.adjacency_masks().expect("n within the bitmask limit");
    let high = n.saturating_sub(16).min(12);
    let low = n - high;
    let best_prefix = AtomicU64::new(u64::MAX);
    let run = || {
        (0..1u64 << high)
            .into_par_iter()
            .filter_map(|q| scan_chunk(&adj, d, low, q, &best_prefix).map(|m| (q, m)))
            .min()
    };
    let found = if opts.parallelism == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.parallelism)
            .build()
            .map_err(|e| Error::ShapeMismatch(format!("thread pool: {e}")))?
            .install(run)
    };
    let chunks_upto = |last: u64| -> u64 {
        (0..=last)
            .map(|q| large_subsets(low as u32, q.count_ones(), d))
            .sum()
    };
    Ok(match found {
        None => Condition2 {
            pass: true,
            witness: None,
            subsets_checked: large_subsets(n as u32, 0, d),
        },
        Some((q, mask)) => {
            let members = VertexSubset::from_mask(mask);
            let induced_edges = g.induced_edge_count(&members)?;
            Condition2 {
                pass: false,
                witness: Some(Witness {
                    bound: bound(d, members.len()),
                    members,
                    induced_edges,
                }),
                subsets_checked: chunks_upto(q),
            }
        }
    })
}

/// Both conditions. Condition 2 is skipped when condition 1 fails unless
/// `opts.force_condition2` is set.
pub fn check_maxwell(g: &Graph, d: usize, opts: &EnumOptions) -> Result<MaxwellReport> {
    let start = Instant::now();
    let condition1 = check_condition1(g, d)?;
    let condition2 = if condition1.pass || opts.force_condition2 {
        Some(check_condition2(g, d, opts)?)
    } else {
        None
    };
    let pass = condition1.pass && condition2.as_ref().is_some_and(|c| c.pass);
    Ok(MaxwellReport {
        d,
        pass,
        condition1,
        subsets_checked: condition2.as_ref().map_or(0, |c| c.subsets_checked),
        condition2,
        elapsed: start.elapsed(),
    })
}
