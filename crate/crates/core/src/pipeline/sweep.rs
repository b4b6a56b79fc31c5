use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{sequence, Method, PipelineError, SequenceOptions};
use crate::groups::{Element, Group};
use crate::rectify::MAX_ORDER;

/// Exhaustive sweeps are limited to groups of at most this order.
pub const MAX_EXHAUSTIVE_ORDER: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every `k`-subset of `G \ {0}`, in colexicographic order of element ranks.
    Exhaustive,
    /// `count` uniformly random `k`-subsets drawn from a ChaCha8 stream.
    Sample { count: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub mode: SweepMode,
    pub workers: usize,
    pub method: Method,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            mode: SweepMode::Exhaustive,
            workers: 1,
            method: Method::Auto,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFailure {
    /// Colex rank (exhaustive) or sample index.
    pub index: u64,
    pub set: Vec<Element>,
    pub diagnostics: String,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub group: Group,
    pub k: usize,
    pub mode: SweepMode,
    pub subsets_tested: u64,
    pub all_sequenced: bool,
    /// Subsets answered by the search fallback.
    pub fallbacks: u64,
    /// Sorted by index.
    pub failures: Vec<SweepFailure>,
    pub wall_time: Duration,
}

impl SweepReport {
    /// Equality of everything except the timing.
    pub fn same_outcome(&self, other: &SweepReport) -> bool {
        self.group == other.group
            && self.k == other.k
            && self.mode == other.mode
            && self.subsets_tested == other.subsets_tested
            && self.all_sequenced == other.all_sequenced
            && self.fallbacks == other.fallbacks
            && self.failures == other.failures
    }

    pub fn to_json(&self) -> Value {
        let g = &self.group;
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| json!({"index": f.index, "set": g.encode_elements(&f.set), "diagnostics": f.diagnostics}))
            .collect();
        let (mode, seed) = match self.mode {
            SweepMode::Exhaustive => ("exhaustive", None),
            SweepMode::Sample { seed, .. } => ("sample", Some(seed)),
        };
        json!({
            "group": g.spec(),
            "k": self.k,
            "mode": mode,
            "rng_seed": seed,
            "subsets_tested": self.subsets_tested,
            "all_sequenced": self.all_sequenced,
            "fallbacks": self.fallbacks,
            "failure_count": self.failures.len(),
            "first_failure": failures.first(),
            "failures": failures,
            "wall_time_ms": self.wall_time.as_millis() as u64,
        })
    }
}

fn binomial_table(n: usize, k: usize) -> Vec<Vec<u128>> {
    // table[i][c] = C(c, i)
    let mut t = vec![vec![0u128; n + 1]; k + 1];
    for c in 0..=n {
        t[0][c] = 1;
        for i in 1..=k.min(c) {
            t[i][c] = t[i - 1][c - 1].saturating_add(t[i][c - 1]);
        }
    }
    t
}

/// The `rank`-th `k`-subset of `{0, …, n-1}` in colexicographic order, ascending.
pub fn colex_unrank(mut rank: u128, n: usize, k: usize) -> Vec<usize> {
    let t = binomial_table(n, k);
    unrank_with(&t, &mut rank, n, k)
}

fn unrank_with(t: &[Vec<u128>], rank: &mut u128, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    let mut hi = n;
    for i in (1..=k).rev() {
        // largest c < hi with C(c, i) ≤ rank
        let c = (i - 1..hi).rev().find(|&c| t[i][c] <= *rank).expect("rank in range");
        out[i - 1] = c;
        *rank -= t[i][c];
        hi = c;
    }
    out
}

/// Runs the sequencing pipeline over many `k`-subsets of `G \ {0}`.
///
/// The report does not depend on `workers`.
pub fn sweep(group: &Group, k: usize, opts: &SweepOptions) -> Result<SweepReport, PipelineError> {
    let start = Instant::now();
    let order = group
        .order()
        .ok_or_else(|| PipelineError::Sweep(format!("{} is infinite", group.spec())))?;
    if k > MAX_ORDER {
        return Err(PipelineError::Sweep(format!("k = {k} exceeds {MAX_ORDER}")));
    }
    let zero = group.identity();
    let pool: Vec<Element> = group.enumerate()?.into_iter().filter(|a| *a != zero).collect();
    let n = pool.len();
    let seq_opts = SequenceOptions {
        method: opts.method,
        ..Default::default()
    };
    let run = |index: u64, positions: &[usize]| -> Option<(bool, Option<SweepFailure>)> {
        let set: Vec<Element> = positions.iter().map(|&i| pool[i].clone()).collect();
        let (fallback, problem) = match sequence(group, &set, &seq_opts) {
            Ok(o) if o.sequencing.valid => (o.is_fallback(), None),
            Ok(o) => (o.is_fallback(), Some(format!("invalid ordering, collision {:?}", o.sequencing.collision))),
            Err(e) => (false, Some(e.to_string())),
        };
        if !fallback && problem.is_none() {
            return None;
        }
        let failure = problem.map(|diagnostics| SweepFailure { index, set, diagnostics });
        Some((fallback, failure))
    };
    let threads = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| PipelineError::Sweep(e.to_string()))?;

    let (tested, notes): (u64, Vec<(bool, Option<SweepFailure>)>) = match opts.mode {
        SweepMode::Exhaustive => {
            if order > MAX_EXHAUSTIVE_ORDER {
                return Err(PipelineError::Sweep(format!(
                    "exhaustive sweeps need |G| ≤ {MAX_EXHAUSTIVE_ORDER}, got {order}"
                )));
            }
            let t = binomial_table(n, k);
            let total = if k > n { 0 } else { t[k][n] };
            let total = u64::try_from(total).map_err(|_| PipelineError::Sweep("too many subsets".into()))?;
            let notes = threads.install(|| {
                (0..total)
                    .into_par_iter()
                    .filter_map(|r| {
                        let mut rank = r as u128;
                        let positions = unrank_with(&t, &mut rank, n, k);
                        run(r, &positions)
                    })
                    .collect()
            });
            (total, notes)
        }
        SweepMode::Sample { count, seed } => {
            if k > n {
                return Err(PipelineError::Sweep(format!("cannot draw {k} of {n} elements")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws: Vec<Vec<usize>> = (0..count)
                .map(|_| {
                    let mut v = sample(&mut rng, n, k).into_vec();
                    v.sort_unstable();
                    v
                })
                .collect();
            let notes = threads.install(|| {
                draws
                    .par_iter()
                    .enumerate()
                    .filter_map(|(i, p)| run(i as u64, p))
                    .collect()
            });
            (count, notes)
        }
    };
    let fallbacks = notes.iter().filter(|(f, _)| *f).count() as u64;
    let mut failures: Vec<SweepFailure> = notes.into_iter().filter_map(|(_, f)| f).collect();
    failures.sort_by_key(|f| f.index);
    Ok(SweepReport {
        group: group.clone(),
        k,
        mode: opts.mode,
        subsets_tested: tested,
        all_sequenced: failures.is_empty(),
        fallbacks,
        failures,
        wall_time: start.elapsed(),
    })
}
