//! Exhaustive (or sampled) comparison of automata against oracles and against
//! each other.
//!
//! Patterns are enumerated in length-then-lexicographic order and addressed
//! by index, so the pattern space splits into independent chunks. With the
//! `parallel` feature the chunks run on the rayon pool; results are merged in
//! index order either way, so reports do not depend on the execution mode.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::automaton::{Automaton, StateId};
use crate::error::{Error, Result};
use crate::oracle::Membership;

/// How to spread independent work items.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon data parallelism; same as `Sequential` without the `parallel`
    /// feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

const CHUNK: u64 = 4096;

/// Applies `f` to every chunk `[lo, hi)` of `0..total` and concatenates the
/// results in order.
pub(crate) fn map_chunks<T, F>(total: u64, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> Vec<T> + Sync + Send,
{
    let chunks = total.div_ceil(CHUNK);
    let run = |c: u64| f(c * CHUNK, ((c + 1) * CHUNK).min(total));
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..chunks).into_par_iter().flat_map_iter(run).collect(),
        _ => (0..chunks).flat_map(run).collect(),
    }
}

/// Runs `f` over `items` preserving order.
pub(crate) fn map_items<I, T, F>(items: Vec<I>, exec: Execution, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.into_par_iter().map(f).collect(),
        _ => items.into_iter().map(f).collect(),
    }
}

/// All patterns over an alphabet up to a maximum length, indexed in
/// length-lexicographic order.
#[derive(Debug, Clone)]
pub struct PatternSpace {
    alphabet: Vec<char>,
    max_len: usize,
    /// `offsets[l]` = number of patterns shorter than `l`.
    offsets: Vec<u128>,
}

impl PatternSpace {
    pub fn new(alphabet: Vec<char>, max_len: usize) -> Self {
        let base = alphabet.len() as u128;
        let mut offsets = Vec::with_capacity(max_len + 2);
        let (mut acc, mut pow) = (0u128, 1u128);
        for _ in 0..=max_len {
            offsets.push(acc);
            acc = acc.saturating_add(pow);
            pow = pow.saturating_mul(base);
        }
        offsets.push(acc);
        PatternSpace {
            alphabet,
            max_len,
            offsets,
        }
    }

    /// Number of patterns of length `0..=max_len` (saturating).
    pub fn size(&self) -> u128 {
        self.offsets[self.max_len + 1]
    }

    pub fn pattern(&self, index: u64, out: &mut Vec<char>) {
        let index = index as u128;
        let len = self.offsets.partition_point(|&o| o <= index) - 1;
        let mut rest = index - self.offsets[len];
        out.clear();
        out.resize(len, '\0');
        let base = self.alphabet.len() as u128;
        for slot in out.iter_mut().rev() {
            *slot = self.alphabet[(rest % base) as usize];
            rest /= base;
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng, out: &mut Vec<char>) {
        let len = rng.gen_range(0..=self.max_len);
        out.clear();
        if self.alphabet.is_empty() {
            return;
        }
        out.extend((0..len).map(|_| self.alphabet[rng.gen_range(0..self.alphabet.len())]));
    }
}

/// Limits and mode for pattern enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Most patterns to check.
    pub budget: usize,
    /// When the space exceeds the budget, check `budget` random patterns
    /// drawn with this seed instead of refusing.
    pub sample_seed: Option<u64>,
    pub execution: Execution,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            budget: 2_000_000,
            sample_seed: None,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub pattern: String,
    pub automaton: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub patterns_checked: u64,
    pub mode: CheckMode,
    pub mismatches: Vec<Mismatch>,
    /// Largest number of defaults followed before one consumed character.
    pub max_defaults_per_char: u32,
    pub elapsed: Duration,
}

impl EquivalenceReport {
    pub fn is_equivalent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

enum Plan {
    Exhaustive(u64),
    Sampled(u64, u64),
}

fn plan(space: &PatternSpace, cfg: &EnumerationConfig) -> Result<Plan> {
    let size = space.size();
    if size <= cfg.budget as u128 {
        return Ok(Plan::Exhaustive(size as u64));
    }
    match cfg.sample_seed {
        Some(seed) => Ok(Plan::Sampled(cfg.budget as u64, seed)),
        None => Err(Error::EnumerationBudget {
            required: size,
            budget: cfg.budget,
        }),
    }
}

/// Visits every planned pattern; `visit` returns the per-pattern result.
fn for_patterns<T, F>(space: &PatternSpace, plan: &Plan, exec: Execution, visit: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[char]) -> Option<T> + Sync + Send,
{
    match *plan {
        Plan::Exhaustive(total) => map_chunks(total, exec, |lo, hi| {
            let mut buf = Vec::new();
            (lo..hi)
                .filter_map(|i| {
                    space.pattern(i, &mut buf);
                    visit(&buf)
                })
                .collect()
        }),
        Plan::Sampled(count, seed) => map_chunks(count, exec, |lo, hi| {
            // one stream per chunk keeps the sample independent of scheduling
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(lo / CHUNK);
            let mut buf = Vec::new();
            (lo..hi)
                .filter_map(|_| {
                    space.sample(&mut rng, &mut buf);
                    visit(&buf)
                })
                .collect()
        }),
    }
}

/// Compares `a` with `oracle` on every pattern over `alphabet` of length at
/// most `max_len`.
pub fn equivalence_check<O: Membership + ?Sized>(
    a: &Automaton,
    oracle: &O,
    alphabet: &[char],
    max_len: usize,
    cfg: &EnumerationConfig,
) -> Result<EquivalenceReport> {
    let started = Instant::now();
    let space = PatternSpace::new(alphabet.to_vec(), max_len);
    let plan = plan(&space, cfg)?;
    let (checked, mode) = match plan {
        Plan::Exhaustive(n) => (n, CheckMode::Exhaustive),
        Plan::Sampled(n, seed) => (n, CheckMode::Sampled { seed }),
    };
    enum Item {
        Delay(u32),
        Miss(Mismatch, u32),
    }
    let items = for_patterns(&space, &plan, cfg.execution, |p| {
        let out = a.run(p);
        let expected = oracle.accepts(p);
        let delay = out.max_defaults();
        if out.accepted != expected {
            Some(Item::Miss(
                Mismatch {
                    pattern: p.iter().collect(),
                    automaton: out.accepted,
                    oracle: expected,
                },
                delay,
            ))
        } else if delay > 0 {
            Some(Item::Delay(delay))
        } else {
            None
        }
    });
    let mut max_defaults = 0;
    let mut mismatches = Vec::new();
    for item in items {
        match item {
            Item::Delay(d) => max_defaults = max_defaults.max(d),
            Item::Miss(m, d) => {
                max_defaults = max_defaults.max(d);
                mismatches.push(m);
            }
        }
    }
    Ok(EquivalenceReport {
        patterns_checked: checked,
        mode,
        mismatches,
        max_defaults_per_char: max_defaults,
        elapsed: started.elapsed(),
    })
}

/// First pattern on which two automata disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCounterexample {
    pub pattern: String,
    pub left_accepted: bool,
    pub right_accepted: bool,
    pub left_trace: Vec<Vec<usize>>,
    pub right_trace: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    pub patterns_checked: u64,
    pub counterexample: Option<TraceCounterexample>,
}

impl TraceReport {
    pub fn is_equivalent(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn decoded(a: &Automaton, trace: &[StateId]) -> Vec<Vec<usize>> {
    trace.iter().map(|&s| a.state_coords(s)).collect()
}

/// Checks that both automata agree on acceptance and, for accepted patterns,
/// consume characters into the same states (compared as coordinates).
pub fn trace_equivalence(
    left: &Automaton,
    right: &Automaton,
    alphabet: &[char],
    max_len: usize,
    cfg: &EnumerationConfig,
) -> Result<TraceReport> {
    let space = PatternSpace::new(alphabet.to_vec(), max_len);
    let plan = plan(&space, cfg)?;
    let checked = match plan {
        Plan::Exhaustive(n) | Plan::Sampled(n, _) => n,
    };
    let left_ix = left.meta().tuple_indexer();
    let right_ix = right.meta().tuple_indexer();
    let same_space = left_ix == right_ix;
    let misses = for_patterns(&space, &plan, cfg.execution, |p| {
        let (l, r) = (left.run(p), right.run(p));
        let agree = l.accepted == r.accepted
            && (!l.accepted
                || if same_space {
                    l.consumed_targets == r.consumed_targets
                } else {
                    decoded(left, &l.consumed_targets) == decoded(right, &r.consumed_targets)
                });
        (!agree).then(|| TraceCounterexample {
            pattern: p.iter().collect(),
            left_accepted: l.accepted,
            right_accepted: r.accepted,
            left_trace: decoded(left, &l.consumed_targets),
            right_trace: decoded(right, &r.consumed_targets),
        })
    });
    Ok(TraceReport {
        patterns_checked: checked,
        counterexample: misses.into_iter().next(),
    })
}
