//! Size/delay measurements across constructions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::automaton::{Automaton, Meta, SizeMetrics, Variant, DOCUMENT_VERSION};
use crate::error::{Error, Result};
use crate::level::ceil_log;
use crate::multi::multi_cap;
use crate::single::{build_single, KLevelOptions};
use crate::verify::{map_items, Execution};

/// Asymptotic size and the construction's bound on consecutive defaults.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoreticalBound {
    pub size: String,
    /// Longest default chain the construction can produce; `None` when the
    /// variant makes no promise.
    pub default_chain_cap: Option<usize>,
}

/// Bound for the automaton described by `meta`, with `sigma` the alphabet
/// size in effect.
pub fn theoretical_bound(meta: &Meta, sigma: usize) -> TheoreticalBound {
    let n = meta.n.unwrap_or(0);
    let (size, cap) = match meta.variant {
        Variant::Sa => ("O(n*sigma)", Some(0)),
        Variant::Chain => ("O(n)", Some(n)),
        Variant::Level => {
            let floor_log = if n == 0 { 0 } else { n.ilog2() as usize + 1 };
            ("O(n*log n)", Some(floor_log))
        }
        Variant::KLevel => {
            let k = meta.k.unwrap_or(2);
            let cap = ceil_log(k, sigma).max(1) as usize;
            ("O(n*k*log_k sigma)", Some(cap + 1))
        }
        Variant::NaiveCommon => {
            let m = meta
                .lengths
                .as_ref()
                .and_then(|l| l.iter().copied().min())
                .unwrap_or(0);
            ("O(n1*n2)", Some(m))
        }
        Variant::CommonLevel | Variant::AnyLevel => (
            "O(N*log sigma*prod n_i)",
            Some(multi_cap(sigma) as usize + 1),
        ),
        Variant::Custom => ("unknown", None),
    };
    TheoreticalBound {
        size: size.to_string(),
        default_chain_cap: cap,
    }
}

/// One measured construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TradeoffRow {
    pub variant: Variant,
    pub n: Option<usize>,
    pub lengths: Option<Vec<usize>>,
    pub sigma: usize,
    pub k: Option<u64>,
    pub metrics: SizeMetrics,
    /// `longest_default_chain + 1`: most edges walked to consume one character.
    pub delay_bound: usize,
    pub theory: TheoreticalBound,
}

impl TradeoffRow {
    pub fn measure(a: &Automaton) -> Self {
        let meta = a.meta();
        let sigma = meta.sigma.unwrap_or(a.alphabet().len());
        let metrics = a.size_metrics();
        TradeoffRow {
            variant: meta.variant,
            n: meta.n,
            lengths: meta.lengths.clone(),
            sigma,
            k: meta.k,
            metrics,
            delay_bound: metrics.longest_default_chain + 1,
            theory: theoretical_bound(meta, sigma),
        }
    }

    fn with_sigma(mut self, sigma: usize) -> Self {
        self.sigma = sigma;
        self
    }
}

/// Flat stats record written by the CLI (`stats`, `bench --format structured`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDocument {
    pub version: u64,
    pub variant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<usize>>,
    pub sigma: usize,
    pub k: Option<u64>,
    pub states: usize,
    pub regular_transitions: usize,
    pub default_transitions: usize,
    pub size_total: usize,
    pub longest_default_chain: usize,
    pub reachable_states: usize,
    pub delay_bound_structural: usize,
    pub theoretical_delay_cap: Option<usize>,
}

impl From<&TradeoffRow> for StatsDocument {
    fn from(r: &TradeoffRow) -> Self {
        StatsDocument {
            version: DOCUMENT_VERSION,
            variant: r.variant.name().to_string(),
            n: r.n,
            lengths: r.lengths.clone(),
            sigma: r.sigma,
            k: r.k,
            states: r.metrics.states,
            regular_transitions: r.metrics.regular_transitions,
            default_transitions: r.metrics.default_transitions,
            size_total: r.metrics.size_total,
            longest_default_chain: r.metrics.longest_default_chain,
            reachable_states: r.metrics.reachable_states,
            delay_bound_structural: r.delay_bound,
            theoretical_delay_cap: r.theory.default_chain_cap,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TradeoffOptions {
    /// Alphabet size override (must not be below `|Σ(text)|`).
    pub sigma: Option<usize>,
    pub execution: Execution,
}

/// Rows for `sa`, `chain`, `level`, then one `klevel` row per distinct `k`
/// in increasing order.
pub fn tradeoff_table(
    text: &[char],
    ks: &[u64],
    opts: TradeoffOptions,
) -> Result<Vec<TradeoffRow>> {
    let actual = Alphabet::from_text(text).len();
    let sigma = opts.sigma.unwrap_or(actual);
    if sigma < actual {
        return Err(Error::SigmaTooSmall {
            requested: sigma,
            actual,
        });
    }
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    let mut jobs: Vec<(Variant, Option<u64>)> = vec![
        (Variant::Sa, None),
        (Variant::Chain, None),
        (Variant::Level, None),
    ];
    jobs.extend(ks.into_iter().map(|k| (Variant::KLevel, Some(k))));
    let kopts = KLevelOptions {
        sigma: Some(sigma),
        ..Default::default()
    };
    map_items(jobs, opts.execution, |(variant, k)| {
        build_single(variant, text, k, kopts).map(|a| TradeoffRow::measure(&a).with_sigma(sigma))
    })
    .into_iter()
    .collect()
}

/// Uniform random text of length `n` over `sigma` symbols. Symbols are `a..`
/// for `sigma <= 26` and the code points `0..sigma` otherwise.
pub fn random_text(n: usize, sigma: usize, seed: u64) -> Result<Vec<char>> {
    if sigma == 0 || sigma > 256 {
        return Err(Error::RandomAlphabet(sigma));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let symbol = |i: usize| {
        if sigma <= 26 {
            (b'a' + i as u8) as char
        } else {
            char::from(i as u8)
        }
    };
    Ok((0..n).map(|_| symbol(rng.gen_range(0..sigma))).collect())
}
