//! Single-string subsequence automata: the classic subsequence automaton, the
//! chain with defaults, the level automaton, and the base-`k` alphabet-aware
//! level automaton.
//!
//! All constructions share the state set `0..=n` (state `s` = prefix of length
//! `s`) and route every regular transition on `α` to the leftmost occurrence of
//! `α` after `s`, so the states consumed by any accepted pattern are identical
//! across them.

use crate::alphabet::{Alphabet, SymbolId};
use crate::automaton::{Automaton, Builder, Meta, StateId, Variant};
use crate::error::{Error, Result};
use crate::level::LevelParams;

const NONE: u32 = u32::MAX;

/// `next(i, α)`: smallest `j > i` with `S[j] = α` (1-based positions).
#[derive(Debug, Clone)]
pub struct NextOccurrenceTable {
    alphabet: Alphabet,
    n: usize,
    table: Vec<u32>,
}

impl NextOccurrenceTable {
    pub fn new(text: &[char]) -> Self {
        let alphabet = Alphabet::from_text(text);
        Self::with_alphabet(text, alphabet)
    }

    /// Table over a caller-supplied alphabet that must cover `text`.
    pub fn with_alphabet(text: &[char], alphabet: Alphabet) -> Self {
        let sigma = alphabet.len();
        let n = text.len();
        let encoded = alphabet.encode(text);
        let mut table = vec![NONE; (n + 1) * sigma];
        for i in (0..n).rev() {
            let (head, tail) = table.split_at_mut((i + 1) * sigma);
            let row = &mut head[i * sigma..];
            row.copy_from_slice(&tail[..sigma]);
            row[encoded[i] as usize] = (i + 1) as u32;
        }
        NextOccurrenceTable { alphabet, n, table }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn next_id(&self, i: usize, symbol: SymbolId) -> Option<usize> {
        let v = self.table[i * self.alphabet.len() + symbol as usize];
        (v != NONE).then_some(v as usize)
    }

    pub fn next(&self, i: usize, c: char) -> Option<usize> {
        self.alphabet.id(c).and_then(|a| self.next_id(i, a))
    }

    /// Row `i` as `(symbol, next occurrence)` for every symbol that still occurs.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (SymbolId, usize)> + '_ {
        let sigma = self.alphabet.len();
        self.table[i * sigma..(i + 1) * sigma]
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v != NONE)
            .map(|(a, &v)| (a as SymbolId, v as usize))
    }
}

/// Collects the leftmost occurrence after `s` of every symbol in `S[s+1, end]`.
struct WindowScanner<'a> {
    table: &'a NextOccurrenceTable,
    encoded: Vec<SymbolId>,
    stamp: Vec<usize>,
}

impl<'a> WindowScanner<'a> {
    fn new(table: &'a NextOccurrenceTable, text: &[char]) -> Self {
        WindowScanner {
            table,
            encoded: table.alphabet.encode(text),
            stamp: vec![usize::MAX; table.alphabet.len()],
        }
    }

    fn collect(&mut self, s: usize, end: usize, out: &mut Vec<(SymbolId, StateId)>) {
        let sigma = self.table.alphabet.len();
        if end - s >= sigma {
            out.extend(
                self.table
                    .row(s)
                    .filter(|&(_, j)| j <= end)
                    .map(|(a, j)| (a, j as StateId)),
            );
        } else {
            for j in s + 1..=end {
                let a = self.encoded[j - 1];
                if self.stamp[a as usize] != s {
                    self.stamp[a as usize] = s;
                    out.push((a, j as StateId));
                }
            }
        }
    }
}

/// Subsequence automaton: state `s` has a transition for every symbol of
/// `S[s+1, n]` to its leftmost occurrence after `s`. No defaults.
pub fn build_sa(text: &[char]) -> Automaton {
    let table = NextOccurrenceTable::new(text);
    let n = text.len();
    let mut b = Builder::new(table.alphabet.clone(), Meta::single(Variant::Sa, n), n + 1);
    let mut row = Vec::new();
    for s in 0..=n {
        row.extend(table.row(s).map(|(a, j)| (a, j as StateId)));
        b.push_state(&mut row, None);
    }
    b.finish()
}

/// `n + 1` states in a line, each with one labeled and one default edge to
/// the next state.
pub fn build_chain(text: &[char]) -> Automaton {
    let alphabet = Alphabet::from_text(text);
    let encoded = alphabet.encode(text);
    let n = text.len();
    let mut b = Builder::new(alphabet, Meta::single(Variant::Chain, n), n + 1);
    let mut row = Vec::new();
    for (s, &sym) in encoded.iter().enumerate() {
        row.push((sym, (s + 1) as StateId));
        b.push_state(&mut row, Some((s + 1) as StateId));
    }
    b.push_state(&mut row, None);
    b.finish()
}

/// Options for [`build_k_level_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KLevelOptions {
    /// Alphabet size to use instead of `|Σ(S)|`; may only be larger.
    pub sigma: Option<usize>,
    /// Omit defaults on states whose regular transitions already cover the
    /// whole remaining suffix (such defaults never lie on a matching path).
    pub strip_unreachable_defaults: bool,
}

struct LevelledBuild<'a> {
    text: &'a [char],
    params: LevelParams,
    /// Window length from which full-suffix transitions are used.
    full_from: Option<usize>,
    strip: bool,
    meta: Meta,
}

fn build_levelled(cfg: LevelledBuild<'_>) -> Automaton {
    let LevelledBuild {
        text,
        params,
        full_from,
        strip,
        meta,
    } = cfg;
    let table = NextOccurrenceTable::new(text);
    let mut scanner = WindowScanner::new(&table, text);
    let n = text.len();
    let mut b = Builder::new(table.alphabet.clone(), meta, n + 1);
    let mut row = Vec::new();
    if n == 0 {
        b.push_state(&mut row, None);
        return b.finish();
    }
    row.push((scanner.encoded[0], 1));
    b.push_state(&mut row, Some(1));
    for s in 1..=n {
        let bar = params.bar(s);
        let full = match (bar, full_from) {
            (None, _) => true,
            (Some(t), Some(sigma)) => t - s >= sigma,
            (Some(_), None) => false,
        };
        let end = if full { n } else { bar.unwrap().min(n) };
        scanner.collect(s, end, &mut row);
        let default = match bar {
            Some(_) if strip && full => None,
            other => other.map(|t| t as StateId),
        };
        b.push_state(&mut row, default);
    }
    b.finish()
}

/// Level automaton with base 2 and no level ceiling.
pub fn build_level(text: &[char]) -> Automaton {
    build_levelled(LevelledBuild {
        text,
        params: LevelParams::uncapped(text.len()),
        full_from: None,
        strip: false,
        meta: Meta::single(Variant::Level, text.len()),
    })
}

/// Alphabet-aware level automaton with base `k`; `k = 2` gives the plain
/// alphabet-aware construction.
pub fn build_k_level(text: &[char], k: u64) -> Result<Automaton> {
    build_k_level_with(text, k, KLevelOptions::default())
}

pub fn build_k_level_with(text: &[char], k: u64, opts: KLevelOptions) -> Result<Automaton> {
    let actual = Alphabet::from_text(text).len();
    let sigma = match opts.sigma {
        Some(s) if s < actual => {
            return Err(Error::SigmaTooSmall {
                requested: s,
                actual,
            })
        }
        Some(s) => s,
        None => actual,
    };
    let params = LevelParams::alphabet_aware(k, sigma, text.len())?;
    let mut meta = Meta::single(Variant::KLevel, text.len());
    meta.k = Some(k);
    meta.sigma = Some(sigma);
    Ok(build_levelled(LevelledBuild {
        text,
        params,
        full_from: Some(sigma),
        strip: opts.strip_unreachable_defaults,
        meta,
    }))
}

/// Builds any single-string variant by name. `k` is required for
/// [`Variant::KLevel`] and ignored otherwise.
pub fn build_single(
    variant: Variant,
    text: &[char],
    k: Option<u64>,
    opts: KLevelOptions,
) -> Result<Automaton> {
    match variant {
        Variant::Sa => Ok(build_sa(text)),
        Variant::Chain => Ok(build_chain(text)),
        Variant::Level => Ok(build_level(text)),
        Variant::KLevel => build_k_level_with(text, k.unwrap_or(2), opts),
        other => Err(Error::Invalid(format!(
            "{other} is not a single-string variant"
        ))),
    }
}
