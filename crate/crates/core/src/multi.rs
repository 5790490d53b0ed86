//! Automata over several strings, on the product state space
//! `{1..n_1} × … × {1..n_N} ∪ {(0,…,0)}`.
//!
//! Levels live on diagonals: a state's position is the minimum of its
//! coordinates, and moving along a diagonal adds the same offset to every
//! coordinate. The "any" variant extends each coordinate with a sentinel
//! `n_i + 1` meaning "string `i` can no longer match"; sentinel coordinates
//! never move.

use crate::alphabet::{Alphabet, SymbolId};
use crate::automaton::{Automaton, Builder, Meta, StateId, Variant};
use crate::error::{Error, Result};
use crate::level::{ceil_log, LevelParams};
use crate::single::NextOccurrenceTable;

pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// Point of the product space; either all zeros (the origin) or all
/// coordinates positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleState(Vec<usize>);

impl TupleState {
    pub fn origin(dims: usize) -> Self {
        TupleState(vec![0; dims])
    }

    /// `None` for mixed zero/nonzero tuples, which are not states.
    pub fn new(coords: Vec<usize>) -> Option<Self> {
        let zeros = coords.iter().filter(|&&c| c == 0).count();
        (zeros == 0 || zeros == coords.len()).then_some(TupleState(coords))
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn dims(&self) -> usize {
        self.0.len()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Position on the diagonal: the minimum coordinate.
    pub fn position(&self) -> usize {
        self.0.iter().copied().min().unwrap_or(0)
    }
}

impl std::fmt::Display for TupleState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Mixed-radix encoding of tuple states; the origin is id 0 and the first
/// coordinate is the most significant digit, so ids increase with every
/// coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleIndexer {
    lengths: Vec<usize>,
    radices: Vec<usize>,
    strides: Vec<u128>,
    total: u128,
    sentinels: bool,
}

impl TupleIndexer {
    /// Coordinates `1..=n_i`.
    pub fn common(lengths: &[usize]) -> Self {
        Self::build(lengths, false)
    }

    /// Coordinates `1..=n_i + 1`, the last value being the dead sentinel.
    pub fn with_sentinels(lengths: &[usize]) -> Self {
        Self::build(lengths, true)
    }

    fn build(lengths: &[usize], sentinels: bool) -> Self {
        let radices: Vec<usize> = lengths
            .iter()
            .map(|&n| if sentinels { n + 1 } else { n })
            .collect();
        let mut strides = vec![0u128; radices.len()];
        let mut acc: u128 = 1;
        for i in (0..radices.len()).rev() {
            strides[i] = acc;
            acc = acc.saturating_mul(radices[i] as u128);
        }
        TupleIndexer {
            lengths: lengths.to_vec(),
            radices,
            strides,
            total: acc.saturating_add(1),
            sentinels,
        }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn dims(&self) -> usize {
        self.lengths.len()
    }

    pub fn has_sentinels(&self) -> bool {
        self.sentinels
    }

    /// `1 + ∏ radix_i`, saturating.
    pub fn total_states(&self) -> u128 {
        self.total
    }

    pub fn is_dead(&self, i: usize, coord: usize) -> bool {
        self.sentinels && coord == self.lengths[i] + 1
    }

    pub fn dead(&self, i: usize) -> usize {
        self.lengths[i] + 1
    }

    pub fn contains(&self, t: &TupleState) -> bool {
        t.dims() == self.dims()
            && (t.is_origin()
                || t.0
                    .iter()
                    .zip(&self.radices)
                    .all(|(&c, &r)| c >= 1 && c <= r))
    }

    pub fn encode(&self, t: &TupleState) -> usize {
        debug_assert!(self.contains(t), "{t} outside product space");
        if t.is_origin() {
            return 0;
        }
        let id: u128 =
            t.0.iter()
                .zip(&self.strides)
                .map(|(&c, &s)| (c as u128 - 1) * s)
                .sum();
        (id + 1) as usize
    }

    pub fn decode(&self, id: usize) -> TupleState {
        if id == 0 {
            return TupleState::origin(self.dims());
        }
        let mut rest = id as u128 - 1;
        let coords = self
            .strides
            .iter()
            .map(|&s| {
                let c = rest / s;
                rest %= s;
                c as usize + 1
            })
            .collect();
        TupleState(coords)
    }

    /// Every edge of a multi-string automaton must be componentwise
    /// non-decreasing and change at least one coordinate.
    pub fn forward(&self, from: StateId, to: StateId) -> bool {
        let a = self.decode(from as usize);
        let b = self.decode(to as usize);
        a.0.iter().zip(&b.0).all(|(x, y)| x <= y) && a != b
    }

    fn check_budget(&self, budget: usize) -> Result<usize> {
        if self.total > budget as u128 {
            Err(Error::StateBudget {
                required: self.total,
                budget,
            })
        } else {
            Ok(self.total as usize)
        }
    }
}

/// States reachable from `start` by adding the same offset to every live
/// coordinate, staying within bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonal {
    /// The state at position 1.
    pub start: TupleState,
    pub len: usize,
}

impl Diagonal {
    /// Diagonal through a non-origin state of the common product space.
    pub fn of(t: &TupleState, lengths: &[usize]) -> Diagonal {
        assert!(!t.is_origin(), "the origin lies on no diagonal");
        let back = t.position() - 1;
        let start: Vec<usize> = t.0.iter().map(|&c| c - back).collect();
        let len = start
            .iter()
            .zip(lengths)
            .map(|(&c, &n)| n + 1 - c)
            .min()
            .unwrap_or(0);
        Diagonal {
            start: TupleState(start),
            len,
        }
    }

    pub fn states(&self) -> impl Iterator<Item = TupleState> + '_ {
        (0..self.len).map(move |d| TupleState(self.start.0.iter().map(|&c| c + d).collect()))
    }
}

/// All diagonals of the common product space, in encoding order of their
/// first state.
pub fn diagonals(lengths: &[usize]) -> Vec<Diagonal> {
    let ix = TupleIndexer::common(lengths);
    let total = ix.total_states() as usize;
    (1..total)
        .map(|id| ix.decode(id))
        .filter(|t| t.position() == 1)
        .map(|t| Diagonal::of(&t, lengths))
        .collect()
}

/// Base-2 level of a non-origin state's diagonal position, capped.
pub fn level_multi(t: &TupleState, cap: u32) -> u32 {
    assert!(!t.is_origin(), "the origin has no level");
    LevelParams::new(2, Some(cap), usize::MAX).level(t.position())
}

/// Smallest state on the same diagonal with a strictly higher level.
pub fn bar_multi(t: &TupleState, cap: u32, lengths: &[usize]) -> Option<TupleState> {
    let live = vec![true; t.dims()];
    bar_step(t.coords(), &live, lengths, cap).map(|(coords, _)| TupleState(coords))
}

/// Shared by both product constructions: moves the live coordinates of
/// `coords` to the next higher-level position, returning the new coordinates
/// and the offset.
fn bar_step(
    coords: &[usize],
    live: &[bool],
    lengths: &[usize],
    cap: u32,
) -> Option<(Vec<usize>, usize)> {
    let mut position = usize::MAX;
    let mut room = usize::MAX;
    for ((&c, &n), &l) in coords.iter().zip(lengths).zip(live) {
        if l {
            position = position.min(c);
            room = room.min(n - c);
        }
    }
    if position == usize::MAX {
        return None;
    }
    let params = LevelParams::new(2, Some(cap), position + room);
    let target = params.bar(position)?;
    let gap = target - position;
    let moved = coords
        .iter()
        .zip(live)
        .map(|(&c, &l)| if l { c + gap } else { c })
        .collect();
    Some((moved, gap))
}

/// Options shared by the multi-string builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiOptions {
    /// Alphabet size for the level cap and window threshold; may only exceed
    /// the size of the union alphabet.
    pub sigma: Option<usize>,
    pub state_budget: usize,
}

impl Default for MultiOptions {
    fn default() -> Self {
        MultiOptions {
            sigma: None,
            state_budget: DEFAULT_STATE_BUDGET,
        }
    }
}

struct Inputs {
    alphabet: Alphabet,
    tables: Vec<NextOccurrenceTable>,
    encoded: Vec<Vec<SymbolId>>,
    lengths: Vec<usize>,
}

impl Inputs {
    fn new(texts: &[&[char]]) -> Self {
        let alphabet = Alphabet::from_texts(texts.iter().copied());
        let tables = texts
            .iter()
            .map(|t| NextOccurrenceTable::with_alphabet(t, alphabet.clone()))
            .collect();
        let encoded = texts.iter().map(|t| alphabet.encode(t)).collect();
        let lengths = texts.iter().map(|t| t.len()).collect();
        Inputs {
            alphabet,
            tables,
            encoded,
            lengths,
        }
    }

    fn sigma(&self, requested: Option<usize>) -> Result<usize> {
        let actual = self.alphabet.len();
        match requested {
            Some(s) if s < actual => Err(Error::SigmaTooSmall {
                requested: s,
                actual,
            }),
            Some(s) => Ok(s),
            None => Ok(actual),
        }
    }
}

pub fn build_naive_common(s1: &[char], s2: &[char]) -> Result<Automaton> {
    build_naive_common_with(s1, s2, MultiOptions::default())
}

/// Naive common-subsequence automaton for two strings: state `(s1, s2)` only
/// looks at `S1[s1+1]` and `S2[s2+1]`, and defaults to `(s1+1, s2+1)`.
pub fn build_naive_common_with(s1: &[char], s2: &[char], opts: MultiOptions) -> Result<Automaton> {
    let inputs = Inputs::new(&[s1, s2]);
    let ix = TupleIndexer::common(&inputs.lengths);
    let total = ix.check_budget(opts.state_budget)?;
    let (n1, n2) = (s1.len(), s2.len());
    let (e1, e2) = (&inputs.encoded[0], &inputs.encoded[1]);
    let (t1, t2) = (&inputs.tables[0], &inputs.tables[1]);
    let meta = Meta::multi(Variant::NaiveCommon, inputs.lengths.clone());
    let mut b = Builder::new(inputs.alphabet.clone(), meta, total);
    let mut row: Vec<(SymbolId, StateId)> = Vec::new();
    for id in 0..total {
        let t = ix.decode(id);
        let (a, c) = (t.0[0], t.0[1]);
        let mut first = None;
        if a < n1 {
            let alpha = e1[a];
            if let Some(j) = t2.next_id(c, alpha) {
                let target = ix.encode(&TupleState(vec![a + 1, j])) as StateId;
                row.push((alpha, target));
                first = Some((alpha, target));
            }
        }
        if c < n2 {
            let beta = e2[c];
            if let Some(i) = t1.next_id(a, beta) {
                let target = ix.encode(&TupleState(vec![i, c + 1])) as StateId;
                match first {
                    Some((alpha, t)) if alpha == beta => {
                        assert_eq!(t, target, "naive bullets disagree at {}", ix.decode(id));
                    }
                    _ => row.push((beta, target)),
                }
            }
        }
        let default =
            (a < n1 && c < n2).then(|| ix.encode(&TupleState(vec![a + 1, c + 1])) as StateId);
        b.push_state(&mut row, default);
    }
    Ok(b.finish())
}

pub fn build_common_level(texts: &[&[char]]) -> Result<Automaton> {
    build_common_level_with(texts, MultiOptions::default())
}

pub fn build_common_level_with(texts: &[&[char]], opts: MultiOptions) -> Result<Automaton> {
    build_level_product(texts, opts, false)
}

pub fn build_any_level(texts: &[&[char]]) -> Result<Automaton> {
    build_any_level_with(texts, MultiOptions::default())
}

pub fn build_any_level_with(texts: &[&[char]], opts: MultiOptions) -> Result<Automaton> {
    build_level_product(texts, opts, true)
}

/// Builds a multi-string variant by name.
pub fn build_multi(variant: Variant, texts: &[&[char]], opts: MultiOptions) -> Result<Automaton> {
    match variant {
        Variant::NaiveCommon => {
            if texts.len() != 2 {
                return Err(Error::Invalid(format!(
                    "naive-common takes exactly two strings, got {}",
                    texts.len()
                )));
            }
            build_naive_common_with(texts[0], texts[1], opts)
        }
        Variant::CommonLevel => build_common_level_with(texts, opts),
        Variant::AnyLevel => build_any_level_with(texts, opts),
        other => Err(Error::Invalid(format!(
            "{other} is not a multi-string variant"
        ))),
    }
}

/// Level cap used by the multi-string level constructions.
pub fn multi_cap(sigma: usize) -> u32 {
    ceil_log(2, sigma).max(1)
}

fn build_level_product(texts: &[&[char]], opts: MultiOptions, any: bool) -> Result<Automaton> {
    if texts.len() < 2 {
        return Err(Error::TooFewTexts {
            required: 2,
            got: texts.len(),
        });
    }
    let inputs = Inputs::new(texts);
    let sigma = inputs.sigma(opts.sigma)?;
    let cap = multi_cap(sigma);
    let ix = if any {
        TupleIndexer::with_sentinels(&inputs.lengths)
    } else {
        TupleIndexer::common(&inputs.lengths)
    };
    let total = ix.check_budget(opts.state_budget)?;
    let dims = texts.len();
    let variant = if any {
        Variant::AnyLevel
    } else {
        Variant::CommonLevel
    };
    let mut meta = Meta::multi(variant, inputs.lengths.clone());
    meta.sigma = Some(sigma);
    let mut b = Builder::new(inputs.alphabet.clone(), meta, total);

    let mut row: Vec<(SymbolId, StateId)> = Vec::new();
    let mut stamp = vec![usize::MAX; inputs.alphabet.len()];
    let mut candidates: Vec<SymbolId> = Vec::new();
    let mut target = vec![0usize; dims];

    // Target of `alpha` from `coords`: per live string the next occurrence,
    // or the sentinel. Returns false when no transition exists.
    let step = |coords: &[usize], live: &[bool], alpha: SymbolId, target: &mut [usize]| -> bool {
        let mut any_live = false;
        for i in 0..dims {
            if !live[i] {
                target[i] = coords[i];
                continue;
            }
            match inputs.tables[i].next_id(coords[i], alpha) {
                Some(j) => {
                    target[i] = j;
                    any_live = true;
                }
                None if any => target[i] = ix.dead(i),
                None => return false,
            }
        }
        any_live
    };

    // origin
    {
        let origin = vec![0usize; dims];
        let live = vec![true; dims];
        for (i, enc) in inputs.encoded.iter().enumerate() {
            let Some(&alpha) = enc.first() else { continue };
            if stamp[alpha as usize] == 0 {
                continue;
            }
            stamp[alpha as usize] = 0;
            if step(&origin, &live, alpha, &mut target) {
                debug_assert_eq!(target[i], 1);
                row.push((alpha, ix.encode(&TupleState(target.clone())) as StateId));
            }
        }
        let ones: Vec<usize> = (0..dims)
            .map(|i| {
                if inputs.lengths[i] >= 1 {
                    1
                } else {
                    ix.dead(i)
                }
            })
            .collect();
        let has_live = inputs.lengths.iter().any(|&n| n >= 1);
        let default = (has_live && (any || inputs.lengths.iter().all(|&n| n >= 1)))
            .then(|| ix.encode(&TupleState(ones)) as StateId);
        b.push_state(&mut row, default);
    }

    let mut live = vec![true; dims];
    for id in 1..total {
        let t = ix.decode(id);
        let coords = t.coords();
        for i in 0..dims {
            live[i] = !ix.is_dead(i, coords[i]);
        }
        if !live.iter().any(|&l| l) {
            b.push_state(&mut row, None);
            continue;
        }
        let bar = bar_step(coords, &live, &inputs.lengths, cap);
        let full = bar.as_ref().is_none_or(|&(_, gap)| gap >= sigma);
        candidates.clear();
        for i in (0..dims).filter(|&i| live[i]) {
            let s = coords[i];
            let end = match &bar {
                Some((_, gap)) if !full => s + gap,
                _ => inputs.lengths[i],
            };
            if full {
                for (alpha, _) in inputs.tables[i].row(s) {
                    if stamp[alpha as usize] != id {
                        stamp[alpha as usize] = id;
                        candidates.push(alpha);
                    }
                }
            } else {
                for &alpha in &inputs.encoded[i][s..end] {
                    if stamp[alpha as usize] != id {
                        stamp[alpha as usize] = id;
                        candidates.push(alpha);
                    }
                }
            }
        }
        for &alpha in &candidates {
            if step(coords, &live, alpha, &mut target) {
                row.push((alpha, ix.encode(&TupleState(target.clone())) as StateId));
            }
        }
        let default = bar.map(|(moved, _)| ix.encode(&TupleState(moved)) as StateId);
        b.push_state(&mut row, default);
    }
    Ok(b.finish())
}
