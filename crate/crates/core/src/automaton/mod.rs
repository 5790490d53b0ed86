//! Deterministic automata with one optional default transition per state.
//!
//! States are dense ids with `0` as the initial state. Regular transitions are
//! stored in a compressed row layout, sorted by symbol id within each state, so
//! a lookup is a binary search over that state's slice.

mod document;
mod dot;
mod metrics;
mod run;
mod validate;

pub use document::{AutomatonDocument, StateRecord, DOCUMENT_VERSION};
pub use metrics::SizeMetrics;
pub use run::RunOutcome;
pub use validate::{ValidationReport, Violation};

use crate::alphabet::{Alphabet, SymbolId};
use crate::multi::TupleIndexer;

pub type StateId = u32;

/// Construction that produced an automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Sa,
    Chain,
    Level,
    KLevel,
    NaiveCommon,
    CommonLevel,
    AnyLevel,
    /// Hand-assembled automata (tests, external documents).
    Custom,
}

impl Variant {
    pub const ALL: [Variant; 8] = [
        Variant::Sa,
        Variant::Chain,
        Variant::Level,
        Variant::KLevel,
        Variant::NaiveCommon,
        Variant::CommonLevel,
        Variant::AnyLevel,
        Variant::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Sa => "sa",
            Variant::Chain => "chain",
            Variant::Level => "level",
            Variant::KLevel => "klevel",
            Variant::NaiveCommon => "naive-common",
            Variant::CommonLevel => "common-level",
            Variant::AnyLevel => "any-level",
            Variant::Custom => "custom",
        }
    }

    pub fn from_name(name: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == name)
    }

    pub fn is_multi(self) -> bool {
        matches!(
            self,
            Variant::NaiveCommon | Variant::CommonLevel | Variant::AnyLevel
        )
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Construction descriptor carried alongside the automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meta {
    pub variant: Variant,
    /// Text length for single-string constructions.
    pub n: Option<usize>,
    /// Source lengths for multi-string constructions.
    pub lengths: Option<Vec<usize>>,
    /// Level base, when the construction has one.
    pub k: Option<u64>,
    /// Alphabet size used for level caps and window thresholds.
    pub sigma: Option<usize>,
}

impl Meta {
    pub fn single(variant: Variant, n: usize) -> Self {
        Meta {
            variant,
            n: Some(n),
            lengths: None,
            k: None,
            sigma: None,
        }
    }

    pub fn multi(variant: Variant, lengths: Vec<usize>) -> Self {
        Meta {
            variant,
            n: None,
            lengths: Some(lengths),
            k: None,
            sigma: None,
        }
    }

    pub fn custom() -> Self {
        Meta {
            variant: Variant::Custom,
            n: None,
            lengths: None,
            k: None,
            sigma: None,
        }
    }

    /// Product-space indexer for multi-string variants.
    pub fn tuple_indexer(&self) -> Option<TupleIndexer> {
        let lengths = self.lengths.as_ref()?;
        match self.variant {
            Variant::NaiveCommon | Variant::CommonLevel => Some(TupleIndexer::common(lengths)),
            Variant::AnyLevel => Some(TupleIndexer::with_sentinels(lengths)),
            _ => None,
        }
    }
}

/// Per-state input for [`Automaton::from_states`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StateSpec {
    pub transitions: Vec<(SymbolId, StateId)>,
    pub default: Option<StateId>,
    pub accepting: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Alphabet,
    accepting: Vec<bool>,
    offsets: Vec<usize>,
    edges: Vec<(SymbolId, StateId)>,
    defaults: Vec<Option<StateId>>,
    meta: Meta,
}

impl Automaton {
    /// Assembles an automaton verbatim. Nothing is sorted or checked; call
    /// [`Automaton::validate`] before running it.
    pub fn from_states(alphabet: Alphabet, meta: Meta, states: Vec<StateSpec>) -> Self {
        let mut b = Builder::new(alphabet, meta, states.len());
        for st in states {
            b.offsets_push(st.transitions, st.default, st.accepting);
        }
        b.finish()
    }

    pub fn state_count(&self) -> usize {
        self.defaults.len()
    }

    pub fn initial(&self) -> StateId {
        0
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn meta(&self) -> &Meta {
        &self.meta
    }

    pub fn variant(&self) -> Variant {
        self.meta.variant
    }

    pub fn transitions(&self, state: StateId) -> &[(SymbolId, StateId)] {
        let s = state as usize;
        &self.edges[self.offsets[s]..self.offsets[s + 1]]
    }

    pub fn default_target(&self, state: StateId) -> Option<StateId> {
        self.defaults[state as usize]
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state as usize]
    }

    pub fn transition(&self, state: StateId, symbol: SymbolId) -> Option<StateId> {
        let row = self.transitions(state);
        row.binary_search_by_key(&symbol, |&(a, _)| a)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn regular_transition_count(&self) -> usize {
        self.edges.len()
    }

    pub fn default_transition_count(&self) -> usize {
        self.defaults.iter().filter(|d| d.is_some()).count()
    }

    /// Coordinates of a state: `[id]` for single-string automata, the decoded
    /// tuple for multi-string ones (sentinel coordinates are `n_i + 1`).
    pub fn state_coords(&self, state: StateId) -> Vec<usize> {
        match self.meta.tuple_indexer() {
            Some(ix) => ix.decode(state as usize).coords().to_vec(),
            None => vec![state as usize],
        }
    }

    /// Copy of the per-state view, useful for editing an automaton.
    pub fn to_states(&self) -> Vec<StateSpec> {
        (0..self.state_count() as StateId)
            .map(|s| StateSpec {
                transitions: self.transitions(s).to_vec(),
                default: self.default_target(s),
                accepting: self.is_accepting(s),
            })
            .collect()
    }

    /// Same automaton with one regular transition removed.
    pub fn without_transition(&self, state: StateId, symbol: SymbolId) -> Automaton {
        let mut states = self.to_states();
        states[state as usize]
            .transitions
            .retain(|&(a, _)| a != symbol);
        Automaton::from_states(self.alphabet.clone(), self.meta.clone(), states)
    }
}

/// Incremental constructor used by the builders: states are appended in id
/// order, each with its transitions sorted by symbol.
pub(crate) struct Builder {
    alphabet: Alphabet,
    meta: Meta,
    accepting: Vec<bool>,
    offsets: Vec<usize>,
    edges: Vec<(SymbolId, StateId)>,
    defaults: Vec<Option<StateId>>,
}

impl Builder {
    pub(crate) fn new(alphabet: Alphabet, meta: Meta, states_hint: usize) -> Self {
        let mut offsets = Vec::with_capacity(states_hint + 1);
        offsets.push(0);
        Builder {
            alphabet,
            meta,
            accepting: Vec::with_capacity(states_hint),
            offsets,
            edges: Vec::new(),
            defaults: Vec::with_capacity(states_hint),
        }
    }

    /// Appends an accepting state; `transitions` is sorted by symbol.
    pub(crate) fn push_state(
        &mut self,
        transitions: &mut Vec<(SymbolId, StateId)>,
        default: Option<StateId>,
    ) {
        transitions.sort_unstable_by_key(|&(a, _)| a);
        self.edges.append(transitions);
        self.offsets.push(self.edges.len());
        self.defaults.push(default);
        self.accepting.push(true);
    }

    fn offsets_push(
        &mut self,
        transitions: Vec<(SymbolId, StateId)>,
        default: Option<StateId>,
        accepting: bool,
    ) {
        self.edges.extend(transitions);
        self.offsets.push(self.edges.len());
        self.defaults.push(default);
        self.accepting.push(accepting);
    }

    pub(crate) fn finish(self) -> Automaton {
        Automaton {
            alphabet: self.alphabet,
            accepting: self.accepting,
            offsets: self.offsets,
            edges: self.edges,
            defaults: self.defaults,
            meta: self.meta,
        }
    }
}
