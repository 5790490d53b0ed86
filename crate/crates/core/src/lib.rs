//! Subsequence automata with default transitions.
//!
//! A default transition is an unlabeled edge taken only when no regular
//! transition matches the current character, and it does not consume that
//! character. Using them, the automata here trade size for delay (the number
//! of edges walked to consume one character):
//!
//! | construction | size | longest default chain |
//! |---|---|---|
//! | [`build_sa`] | `O(nσ)` | 0 |
//! | [`build_chain`] | `O(n)` | `n` |
//! | [`build_level`] | `O(n log n)` | `⌊log₂ n⌋ + 1` |
//! | [`build_k_level`] | `O(nk log_k σ)` | `⌈log_k σ⌉ + 1` |
//!
//! Multi-string variants ([`build_naive_common`], [`build_common_level`],
//! [`build_any_level`]) work on the product of the input strings' states.
//!
//! ```
//! use subseq_core::{build_k_level, Oracle};
//!
//! let text: Vec<char> = "abacbabcabad".chars().collect();
//! let a = build_k_level(&text, 2).unwrap();
//! let run = a.run(&"bcd".chars().collect::<Vec<_>>());
//! assert!(run.accepted);
//! assert_eq!(run.consumed_targets, vec![2, 4, 12]);
//! assert!(Oracle::Subsequence(text).accepts(&['b', 'c', 'd']));
//! ```

pub mod alphabet;
pub mod automaton;
pub mod error;
pub mod level;
pub mod multi;
pub mod oracle;
pub mod single;
pub mod tradeoff;
pub mod verify;

pub use alphabet::{Alphabet, SymbolId};
pub use automaton::{
    Automaton, AutomatonDocument, Meta, RunOutcome, SizeMetrics, StateId, StateSpec,
    ValidationReport, Variant, Violation, DOCUMENT_VERSION,
};
pub use error::{Error, Result};
pub use level::LevelParams;
pub use multi::{
    bar_multi, build_any_level, build_common_level, build_multi, build_naive_common, level_multi,
    Diagonal, MultiOptions, TupleIndexer, TupleState,
};
pub use oracle::{is_any_subsequence, is_common_subsequence, is_subsequence, Membership, Oracle};
pub use single::{
    build_chain, build_k_level, build_k_level_with, build_level, build_sa, build_single,
    KLevelOptions, NextOccurrenceTable,
};
pub use tradeoff::{random_text, tradeoff_table, StatsDocument, TradeoffOptions, TradeoffRow};
pub use verify::{
    equivalence_check, trace_equivalence, EnumerationConfig, EquivalenceReport, Execution,
    TraceReport,
};
