use std::fmt;

use super::{Automaton, StateId};
use crate::alphabet::SymbolId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    DuplicateLabel { state: StateId, symbol: SymbolId },
    UnsortedLabels { state: StateId },
    UnknownSymbol { state: StateId, symbol: SymbolId },
    TargetOutOfRange { state: StateId, target: StateId },
    DefaultOutOfRange { state: StateId, target: StateId },
    NonForwardTransition { from: StateId, to: StateId },
    NonForwardDefault { from: StateId, to: StateId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Empty => write!(f, "automaton has no states"),
            Violation::DuplicateLabel { state, symbol } => {
                write!(f, "duplicate label at state {state} (symbol {symbol})")
            }
            Violation::UnsortedLabels { state } => write!(f, "unsorted labels at state {state}"),
            Violation::UnknownSymbol { state, symbol } => {
                write!(f, "unknown symbol {symbol} at state {state}")
            }
            Violation::TargetOutOfRange { state, target } => {
                write!(
                    f,
                    "transition target {target} out of range at state {state}"
                )
            }
            Violation::DefaultOutOfRange { state, target } => {
                write!(f, "default target {target} out of range at state {state}")
            }
            Violation::NonForwardTransition { from, to } => {
                write!(f, "non-forward transition {from} -> {to}")
            }
            Violation::NonForwardDefault { from, to } => {
                write!(f, "non-forward default {from} -> {to}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Automaton {
    /// Checks determinism, target ranges, and that every edge `u -> v`
    /// satisfies `forward(u, v)`.
    pub fn validate<F>(&self, forward: F) -> ValidationReport
    where
        F: Fn(StateId, StateId) -> bool,
    {
        let mut violations = Vec::new();
        let n = self.state_count();
        if n == 0 {
            violations.push(Violation::Empty);
        }
        let sigma = self.alphabet.len() as SymbolId;
        for s in 0..n as StateId {
            let row = self.transitions(s);
            for (i, &(sym, target)) in row.iter().enumerate() {
                if sym >= sigma {
                    violations.push(Violation::UnknownSymbol {
                        state: s,
                        symbol: sym,
                    });
                }
                if i > 0 {
                    let prev = row[i - 1].0;
                    if prev == sym {
                        violations.push(Violation::DuplicateLabel {
                            state: s,
                            symbol: sym,
                        });
                    } else if prev > sym {
                        violations.push(Violation::UnsortedLabels { state: s });
                    }
                }
                if target as usize >= n {
                    violations.push(Violation::TargetOutOfRange { state: s, target });
                } else if !forward(s, target) {
                    violations.push(Violation::NonForwardTransition {
                        from: s,
                        to: target,
                    });
                }
            }
            if let Some(target) = self.default_target(s) {
                if target as usize >= n {
                    violations.push(Violation::DefaultOutOfRange { state: s, target });
                } else if !forward(s, target) {
                    violations.push(Violation::NonForwardDefault {
                        from: s,
                        to: target,
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    /// [`Automaton::validate`] under increasing state ids, which is a forward
    /// order for every construction in this crate.
    pub fn validate_forward(&self) -> ValidationReport {
        self.validate(|u, v| u < v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::automaton::{Meta, StateSpec};

    fn spec(transitions: Vec<(SymbolId, StateId)>, default: Option<StateId>) -> StateSpec {
        StateSpec {
            transitions,
            default,
            accepting: true,
        }
    }

    fn ab() -> Alphabet {
        Alphabet::from_sorted(vec!['a', 'b']).unwrap()
    }

    #[test]
    fn duplicate_label_reported() {
        let a = Automaton::from_states(
            ab(),
            Meta::custom(),
            vec![
                spec(vec![(0, 1), (0, 2)], None),
                spec(vec![], None),
                spec(vec![], None),
            ],
        );
        let report = a.validate_forward();
        assert_eq!(
            report.violations,
            vec![Violation::DuplicateLabel {
                state: 0,
                symbol: 0
            }]
        );
        assert!(report.to_string().contains("duplicate label at state 0"));
    }

    #[test]
    fn backward_default_reported() {
        let mut states: Vec<StateSpec> = (0..4).map(|_| spec(vec![], None)).collect();
        states[3].default = Some(2);
        let a = Automaton::from_states(ab(), Meta::custom(), states);
        let report = a.validate_forward();
        assert_eq!(
            report.violations,
            vec![Violation::NonForwardDefault { from: 3, to: 2 }]
        );
        assert!(report.to_string().contains("non-forward default"));
    }

    #[test]
    fn out_of_range_targets() {
        let a = Automaton::from_states(
            ab(),
            Meta::custom(),
            vec![spec(vec![(1, 5)], Some(9)), spec(vec![(2, 0)], None)],
        );
        let v = a.validate_forward().violations;
        assert!(v.contains(&Violation::TargetOutOfRange {
            state: 0,
            target: 5
        }));
        assert!(v.contains(&Violation::DefaultOutOfRange {
            state: 0,
            target: 9
        }));
        assert!(v.contains(&Violation::UnknownSymbol {
            state: 1,
            symbol: 2
        }));
        assert!(v.contains(&Violation::NonForwardTransition { from: 1, to: 0 }));
    }

    #[test]
    fn custom_order_is_used() {
        let a = Automaton::from_states(
            ab(),
            Meta::custom(),
            vec![spec(vec![], None), spec(vec![(0, 0)], None)],
        );
        assert!(!a.validate_forward().is_ok());
        assert!(a.validate(|u, v| u > v).is_ok());
    }
}
