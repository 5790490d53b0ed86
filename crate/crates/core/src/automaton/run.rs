use super::{Automaton, StateId};

/// Result of simulating a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunOutcome {
    pub accepted: bool,
    /// Target of the regular transition that consumed each character.
    pub consumed_targets: Vec<StateId>,
    /// Default transitions followed before each consumed character.
    pub defaults_per_char: Vec<u32>,
    /// Index of the first pattern character that could not be consumed.
    pub reject_position: Option<usize>,
}

impl RunOutcome {
    pub fn max_defaults(&self) -> u32 {
        self.defaults_per_char.iter().copied().max().unwrap_or(0)
    }
}

impl Automaton {
    /// Deterministic simulation: at each state take the regular transition on
    /// the current character if there is one, otherwise follow the default
    /// without consuming, otherwise reject.
    pub fn run(&self, pattern: &[char]) -> RunOutcome {
        let mut out = RunOutcome {
            consumed_targets: Vec::with_capacity(pattern.len()),
            defaults_per_char: Vec::with_capacity(pattern.len()),
            ..RunOutcome::default()
        };
        let mut state = self.initial();
        // A validated automaton never revisits a state on one character; the
        // bound only guards unvalidated input against looping forever.
        let guard = self.state_count() as u32;
        'chars: for (pos, &c) in pattern.iter().enumerate() {
            let Some(sym) = self.alphabet.id(c) else {
                out.reject_position = Some(pos);
                break;
            };
            let mut followed = 0u32;
            loop {
                if let Some(next) = self.transition(state, sym) {
                    state = next;
                    out.consumed_targets.push(next);
                    out.defaults_per_char.push(followed);
                    continue 'chars;
                }
                match self.default_target(state) {
                    Some(d) if followed < guard => {
                        state = d;
                        followed += 1;
                    }
                    _ => {
                        out.reject_position = Some(pos);
                        break 'chars;
                    }
                }
            }
        }
        out.accepted = out.reject_position.is_none() && self.is_accepting(state);
        out
    }

    pub fn accepts(&self, pattern: &[char]) -> bool {
        self.run(pattern).accepted
    }
}
