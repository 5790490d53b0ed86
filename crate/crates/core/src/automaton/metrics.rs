use serde::{Deserialize, Serialize};

use super::{Automaton, StateId};

/// Size and structural delay of an automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeMetrics {
    pub states: usize,
    pub regular_transitions: usize,
    pub default_transitions: usize,
    pub size_total: usize,
    /// Most default edges that can be followed back to back.
    pub longest_default_chain: usize,
    /// States reachable from the initial state over regular or default edges.
    pub reachable_states: usize,
}

impl Automaton {
    pub fn size_metrics(&self) -> SizeMetrics {
        let states = self.state_count();
        let regular = self.regular_transition_count();
        let defaults = self.default_transition_count();
        SizeMetrics {
            states,
            regular_transitions: regular,
            default_transitions: defaults,
            size_total: states + regular + defaults,
            longest_default_chain: self.longest_default_chain(),
            reachable_states: self.reachable_states(),
        }
    }

    /// Longest path in the default-edge graph, by memoised walks. A cycle
    /// (only possible in unvalidated input) saturates at the state count.
    pub fn longest_default_chain(&self) -> usize {
        const UNKNOWN: usize = usize::MAX;
        let n = self.state_count();
        let mut chain = vec![UNKNOWN; n];
        let mut on_path = vec![false; n];
        let mut path: Vec<usize> = Vec::new();
        for start in 0..n {
            if chain[start] != UNKNOWN {
                continue;
            }
            let mut s = start;
            let base = loop {
                if chain[s] != UNKNOWN {
                    break chain[s];
                }
                if on_path[s] {
                    break n;
                }
                on_path[s] = true;
                path.push(s);
                match self.defaults[s] {
                    Some(d) if (d as usize) < n => s = d as usize,
                    _ => break UNKNOWN,
                }
            };
            // `UNKNOWN` base means the walk ended at a state without a default.
            let mut len = if base == UNKNOWN { 0 } else { base };
            let mut first = base == UNKNOWN;
            while let Some(p) = path.pop() {
                on_path[p] = false;
                if first {
                    first = false;
                } else {
                    len = (len + 1).min(n);
                }
                chain[p] = len;
            }
        }
        chain.into_iter().max().unwrap_or(0)
    }

    pub fn reachable_states(&self) -> usize {
        let n = self.state_count();
        if n == 0 {
            return 0;
        }
        let mut seen = vec![false; n];
        let mut stack: Vec<StateId> = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(s) = stack.pop() {
            let nexts = self
                .transitions(s)
                .iter()
                .map(|&(_, t)| t)
                .chain(self.default_target(s));
            for t in nexts {
                if (t as usize) < n && !seen[t as usize] {
                    seen[t as usize] = true;
                    count += 1;
                    stack.push(t);
                }
            }
        }
        count
    }
}
