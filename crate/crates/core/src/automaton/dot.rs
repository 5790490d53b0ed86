use std::fmt::Write;

use super::Automaton;

fn escape(c: char) -> String {
    match c {
        '"' => "\\\"".to_string(),
        '\\' => "\\\\".to_string(),
        c if c.is_control() => format!("\\\\u{{{:x}}}", c as u32),
        c => c.to_string(),
    }
}

impl Automaton {
    /// Graphviz rendering. Regular edges carry their character, default edges
    /// are dashed and unlabeled; multi-string states are labeled by tuple.
    pub fn export_dot(&self) -> String {
        let ix = self.meta.tuple_indexer();
        let mut out = String::new();
        let _ = writeln!(out, "digraph automaton {{");
        let _ = writeln!(out, "  rankdir=LR;");
        let _ = writeln!(out, "  node [shape=circle];");
        for s in 0..self.state_count() as u32 {
            let label = match &ix {
                Some(ix) => {
                    let t = ix.decode(s as usize);
                    let parts: Vec<String> = t
                        .coords()
                        .iter()
                        .zip(ix.lengths())
                        .map(|(&c, &n)| {
                            if ix.has_sentinels() && c == n + 1 {
                                "-".to_string()
                            } else {
                                c.to_string()
                            }
                        })
                        .collect();
                    format!("({})", parts.join(","))
                }
                None => s.to_string(),
            };
            let shape = if self.is_accepting(s) {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(out, "  {s} [label=\"{label}\", shape={shape}];");
        }
        for s in 0..self.state_count() as u32 {
            for &(sym, t) in self.transitions(s) {
                let label = self.alphabet.symbol(sym).map_or_else(|| "?".into(), escape);
                let _ = writeln!(out, "  {s} -> {t} [label=\"{label}\"];");
            }
            if let Some(d) = self.default_target(s) {
                let _ = writeln!(out, "  {s} -> {d} [style=dashed];");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::multi::build_naive_common;
    use crate::single::{build_chain, build_sa};

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn chain_of_ab() {
        let dot = build_chain(&chars("ab")).export_dot();
        assert_eq!(dot.matches("shape=doublecircle").count(), 3);
        assert_eq!(dot.matches("[label=\"a\"]").count(), 1);
        assert_eq!(dot.matches("[label=\"b\"]").count(), 1);
        assert_eq!(dot.matches("style=dashed").count(), 2);
    }

    #[test]
    fn stable_output() {
        let a = build_sa(&chars("abadca"));
        assert_eq!(a.export_dot(), a.export_dot());
    }

    #[test]
    fn sa_abadca_edge() {
        let dot = build_sa(&chars("abadca")).export_dot();
        assert!(dot.contains("  0 -> 2 [label=\"b\"];"));
    }

    #[test]
    fn tuple_labels() {
        let a = build_naive_common(&chars("ab"), &chars("ba")).unwrap();
        let dot = a.export_dot();
        assert!(dot.contains("label=\"(0,0)\""));
        assert!(dot.contains("label=\"(2,1)\""));
    }

    #[test]
    fn escapes_quotes() {
        let dot = build_sa(&chars("\"\\")).export_dot();
        assert!(dot.contains("[label=\"\\\"\"]"));
        assert!(dot.contains("[label=\"\\\\\"]"));
    }
}
