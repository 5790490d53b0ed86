use serde::{Deserialize, Serialize};

use super::{Automaton, Meta, StateSpec, Variant};
use crate::alphabet::{Alphabet, SymbolId};
use crate::error::{Error, Result};

pub const DOCUMENT_VERSION: u64 = 1;

/// On-disk layout of an automaton (JSON).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub version: u64,
    pub variant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<usize>>,
    #[serde(default)]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<usize>,
    pub alphabet: Vec<String>,
    pub states: Vec<StateRecord>,
    /// Omitted when every state is accepting.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accepting: Option<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateRecord {
    pub default: Option<u32>,
    pub trans: Vec<(SymbolId, u32)>,
}

impl Automaton {
    pub fn to_document(&self) -> AutomatonDocument {
        let states = (0..self.state_count() as u32)
            .map(|s| StateRecord {
                default: self.default_target(s),
                trans: self.transitions(s).to_vec(),
            })
            .collect();
        let accepting = if self.accepting.iter().all(|&a| a) {
            None
        } else {
            Some(self.accepting.clone())
        };
        AutomatonDocument {
            version: DOCUMENT_VERSION,
            variant: self.meta.variant.name().to_string(),
            n: self.meta.n,
            lengths: self.meta.lengths.clone(),
            k: self.meta.k,
            sigma: self.meta.sigma,
            alphabet: self
                .alphabet
                .symbols()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            states,
            accepting,
        }
    }

    /// Rebuilds an automaton from a document and validates it.
    pub fn from_document(doc: AutomatonDocument) -> Result<Automaton> {
        if doc.version != DOCUMENT_VERSION {
            return Err(Error::Version(doc.version));
        }
        let variant = Variant::from_name(&doc.variant)
            .ok_or_else(|| Error::Malformed(format!("unknown variant {:?}", doc.variant)))?;
        let mut symbols = Vec::with_capacity(doc.alphabet.len());
        for s in &doc.alphabet {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => symbols.push(c),
                _ => {
                    return Err(Error::Malformed(format!(
                        "alphabet entry {s:?} is not a single character"
                    )))
                }
            }
        }
        let alphabet = Alphabet::from_sorted(symbols)
            .ok_or_else(|| Error::Malformed("alphabet is not sorted and distinct".into()))?;
        if let Some(acc) = &doc.accepting {
            if acc.len() != doc.states.len() {
                return Err(Error::Malformed(format!(
                    "accepting has {} entries for {} states",
                    acc.len(),
                    doc.states.len()
                )));
            }
        }
        let meta = Meta {
            variant,
            n: doc.n,
            lengths: doc.lengths,
            k: doc.k,
            sigma: doc.sigma,
        };
        if variant.is_multi() {
            let ix = meta
                .tuple_indexer()
                .ok_or_else(|| Error::Malformed(format!("variant {variant} requires `lengths`")))?;
            if ix.total_states() != doc.states.len() as u128 {
                return Err(Error::Invalid(format!(
                    "{} states listed, lengths imply {}",
                    doc.states.len(),
                    ix.total_states()
                )));
            }
        } else if let Some(n) = meta.n {
            if variant != Variant::Custom && n + 1 != doc.states.len() {
                return Err(Error::Invalid(format!(
                    "{} states listed, n = {n} implies {}",
                    doc.states.len(),
                    n + 1
                )));
            }
        }
        let states = doc
            .states
            .into_iter()
            .enumerate()
            .map(|(i, r)| StateSpec {
                transitions: r.trans,
                default: r.default,
                accepting: doc.accepting.as_ref().is_none_or(|a| a[i]),
            })
            .collect();
        let a = Automaton::from_states(alphabet, meta, states);
        let report = a.validate_forward();
        if !report.is_ok() {
            return Err(Error::Invalid(report.to_string()));
        }
        Ok(a)
    }

    /// Versioned JSON text of the automaton.
    pub fn serialize(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("document serialization cannot fail")
    }

    pub fn deserialize(text: &str) -> Result<Automaton> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        match value.get("version") {
            Some(v) => match v.as_u64() {
                Some(DOCUMENT_VERSION) => {}
                Some(other) => return Err(Error::Version(other)),
                None => return Err(Error::Malformed(format!("bad version field {v}"))),
            },
            None => return Err(Error::Malformed("missing version field".into())),
        }
        let doc: AutomatonDocument =
            serde_json::from_value(value).map_err(|e| Error::Malformed(e.to_string()))?;
        Automaton::from_document(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::single::build_sa;

    fn sa() -> Automaton {
        build_sa(&"abadca".chars().collect::<Vec<_>>())
    }

    #[test]
    fn round_trip() {
        let a = sa();
        let b = Automaton::deserialize(&a.serialize()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn version_99_rejected() {
        let text = sa()
            .serialize()
            .replacen("\"version\":1", "\"version\":99", 1);
        assert_eq!(Automaton::deserialize(&text), Err(Error::Version(99)));
    }

    #[test]
    fn out_of_range_target_rejected() {
        let mut doc = sa().to_document();
        doc.states[0].trans[0].1 = 42;
        let text = serde_json::to_string(&doc).unwrap();
        match Automaton::deserialize(&text) {
            Err(Error::Invalid(msg)) => assert!(msg.contains("out of range"), "{msg}"),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            Automaton::deserialize("not json"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            Automaton::deserialize("{\"version\":1}"),
            Err(Error::Malformed(_))
        ));
        let text = sa().serialize().replacen("\"sa\"", "\"bogus\"", 1);
        assert!(matches!(
            Automaton::deserialize(&text),
            Err(Error::Malformed(_))
        ));
        let mut doc = sa().to_document();
        doc.alphabet.swap(0, 1);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(matches!(
            Automaton::deserialize(&text),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn k_is_written_as_null() {
        let text = sa().serialize();
        assert!(text.contains("\"k\":null"));
        assert!(text.contains("\"n\":6"));
    }
}
