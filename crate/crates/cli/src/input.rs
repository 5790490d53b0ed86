use std::fs;

use anyhow::{bail, Context, Result};
use subseq_core::{build_multi, build_single, Automaton, KLevelOptions, MultiOptions, Variant};

use crate::args::{Mode, Source, TextArgs};

pub fn decode(s: &str, unicode: bool) -> Vec<char> {
    if unicode {
        s.chars().collect()
    } else {
        s.bytes().map(char::from).collect()
    }
}

impl TextArgs {
    /// Every input string, in the order `--text`, `--texts`, `--file`.
    pub fn load(&self) -> Result<Vec<Vec<char>>> {
        let mut out = Vec::new();
        if let Some(t) = &self.text {
            out.push(decode(t, self.unicode));
        }
        out.extend(self.texts.iter().map(|t| decode(t, self.unicode)));
        for path in &self.files {
            let bytes =
                fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
            let text = if self.unicode {
                String::from_utf8(bytes)
                    .with_context(|| format!("{} is not UTF-8", path.display()))?
                    .chars()
                    .collect()
            } else {
                bytes.into_iter().map(char::from).collect()
            };
            out.push(text);
        }
        Ok(out)
    }
}

impl Source {
    fn variant_for(&self, count: usize) -> Result<Variant> {
        let multi = count >= 2;
        let variant = match self.variant.as_deref() {
            Some(name) => Variant::from_name(name)
                .filter(|v| *v != Variant::Custom)
                .with_context(|| format!("unknown variant {name:?}"))?,
            None if multi => Variant::CommonLevel,
            None => Variant::Level,
        };
        let variant = match (variant, self.mode) {
            (Variant::CommonLevel | Variant::Level, Some(Mode::Any)) if multi => Variant::AnyLevel,
            (Variant::Level, _) if multi => Variant::CommonLevel,
            (v, _) => v,
        };
        if variant.is_multi() != multi {
            if variant.is_multi() {
                bail!("variant {variant} needs at least two input strings");
            }
            bail!("variant {variant} takes exactly one input string, got {count}");
        }
        if self.k.is_some() && variant != Variant::KLevel {
            bail!("--k is only valid with --variant klevel");
        }
        Ok(variant)
    }

    /// Builds the requested automaton, or loads `--automaton`.
    pub fn automaton(&self) -> Result<Automaton> {
        if let Some(path) = &self.automaton {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            return Automaton::deserialize(&text)
                .with_context(|| format!("cannot load {}", path.display()));
        }
        let texts = self.text.load()?;
        if texts.is_empty() {
            bail!("no input: give --text, --texts, --file or --automaton");
        }
        let variant = self.variant_for(texts.len())?;
        let a = if variant.is_multi() {
            let refs: Vec<&[char]> = texts.iter().map(|t| t.as_slice()).collect();
            let opts = MultiOptions {
                sigma: self.sigma,
                state_budget: self.state_budget,
            };
            build_multi(variant, &refs, opts)?
        } else {
            let opts = KLevelOptions {
                sigma: self.sigma,
                strip_unreachable_defaults: self.strip_defaults,
            };
            build_single(variant, &texts[0], self.k, opts)?
        };
        let report = match a.meta().tuple_indexer() {
            Some(ix) => a.validate(|u, v| ix.forward(u, v)),
            None => a.validate_forward(),
        };
        if !report.is_ok() {
            bail!("built automaton is invalid: {report}");
        }
        Ok(a)
    }
}
