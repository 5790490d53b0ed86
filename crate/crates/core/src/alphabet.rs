use std::collections::BTreeSet;

/// Dense symbol id in `[0, σ)`.
pub type SymbolId = u32;

/// Sorted set of distinct characters with a dense id per character.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Collects the distinct characters of every text, sorted by code point.
    pub fn from_texts<'a, I>(texts: I) -> Self
    where
        I: IntoIterator<Item = &'a [char]>,
    {
        let set: BTreeSet<char> = texts.into_iter().flatten().copied().collect();
        Alphabet {
            symbols: set.into_iter().collect(),
        }
    }

    pub fn from_text(text: &[char]) -> Self {
        Self::from_texts([text])
    }

    /// Builds an alphabet from an explicit symbol list. Returns `None` when the
    /// list is not strictly increasing.
    pub fn from_sorted(symbols: Vec<char>) -> Option<Self> {
        if symbols.windows(2).all(|w| w[0] < w[1]) {
            Some(Alphabet { symbols })
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn id(&self, c: char) -> Option<SymbolId> {
        self.symbols.binary_search(&c).ok().map(|i| i as SymbolId)
    }

    pub fn symbol(&self, id: SymbolId) -> Option<char> {
        self.symbols.get(id as usize).copied()
    }

    /// Maps a text onto symbol ids; panics if a character is missing, so only
    /// use it with texts the alphabet was built from.
    pub(crate) fn encode(&self, text: &[char]) -> Vec<SymbolId> {
        text.iter()
            .map(|&c| self.id(c).expect("character outside alphabet"))
            .collect()
    }

    /// A character strictly greater than every symbol, used to probe the
    /// rejection path for unknown characters.
    pub fn fresh_symbol(&self) -> char {
        let mut c = self.symbols.last().map_or('a' as u32, |&c| c as u32 + 1);
        loop {
            if let Some(ch) = char::from_u32(c) {
                return ch;
            }
            c += 1;
        }
    }
}
