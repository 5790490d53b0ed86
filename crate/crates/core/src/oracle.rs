//! Ground-truth membership tests, independent of any automaton.

/// Greedy leftmost embedding of `p` into `s`.
pub fn is_subsequence(p: &[char], s: &[char]) -> bool {
    let mut it = s.iter();
    p.iter().all(|c| it.any(|x| x == c))
}

/// Dynamic-programming check: `reach[j]` is true when `p[..i]` embeds into
/// `s[..j]`. Quadratic; kept as an independent cross-check of the greedy scan.
pub fn is_subsequence_dp(p: &[char], s: &[char]) -> bool {
    let mut reach = vec![true; s.len() + 1];
    for &c in p {
        let mut next = vec![false; s.len() + 1];
        for j in 1..=s.len() {
            next[j] = next[j - 1] || (reach[j - 1] && s[j - 1] == c);
        }
        reach = next;
    }
    reach[s.len()]
}

pub fn is_common_subsequence<T: AsRef<[char]>>(p: &[char], texts: &[T]) -> bool {
    texts.iter().all(|t| is_subsequence(p, t.as_ref()))
}

pub fn is_any_subsequence<T: AsRef<[char]>>(p: &[char], texts: &[T]) -> bool {
    texts.iter().any(|t| is_subsequence(p, t.as_ref()))
}

/// Language an automaton is expected to recognise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Oracle {
    Subsequence(Vec<char>),
    Common(Vec<Vec<char>>),
    Any(Vec<Vec<char>>),
}

impl Oracle {
    pub fn accepts(&self, p: &[char]) -> bool {
        match self {
            Oracle::Subsequence(s) => is_subsequence(p, s),
            Oracle::Common(ts) => is_common_subsequence(p, ts),
            Oracle::Any(ts) => is_any_subsequence(p, ts),
        }
    }
}

/// Anything that decides pattern membership; implemented for [`Oracle`] and
/// for closures.
pub trait Membership: Sync {
    fn accepts(&self, p: &[char]) -> bool;
}

impl Membership for Oracle {
    fn accepts(&self, p: &[char]) -> bool {
        Oracle::accepts(self, p)
    }
}

impl<F> Membership for F
where
    F: Fn(&[char]) -> bool + Sync,
{
    fn accepts(&self, p: &[char]) -> bool {
        self(p)
    }
}
