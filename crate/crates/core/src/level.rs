//! Ruler-style level function and the "next higher level" successor.
//!
//! `level(i)` is the exponent of the largest power of `k` dividing `i`,
//! optionally clamped to a ceiling. `bar(s)` is the first state after `s`
//! whose level is strictly higher; it is always the next multiple of
//! `k^(level(s) + 1)`.

use crate::error::{Error, Result};

/// Parameters of a level structure over states `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelParams {
    k: u64,
    cap: Option<u32>,
    n: usize,
}

/// Smallest `c` with `k^c >= sigma` (0 for `sigma <= 1`).
pub fn ceil_log(k: u64, sigma: usize) -> u32 {
    assert!(k >= 2, "base must be at least 2");
    let mut c = 0;
    let mut p: u128 = 1;
    while p < sigma as u128 {
        p *= k as u128;
        c += 1;
    }
    c
}

/// Largest `x` with `k^x` dividing `i`. `i` must be positive.
pub fn ruler(mut i: u64, k: u64) -> u32 {
    debug_assert!(i > 0 && k >= 2);
    if k == 2 {
        return i.trailing_zeros();
    }
    let mut x = 0;
    while i.is_multiple_of(k) {
        i /= k;
        x += 1;
    }
    x
}

impl LevelParams {
    /// Base 2 with no ceiling, as used by the plain level automaton.
    pub fn uncapped(n: usize) -> Self {
        LevelParams { k: 2, cap: None, n }
    }

    /// Base `k` capped at `⌈log_k σ⌉` (at least 1). Requires `2 <= k <= max(σ, 2)`.
    pub fn alphabet_aware(k: u64, sigma: usize, n: usize) -> Result<Self> {
        if k < 2 || k > sigma.max(2) as u64 {
            return Err(Error::InvalidBase { k, sigma });
        }
        Ok(LevelParams {
            k,
            cap: Some(ceil_log(k, sigma).max(1)),
            n,
        })
    }

    /// Arbitrary combination, for experiments; `k` must be at least 2.
    pub fn new(k: u64, cap: Option<u32>, n: usize) -> Self {
        assert!(k >= 2, "base must be at least 2");
        LevelParams { k, cap, n }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self, i: usize) -> u32 {
        assert!(i >= 1, "state 0 has no level");
        let l = ruler(i as u64, self.k);
        match self.cap {
            Some(c) => l.min(c),
            None => l,
        }
    }

    /// `k^e`, or `None` past `u64`.
    fn pow(&self, e: u32) -> Option<u64> {
        self.k.checked_pow(e)
    }

    /// Smallest `s' in (s, n]` with `level(s') >= level(s) + 1`.
    pub fn bar(&self, s: usize) -> Option<usize> {
        let l = self.level(s);
        self.bar_at_level(s, l)
    }

    pub(crate) fn bar_at_level(&self, s: usize, l: u32) -> Option<usize> {
        if self.cap == Some(l) {
            return None;
        }
        let step = self.pow(l + 1)?;
        let next = (s as u64 / step).checked_add(1)?.checked_mul(step)?;
        (next <= self.n as u64).then_some(next as usize)
    }
}
