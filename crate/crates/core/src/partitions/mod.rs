//! `p`-adic partition functions.
//!
//! * `q_p(D, d)`: sequences `n_i >= 0` with `Σ n_i p^i = D` and `Σ n_i = d`.
//! * `r_p(M, d)`: sequences `d >= m_0 >= m_1 >= … >= 0` with `Σ m_i p^i = M`.
//! * `r_p^h(M, d)`: `0 <= d_0 <= … <= d_h <= d` with `Σ d_i p^{h-i} = M`.
//!
//! `Z_p(d) = max_M r_p(M, d)` has no a-priori range for the maximizing `M`,
//! so [`PartitionTable::z_scan`] only scans `0 <= M <= M_max` and returns a
//! lower bound.

pub mod bounds;
mod explicit;

use std::num::NonZeroUsize;

use lru::LruCache;
use num_traits::{One, Zero};

pub use explicit::b_explicit;

use crate::digits::Prime;
use crate::error::{check_range, Result};
use crate::recursion::{Count, DEFAULT_CACHE_ENTRIES};

/// `q_p(D, d)` by depth-first search over the digits from the top power down.
pub fn q_p(p: Prime, big_d: i64, d: i64) -> Count {
    if big_d < 0 || d < 0 {
        return Count::zero();
    }
    let pp = p.get();
    let mut powers = vec![1i64];
    while let Some(next) = powers.last().unwrap().checked_mul(pp) {
        if next > big_d {
            break;
        }
        powers.push(next);
    }

    fn go(powers: &[i64], i: usize, rem: i64, left: i64) -> Count {
        if i == 0 {
            return if rem == left {
                Count::one()
            } else {
                Count::zero()
            };
        }
        let mut total = Count::zero();
        let step = powers[i];
        let below = powers[i - 1];
        for n in 0..=left.min(rem / step) {
            let (rem, left) = (rem - n * step, left - n);
            // the lower powers can realize any rem in [left, left * p^{i-1}]
            if left <= rem && rem <= left.saturating_mul(below) {
                total += go(powers, i - 1, rem, left);
            }
        }
        total
    }
    go(&powers, powers.len() - 1, big_d, d)
}

/// Base-`p` digit sum.
pub fn sigma_p(p: Prime, big_d: i64) -> Result<u64> {
    check_range("D", big_d, 0, i64::MAX)?;
    let pp = p.get();
    let (mut x, mut sum) = (big_d, 0u64);
    while x > 0 {
        sum += (x % pp) as u64;
        x /= pp;
    }
    Ok(sum)
}

/// `(p^{n} - 1) / (p - 1)`, or `None` on overflow.
fn repunit(p: i64, n: u32) -> Option<i64> {
    let mut acc = 0i64;
    for _ in 0..n {
        acc = acc.checked_mul(p)?.checked_add(1)?;
    }
    Some(acc)
}

/// Memoized `r_p` and `r_p^h` for one characteristic.
pub struct PartitionTable {
    p: Prime,
    r_memo: LruCache<(i64, i64), Count>,
    rh_memo: LruCache<(i64, i64, u32), Count>,
}

impl PartitionTable {
    pub fn new(p: Prime) -> Self {
        Self::with_capacity(p, DEFAULT_CACHE_ENTRIES)
    }

    pub fn with_capacity(p: Prime, entries: usize) -> Self {
        let cap = NonZeroUsize::new(entries.max(1)).expect("non-zero");
        PartitionTable {
            p,
            r_memo: LruCache::new(cap),
            rh_memo: LruCache::new(cap),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// `r_p(M, d)` via `r_p(M, d) = Σ_{0 <= n_0 <= d, n_0 ≡ M (p)} r_p((M - n_0)/p, n_0)`.
    pub fn r(&mut self, m: i64, d: i64) -> Count {
        if m < 0 || d < 0 {
            return Count::zero();
        }
        if m == 0 {
            return Count::one();
        }
        let d = d.min(m);
        if let Some(hit) = self.r_memo.get(&(m, d)) {
            return hit.clone();
        }
        let pp = self.p.get();
        let mut total = Count::zero();
        let mut n0 = m % pp;
        while n0 <= d {
            total += self.r((m - n0) / pp, n0);
            n0 += pp;
        }
        self.r_memo.put((m, d), total.clone());
        total
    }

    /// `r_p^h(M, d)` via `r_p^h(M, d) = Σ_{0 <= f <= d} r_p^{h-1}(M - f (p^{h+1}-1)/(p-1), d - f)`.
    pub fn r_h(&mut self, m: i64, d: i64, h: u32) -> Count {
        if m < 0 || d < 0 {
            return Count::zero();
        }
        if h == 0 {
            return if m <= d { Count::one() } else { Count::zero() };
        }
        let pp = self.p.get();
        let weight = repunit(pp, h + 1);
        // the largest value is d · (1 + p + … + p^h)
        if let Some(top) = weight.and_then(|w| w.checked_mul(d)) {
            if m > top {
                return Count::zero();
            }
        }
        if let Some(hit) = self.rh_memo.get(&(m, d, h)) {
            return hit.clone();
        }
        let mut total = Count::zero();
        for f in 0..=d {
            let shift = match weight.and_then(|w| w.checked_mul(f)) {
                Some(s) if s <= m => s,
                _ => break,
            };
            total += self.r_h(m - shift, d - f, h - 1);
        }
        self.rh_memo.put((m, d, h), total.clone());
        total
    }

    /// `q_p(D, d)` through `r_p((D - d)/(p - 1), d)`.
    pub fn q_via_r(&mut self, big_d: i64, d: i64) -> Result<Count> {
        check_range("D", big_d, 0, i64::MAX)?;
        check_range("d", d, 0, i64::MAX)?;
        let step = self.p.get() - 1;
        if (big_d - d).rem_euclid(step) != 0 {
            return Ok(Count::zero());
        }
        Ok(self.r((big_d - d) / step, d))
    }

    /// `max_{0 <= M <= m_max} r_p(M, d)`: a lower bound for `Z_p(d)`.
    pub fn z_scan(&mut self, d: i64, m_max: i64) -> Result<Count> {
        check_range("d", d, 0, i64::MAX)?;
        check_range("M_max", m_max, 0, i64::MAX)?;
        let mut best = Count::zero();
        for m in 0..=m_max {
            let v = self.r(m, d);
            if v > best {
                best = v;
            }
        }
        Ok(best)
    }

    /// `(M, r_p(M, d))` for `0 <= M <= m_max`.
    pub fn series(&mut self, d: i64, m_max: i64) -> Result<Vec<(i64, Count)>> {
        check_range("d", d, 0, i64::MAX)?;
        check_range("M_max", m_max, 0, i64::MAX)?;
        Ok((0..=m_max).map(|m| (m, self.r(m, d))).collect())
    }
}

/// Default scan limit `p^{e+3}` with `e` the least exponent such that `p^e >= d + 1`.
pub fn default_m_max(p: Prime, d: i64) -> Result<i64> {
    check_range("d", d, 0, i64::MAX)?;
    let mut e = 0u32;
    while p.pow(e)? < d + 1 {
        e += 1;
    }
    p.pow(e + 3)
}
