//! Exact evaluation of `dim Ext^k(Δ_m, Δ_ℓ)` through the counts `A` and `B`.
//!
//! `B_{h,l}^{v}` counts integer vectors `(c_1, …, c_h)` with
//! `Σ((p-1)c_g + v_g) = l`, `c_g ≡ V_{g-1} (mod 2)` and
//! `-v_g/p <= c_g <= p c_{g-1} + v_{g-1}`. `A_{h,k}^{w}` is the same count
//! with an extra sign pattern `u ∈ {0,1}^h`, equal to
//! `Σ_u B_{h, k-|u|}^{w - 2u}`. Both are evaluated through the
//! leading-entry recursion, memoized on the full key.

use std::num::NonZeroUsize;

use lru::LruCache;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::digits::{digits_of, minimal_q, parity_prefix, weight_deltas, Prime};
use crate::error::{Error, Result};

/// Exact non-negative count.
pub type Count = BigUint;

/// Default entry cap for each memo table.
pub const DEFAULT_CACHE_ENTRIES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BKey {
    pub l: i64,
    pub v: Vec<i64>,
}

impl BKey {
    pub fn h(&self) -> usize {
        self.v.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AKey {
    pub k: i64,
    pub w: Vec<i64>,
}

impl AKey {
    pub fn h(&self) -> usize {
        self.w.len()
    }
}

/// The four contributions to an Ext dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DimBreakdown {
    /// `A_{q,k}^{w_1..w_q}`: all slots regular.
    pub d1: Count,
    /// Exceptional slot at `h+1 >= 2` followed by a reflected tail.
    pub d2: Count,
    /// Exceptional first slot (only in degree 0).
    pub d3: Count,
    /// An `𝒮₂` slot at `h+1` followed by a reflected tail.
    pub d4: Count,
    pub total: Count,
}

impl DimBreakdown {
    fn assemble(d1: Count, d2: Count, d3: Count, d4: Count) -> Self {
        let total = &d1 + &d2 + &d3 + &d4;
        DimBreakdown {
            d1,
            d2,
            d3,
            d4,
            total,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.total.is_zero()
    }
}

fn shifted_lead(p: i64, next: i64, lead: i64) -> i64 {
    lead.checked_mul(p)
        .and_then(|x| x.checked_add(next))
        .expect("recursion key overflows i64")
}

/// Memoizing evaluator for one characteristic.
///
/// Not `Sync`: give each worker its own instance.
pub struct Recursion {
    p: Prime,
    b_memo: LruCache<BKey, Count>,
    a_memo: LruCache<AKey, Count>,
}

impl Recursion {
    pub fn new(p: Prime) -> Self {
        Self::with_capacity(p, DEFAULT_CACHE_ENTRIES)
    }

    /// `entries` caps each of the two memo tables (least recently used
    /// entries are evicted first).
    pub fn with_capacity(p: Prime, entries: usize) -> Self {
        let cap = NonZeroUsize::new(entries.max(1)).expect("non-zero");
        Recursion {
            p,
            b_memo: LruCache::new(cap),
            a_memo: LruCache::new(cap),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn cached_entries(&self) -> usize {
        self.b_memo.len() + self.a_memo.len()
    }

    pub fn clear(&mut self) {
        self.b_memo.clear();
        self.a_memo.clear();
    }

    pub fn b(&mut self, l: i64, v: &[i64]) -> Count {
        assert!(!v.is_empty(), "B needs h >= 1");
        let p = self.p.get();
        let lead = v[0];
        if lead < 0 || l < 0 {
            return Count::zero();
        }
        if v.len() == 1 {
            let hits = (l - lead).rem_euclid(2 * (p - 1)) == 0 && lead <= p * l && l <= lead;
            return if hits { Count::one() } else { Count::zero() };
        }
        let key = BKey { l, v: v.to_vec() };
        if let Some(hit) = self.b_memo.get(&key) {
            return hit.clone();
        }
        let mut total = Count::zero();
        let mut rest = v[1..].to_vec();
        let step = 2 * p;
        for d in 0..=lead / step {
            rest[0] = shifted_lead(p, v[1], lead - d * step);
            total += self.b(l - 2 * d, &rest);
        }
        self.b_memo.put(key, total.clone());
        total
    }

    pub fn a(&mut self, k: i64, w: &[i64]) -> Count {
        assert!(!w.is_empty(), "A needs h >= 1");
        if k < 0 {
            return Count::zero();
        }
        let p = self.p.get();
        let lead = w[0];
        if w.len() == 1 {
            let hit = |u: i64| {
                let n = k + u;
                (n - lead).rem_euclid(2 * (p - 1)) == 0
                    && lead + 2 * (p - 1) * u <= p * n
                    && n <= lead
            };
            let (zero, one) = (hit(0), hit(1));
            debug_assert!(
                !(zero && one),
                "both sign branches admissible for k={k}, w={lead}"
            );
            return if zero || one {
                Count::one()
            } else {
                Count::zero()
            };
        }
        let key = AKey { k, w: w.to_vec() };
        if let Some(hit) = self.a_memo.get(&key) {
            return hit.clone();
        }
        let mut total = Count::zero();
        let mut rest = w[1..].to_vec();
        let step = 2 * p;
        for u in 0..=1 {
            let top = lead - 2 * u;
            if top < 0 {
                continue;
            }
            for d in 0..=top / step {
                rest[0] = shifted_lead(p, w[1], top - d * step);
                total += self.a(k - u - 2 * d, &rest);
            }
        }
        self.a_memo.put(key, total.clone());
        total
    }

    /// `A` as the sum of `B` over all `2^h` sign patterns.
    pub fn a_via_b(&mut self, k: i64, w: &[i64]) -> Count {
        let h = w.len();
        assert!((1..63).contains(&h), "A needs 1 <= h < 63");
        let mut total = Count::zero();
        let mut shifted = vec![0; h];
        for pattern in 0u64..(1u64 << h) {
            let mut ones = 0;
            for (g, slot) in shifted.iter_mut().enumerate() {
                let u = ((pattern >> (h - 1 - g)) & 1) as i64;
                ones += u;
                *slot = w[g] - 2 * u;
            }
            total += self.b(k - ones, &shifted);
        }
        total
    }

    /// `dim Ext^k(Δ_m, Δ_ℓ)` split into its four contributions.
    ///
    /// Without `q`, the smallest block containing both indices is used.
    pub fn ext_dim(&mut self, k: i64, m: i64, l: i64, q: Option<u32>) -> Result<DimBreakdown> {
        let p = self.p;
        if m < 1 || l < 1 {
            let (what, value) = if m < 1 { ("m", m) } else { ("ℓ", l) };
            return Err(Error::OutOfRange {
                what,
                value,
                min: 1,
                max: i64::MAX,
            });
        }
        let q = match q {
            Some(q) => q,
            None => minimal_q(p, m, l),
        };
        let s = digits_of(p, q, m)?.digits;
        let t = digits_of(p, q, l)?.digits;
        if k < 0 || k > l - m {
            return Ok(DimBreakdown::default());
        }
        let w = weight_deltas(&s, &t)?;
        let parity = parity_prefix(p, &w);
        let w = w.as_slice();
        let q = q as usize;
        let pp = p.get();
        // reflected(g0): t_g = p + 1 - s_g for all g in g0..=q (1-based)
        let reflected = |from: usize| (from..=q).all(|g| t[g - 1] == pp + 1 - s[g - 1]);

        let d1 = self.a(k, w);
        let mut d2 = Count::zero();
        let mut d4 = Count::zero();
        for h in 1..q {
            if !parity.is_odd(h) && w[h] == 1 && reflected(h + 2) {
                d2 += self.a(k, &w[..h]);
            }
            if parity.is_odd(h) && s[h] != pp && reflected(h + 1) {
                d4 += self.a(k, &w[..h]);
            }
        }
        let d3 = if k == 0 && w[0] == 1 && reflected(2) {
            Count::one()
        } else {
            Count::zero()
        };
        Ok(DimBreakdown::assemble(d1, d2, d3, d4))
    }
}

/// `(p^q + 1 - ℓ, p^q + 1 - m)`.
pub fn duality_partner(p: Prime, q: u32, m: i64, l: i64) -> Result<(i64, i64)> {
    let size = p.pow(q)?;
    crate::error::check_range("m", m, 1, size)?;
    crate::error::check_range("ℓ", l, 1, size)?;
    Ok((size + 1 - l, size + 1 - m))
}

/// `A` evaluated with the loop bound of the original C program, where
/// `(w_1 - 2u) / (2p)` truncates toward zero and so runs `d = 0` for
/// `-2p < w_1 - 2u < 0`. Unmemoized; kept for comparison only.
pub fn a_rec_truncating(p: Prime, k: i64, w: &[i64]) -> Count {
    let pp = p.get();
    let lead = w[0];
    if w.len() == 1 {
        let hit = (0..=1).any(|u| {
            let n = k + u;
            (n - lead) % (2 * (pp - 1)) == 0
                && lead + 2 * (pp - 1) * u <= n * pp
                && n * pp <= lead * pp
        });
        return if hit { Count::one() } else { Count::zero() };
    }
    let mut total = Count::zero();
    let mut rest = w[1..].to_vec();
    for u in 0..=1 {
        let mut d = 0;
        while d <= (lead - 2 * u) / (2 * pp) {
            rest[0] = w[1] + pp * (lead - 2 * u - 2 * d * pp);
            total += a_rec_truncating(p, k - u - 2 * d, &rest);
            d += 1;
        }
    }
    total
}
