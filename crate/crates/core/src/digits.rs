//! Base-`p` digit bookkeeping for positions inside a block.
//!
//! A block with `p^q` simple modules indexes its standard modules by
//! `m ∈ [1, p^q]`. The shifted digit vector `(s_1, …, s_q)`, each in `[1, p]`,
//! is the base-`p` expansion of `m - 1` (most significant digit first) with
//! every digit increased by one.

use std::fmt;

use crate::error::{check_range, Error, Result};

/// The characteristic of the base field.
///
/// Only `p >= 2` is enforced. Primality is not checked: every formula in this
/// crate is evaluated as written for the given integer, and results for
/// composite `p` carry no representation-theoretic meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(i64);

impl Prime {
    pub fn new(p: i64) -> Result<Self> {
        check_range("p", p, 2, i64::from(u32::MAX))?;
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }

    /// `p^q`, or an overflow error.
    pub fn pow(self, q: u32) -> Result<i64> {
        self.0.checked_pow(q).ok_or(Error::Overflow("p^q"))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A module index `m` together with its shifted digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockCoordinates {
    pub p: Prime,
    pub m: i64,
    /// `(s_1, …, s_q)`, most significant first.
    pub digits: Vec<i64>,
}

impl BlockCoordinates {
    pub fn q(&self) -> u32 {
        self.digits.len() as u32
    }
}

/// Componentwise `t_g - s_g` for two digit vectors of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDeltas(pub Vec<i64>);

impl WeightDeltas {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `Σ w_g p^{q-g}`, which equals `ℓ - m`.
    pub fn weighted_sum(&self, p: Prime) -> i64 {
        self.0.iter().fold(0, |acc, &w| acc * p.get() + w)
    }
}

/// Parities `(W_0, …, W_q)` with `W_0 = 0`, each stored as 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityPrefix(pub Vec<u8>);

impl ParityPrefix {
    #[inline]
    pub fn get(&self, f: usize) -> u8 {
        self.0[f]
    }

    #[inline]
    pub fn is_odd(&self, f: usize) -> bool {
        self.0[f] == 1
    }
}

pub fn digits_of(p: Prime, q: u32, m: i64) -> Result<BlockCoordinates> {
    if q == 0 {
        return Err(Error::Domain("q must be at least 1".into()));
    }
    let size = p.pow(q)?;
    check_range("m", m, 1, size)?;
    let mut rest = m - 1;
    let mut digits = vec![0; q as usize];
    for slot in digits.iter_mut().rev() {
        *slot = rest % p.get() + 1;
        rest /= p.get();
    }
    Ok(BlockCoordinates { p, m, digits })
}

pub fn index_of(p: Prime, digits: &[i64]) -> Result<i64> {
    let mut m: i64 = 0;
    for &s in digits {
        check_range("digit", s, 1, p.get())?;
        m = m
            .checked_mul(p.get())
            .and_then(|x| x.checked_add(s - 1))
            .ok_or(Error::Overflow("index"))?;
    }
    Ok(m + 1)
}

/// Smallest `q >= 1` with `m <= p^q` and `ℓ <= p^q`.
pub fn minimal_q(p: Prime, m: i64, l: i64) -> u32 {
    let target = m.max(l);
    let mut q = 1u32;
    let mut power = p.get();
    while power < target {
        power = match power.checked_mul(p.get()) {
            Some(x) => x,
            None => return q + 1,
        };
        q += 1;
    }
    q
}

pub fn weight_deltas(source: &[i64], target: &[i64]) -> Result<WeightDeltas> {
    if source.len() != target.len() {
        return Err(Error::Shape {
            left: source.len(),
            right: target.len(),
        });
    }
    Ok(WeightDeltas(
        source.iter().zip(target).map(|(s, t)| t - s).collect(),
    ))
}

/// For `p >= 3`, `W_f ≡ w_1 + … + w_f`; for `p = 2`, `W_f ≡ w_f` (mod 2).
pub fn parity_prefix(p: Prime, w: &WeightDeltas) -> ParityPrefix {
    let mut out = Vec::with_capacity(w.0.len() + 1);
    out.push(0u8);
    let mut running = 0i64;
    for &wf in &w.0 {
        let value = if p.get() >= 3 {
            running += wf;
            running
        } else {
            wf
        };
        out.push(value.rem_euclid(2) as u8);
    }
    ParityPrefix(out)
}

/// `δ(b; a)`: 1 if `a | b`, else 0.
pub fn delta_div(b: i64, a: i64) -> Result<u32> {
    if a < 1 {
        return Err(Error::Domain(format!("divisor {a} must be positive")));
    }
    Ok(u32::from(b.rem_euclid(a) == 0))
}

/// Floor division for a positive divisor.
#[inline]
pub(crate) fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// Ceiling division for a positive divisor.
#[inline]
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}
