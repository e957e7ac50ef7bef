//! `B` as a double sum of `q_p`.

use num_traits::Zero;

use super::q_p;
use crate::digits::{div_ceil, div_floor, Prime};
use crate::error::{Error, Result};
use crate::recursion::Count;

/// `δ(V - l; 2(p-1)) · Σ_{0<=d<=l/2} Σ_{(V-p(l-2d))/(2p²) <= D <= (V-(l-2d))/(2p²)} q_p(D, d)`
/// with `V = v_h + v_{h-1} p + … + v_1 p^{h-1}`.
///
/// Requires `h > 1`, every `v_g <= p - 1`, `V >= 0` and `l >= 0`.
pub fn b_explicit(p: Prime, l: i64, v: &[i64]) -> Result<Count> {
    let pp = p.get();
    if v.len() < 2 {
        return Err(Error::Domain(format!(
            "explicit B needs h > 1, got h = {}",
            v.len()
        )));
    }
    if let Some(bad) = v.iter().find(|&&x| x > pp - 1) {
        return Err(Error::Domain(format!(
            "entry {bad} exceeds p - 1 = {}",
            pp - 1
        )));
    }
    if l < 0 {
        return Err(Error::Domain(format!("l = {l} is negative")));
    }
    let big_v = v
        .iter()
        .try_fold(0i64, |acc, &x| acc.checked_mul(pp)?.checked_add(x))
        .ok_or(Error::Overflow("V"))?;
    if big_v < 0 {
        return Err(Error::Domain(format!("V = {big_v} is negative")));
    }
    if (big_v - l).rem_euclid(2 * (pp - 1)) != 0 {
        return Ok(Count::zero());
    }
    let denom = 2 * pp * pp;
    let mut total = Count::zero();
    for d in 0..=l / 2 {
        let rest = l - 2 * d;
        let lo = div_ceil(big_v - pp * rest, denom).max(0);
        let hi = div_floor(big_v - rest, denom);
        for big_d in lo..=hi {
            total += q_p(p, big_d, d);
        }
    }
    Ok(total)
}
