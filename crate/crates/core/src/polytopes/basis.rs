//! Depth-first enumeration of `ℬ^k(m, ℓ)` by chaining fibers of `𝒫_{Υ≤1}`.

use super::{in_s1, BasisTuple, SetTag, UpsilonElement};
use crate::digits::{digits_of, Prime};
use crate::error::Result;

/// All elements of `𝒮₁ ∪ 𝒮₂ ∪ 𝒮₃` with the given `s`, `t` and `i`,
/// ordered by `(b, u, family)`.
pub fn enumerate_upsilon(p: Prime, s: i64, t: i64, i: i64) -> Vec<UpsilonElement> {
    let pp = p.get();
    let mut out: Vec<(i64, i64, SetTag, UpsilonElement)> = Vec::new();
    if !(1..=pp).contains(&s) || !(1..=pp).contains(&t) {
        return Vec::new();
    }
    if i <= 0 {
        let w = t - s;
        for b in 0..=(-i) / 2 {
            let a = -i - b;
            let c = a - b;
            for u in 0..=1 {
                let v =
                    UpsilonElement::new(s, i, -pp * c - w + 2 * u, (pp - 1) * c + w - u, a, b, t);
                if in_s1(p, &v) {
                    out.push((b, u, SetTag::S1, v));
                }
            }
        }
    }
    if i < 0 && i % 2 != 0 && s < pp && t == pp + 1 - s {
        let a = (-i - 1) / 2;
        out.push((
            a + 1,
            0,
            SetTag::S2,
            UpsilonElement::new(s, i, 1, 0, a, a + 1, t),
        ));
    }
    if i == 1 && t == pp + 1 - s {
        out.push((0, 0, SetTag::S3, UpsilonElement::new(s, 1, 1, 0, 0, 0, t)));
    }
    out.sort_by_key(|&(b, u, tag, _)| (b, u, tag));
    out.into_iter()
        .map(|(_, _, _, v)| {
            debug_assert!(v.k >= 0, "negative k-degree in fiber: {v}");
            v
        })
        .collect()
}

fn digit_pair(p: Prime, q: u32, m: i64, l: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    Ok((digits_of(p, q, m)?.digits, digits_of(p, q, l)?.digits))
}

struct Chain<'a> {
    p: Prime,
    s: &'a [i64],
    t: &'a [i64],
    k: i64,
}

impl Chain<'_> {
    fn walk(
        &self,
        g: usize,
        i: i64,
        used: i64,
        stack: &mut Vec<UpsilonElement>,
        emit: &mut dyn FnMut(&[UpsilonElement]),
    ) {
        if g == self.s.len() {
            if used == self.k {
                emit(stack);
            }
            return;
        }
        for v in enumerate_upsilon(self.p, self.s[g], self.t[g], i) {
            // every fiber element has k >= 0, so overshooting is final
            if used + v.k > self.k {
                continue;
            }
            stack.push(v);
            self.walk(g + 1, v.j, used + v.k, stack, emit);
            stack.pop();
        }
    }
}

fn walk_basis(
    p: Prime,
    q: u32,
    k: i64,
    m: i64,
    l: i64,
    emit: &mut dyn FnMut(&[UpsilonElement]),
) -> Result<()> {
    let (s, t) = digit_pair(p, q, m, l)?;
    if k < 0 {
        return Ok(());
    }
    let chain = Chain { p, s: &s, t: &t, k };
    let mut stack = Vec::with_capacity(q as usize);
    chain.walk(0, 0, 0, &mut stack, emit);
    Ok(())
}

/// Every `q`-tuple of `ℬ^k(m, ℓ)`, in lexicographic fiber order.
pub fn enumerate_basis(p: Prime, q: u32, k: i64, m: i64, l: i64) -> Result<Vec<BasisTuple>> {
    let mut out = Vec::new();
    walk_basis(p, q, k, m, l, &mut |chain| {
        out.push(BasisTuple(chain.to_vec()))
    })?;
    Ok(out)
}

/// `|ℬ^k(m, ℓ)|` without materializing the tuples.
pub fn count_basis(p: Prime, q: u32, k: i64, m: i64, l: i64) -> Result<u64> {
    let mut n = 0u64;
    walk_basis(p, q, k, m, l, &mut |_| n += 1)?;
    Ok(n)
}
