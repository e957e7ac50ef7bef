//! Second enumerator for `ℬ^k(m, ℓ)`: walks the `(u_g, c_g)` parameters of
//! each admissible case shape and materializes the 7-tuples directly.
//!
//! Shapes: `(1^q)`, `(1^h 2 3^{q-h-1})` and `(1^h 3^{q-h})` for
//! `1 <= h <= q-1`. The parameters obey, for every regular `S₁` slot `g`,
//!
//! * `u_g ∈ {0, 1}` and `c_g ≡ W_{g-1} (mod 2)`,
//! * `p·c_g >= 2u_g - w_g` and `c_g <= p·c_{g-1} + w_{g-1} - 2u_{g-1}`,
//!
//! with `c_0 = w_0 = u_0 = 0`. The slot just before a trailing `𝒮₃` run (or
//! the last slot) may instead be the exceptional `c = 0, u = 1 = w`.

use super::{BasisTuple, UpsilonElement};
use crate::digits::{digits_of, parity_prefix, weight_deltas, ParityPrefix, Prime};
use crate::error::Result;

#[derive(Debug, Clone, Copy)]
struct Slot {
    u: i64,
    c: i64,
}

struct Cases<'a> {
    p: i64,
    s: &'a [i64],
    t: &'a [i64],
    w: &'a [i64],
    parity: &'a ParityPrefix,
    k: i64,
}

fn half(x: i64) -> i64 {
    debug_assert!(x % 2 == 0, "odd numerator {x} in parameterized tuple");
    x / 2
}

impl Cases<'_> {
    /// `-j_{g-1}` for slot `g` (1-based), given the previous slot.
    fn budget(&self, g: usize, prev: Option<Slot>) -> i64 {
        match prev {
            None => 0,
            Some(Slot { u, c }) => self.p * c + self.w[g - 2] - 2 * u,
        }
    }

    fn k_degree(&self, g: usize, slot: Slot) -> i64 {
        (self.p - 1) * slot.c + self.w[g - 1] - slot.u
    }

    /// All regular parameter prefixes for slots `1..=h` whose partial
    /// degree does not exceed `k`.
    fn prefixes(&self, h: usize, emit: &mut dyn FnMut(&[Slot], i64)) {
        let mut stack = Vec::with_capacity(h);
        self.extend(h, &mut stack, 0, emit);
    }

    fn extend(
        &self,
        h: usize,
        stack: &mut Vec<Slot>,
        used: i64,
        emit: &mut dyn FnMut(&[Slot], i64),
    ) {
        let g = stack.len() + 1;
        if g > h {
            emit(stack, used);
            return;
        }
        let upper = self.budget(g, stack.last().copied());
        let parity = i64::from(self.parity.get(g - 1));
        for u in 0..=1 {
            let wg = self.w[g - 1];
            // p c >= 2u - w  <=>  c >= ceil((2u - w) / p)
            let lower = crate::digits::div_ceil(2 * u - wg, self.p);
            for c in lower..=upper {
                if c.rem_euclid(2) != parity {
                    continue;
                }
                let slot = Slot { u, c };
                let kg = self.k_degree(g, slot);
                // regular slots always have non-negative degree
                debug_assert!(kg >= 0);
                if used + kg > self.k {
                    continue;
                }
                stack.push(slot);
                self.extend(h, stack, used + kg, emit);
                stack.pop();
            }
        }
    }

    fn s1_vector(&self, g: usize, slot: Slot, prev: Option<Slot>) -> UpsilonElement {
        let p = self.p;
        let back = self.budget(g, prev);
        UpsilonElement::new(
            self.s[g - 1],
            -back,
            -p * slot.c - self.w[g - 1] + 2 * slot.u,
            self.k_degree(g, slot),
            half(slot.c + back),
            half(-slot.c + back),
            self.t[g - 1],
        )
    }

    fn s3_vector(&self, g: usize) -> UpsilonElement {
        let s = self.s[g - 1];
        UpsilonElement::new(s, 1, 1, 0, 0, 0, self.p + 1 - s)
    }

    fn materialize_prefix(&self, slots: &[Slot]) -> Vec<UpsilonElement> {
        let mut out = Vec::with_capacity(self.s.len());
        let mut prev = None;
        for (idx, &slot) in slots.iter().enumerate() {
            out.push(self.s1_vector(idx + 1, slot, prev));
            prev = Some(slot);
        }
        out
    }

    fn tail_is_reflected(&self, from: usize) -> bool {
        (from..=self.s.len()).all(|g| self.t[g - 1] == self.p + 1 - self.s[g - 1])
    }

    /// The exceptional slot `c = 0, u = 1 = w` at position `g`.
    fn exceptional_fits(&self, g: usize, prev: Option<Slot>) -> bool {
        self.w[g - 1] == 1 && self.parity.get(g - 1) == 0 && self.budget(g, prev) >= 0
    }

    fn run(&self) -> Vec<BasisTuple> {
        let q = self.s.len();
        let mut out = Vec::new();

        // (1^q), regular final slot
        self.prefixes(q, &mut |slots, used| {
            if used == self.k {
                out.push(BasisTuple(self.materialize_prefix(slots)));
            }
        });

        // (1^q) with exceptional final slot, and (1^h 3^{q-h})
        for h in 1..=q {
            if !self.tail_is_reflected(h + 1) {
                continue;
            }
            self.prefixes(h - 1, &mut |slots, used| {
                let prev = slots.last().copied();
                if used != self.k || !self.exceptional_fits(h, prev) {
                    return;
                }
                let exceptional = Slot { u: 1, c: 0 };
                let mut vectors = self.materialize_prefix(slots);
                vectors.push(self.s1_vector(h, exceptional, prev));
                vectors.extend((h + 1..=q).map(|g| self.s3_vector(g)));
                out.push(BasisTuple(vectors));
            });
        }

        // (1^h 2 3^{q-h-1})
        for h in 1..q {
            if !self.parity.is_odd(h) || self.s[h] > self.p - 1 || !self.tail_is_reflected(h + 1) {
                continue;
            }
            self.prefixes(h, &mut |slots, used| {
                if used != self.k {
                    return;
                }
                let last = *slots.last().expect("h >= 1");
                let back = self.p * last.c + self.w[h - 1] - 2 * last.u;
                let s = self.s[h];
                let mut vectors = self.materialize_prefix(slots);
                vectors.push(UpsilonElement::new(
                    s,
                    -back,
                    1,
                    0,
                    half(back - 1),
                    half(back + 1),
                    self.p + 1 - s,
                ));
                vectors.extend((h + 2..=q).map(|g| self.s3_vector(g)));
                out.push(BasisTuple(vectors));
            });
        }

        out.sort();
        out
    }
}

/// Every tuple of `ℬ^k(m, ℓ)`, generated from the case parameterization.
pub fn enumerate_cases(p: Prime, q: u32, k: i64, m: i64, l: i64) -> Result<Vec<BasisTuple>> {
    let s = digits_of(p, q, m)?.digits;
    let t = digits_of(p, q, l)?.digits;
    if k < 0 {
        return Ok(Vec::new());
    }
    let w = weight_deltas(&s, &t)?;
    let parity = parity_prefix(p, &w);
    let cases = Cases {
        p: p.get(),
        s: &s,
        t: &t,
        w: w.as_slice(),
        parity: &parity,
        k,
    };
    Ok(cases.run())
}
