//! Integer polytopes indexing a basis of `Υ^{≤1}` and of `Ext^k(Δ_m, Δ_ℓ)`.
//!
//! Points of `ℤ⁴` are written `(s, j₀, k₀, t)` and points of `ℤ⁷`
//! `(s, i, j, k, a, b, t)`. The small polytopes `𝒫_𝔠`, `𝒫₀`, `𝒫_M`, `𝒫_M̄`
//! are lifted to `ℤ⁷` through the sets `ℳ₁…ℳ₄` and the grading shift
//! [`convert_ijk`]; the result coincides with the disjoint union of the three
//! explicit families `𝒮₁`, `𝒮₂`, `𝒮₃` (checked by [`verify_decomposition`]).
//!
//! A basis vector of `Ext^k(Δ_m, Δ_ℓ)` is a chain `(v_1, …, v_q)` of
//! elements of `𝒮₁ ∪ 𝒮₂ ∪ 𝒮₃` with `i_1 = 0`, `i_g = j_{g-1}`, and
//! `Σ k_g = k`. Two independent enumerators produce these chains:
//! [`enumerate_basis`] chains fibers depth-first, and [`enumerate_cases`]
//! walks the `(u_g, c_g)` parameterization of the admissible case shapes.

mod basis;
mod cases;
mod decomposition;

use std::fmt;

pub use basis::{count_basis, enumerate_basis, enumerate_upsilon};
pub use cases::enumerate_cases;
pub use decomposition::{verify_decomposition, DecompositionReport};

use crate::digits::Prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolytopeElement4 {
    pub s: i64,
    pub j0: i64,
    pub k0: i64,
    pub t: i64,
}

impl PolytopeElement4 {
    pub fn new(s: i64, j0: i64, k0: i64, t: i64) -> Self {
        PolytopeElement4 { s, j0, k0, t }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpsilonElement {
    pub s: i64,
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub a: i64,
    pub b: i64,
    pub t: i64,
}

impl UpsilonElement {
    pub fn new(s: i64, i: i64, j: i64, k: i64, a: i64, b: i64, t: i64) -> Self {
        UpsilonElement {
            s,
            i,
            j,
            k,
            a,
            b,
            t,
        }
    }
}

impl fmt::Display for UpsilonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{},{})",
            self.s, self.i, self.j, self.k, self.a, self.b, self.t
        )
    }
}

/// Which of the three families an element of `𝒫_{Υ≤1}` belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetTag {
    S1,
    S2,
    S3,
}

/// One basis vector of `Ext^k(Δ_m, Δ_ℓ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisTuple(pub Vec<UpsilonElement>);

impl BasisTuple {
    pub fn elements(&self) -> &[UpsilonElement] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|v| v.k).sum()
    }

    /// `i_1 = 0` and `i_g = j_{g-1}`.
    pub fn is_chained(&self) -> bool {
        let mut previous_j = 0;
        for v in &self.0 {
            if v.i != previous_j {
                return false;
            }
            previous_j = v.j;
        }
        true
    }

    /// The shape `(x_1, …, x_q)` with `v_g ∈ 𝒮_{x_g}`.
    pub fn shape(&self, p: Prime) -> Option<Vec<SetTag>> {
        self.0.iter().map(|v| classify(p, v)).collect()
    }
}

impl fmt::Display for BasisTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

pub fn in_p_c(p: Prime, e: PolytopeElement4) -> bool {
    let PolytopeElement4 { s, j0, k0, t } = e;
    1 <= s
        && s <= t
        && t <= p.get()
        && (0..=1).contains(&(j0 + k0))
        && t - s == j0 + 2 * k0
        && (s != t || (j0 == 0 && k0 == 0))
}

pub fn in_p_0(p: Prime, e: PolytopeElement4) -> bool {
    let PolytopeElement4 { s, j0, k0, t } = e;
    let p = p.get();
    (1..=p).contains(&s)
        && (1..=p).contains(&t)
        && s + t == p + 1
        && j0 == 0
        && k0 == 0
        && !(s == p && t == 1)
}

pub fn in_p_m(p: Prime, e: PolytopeElement4) -> bool {
    let PolytopeElement4 { s, j0, k0, t } = e;
    let p = p.get();
    (1..=p).contains(&s)
        && (1..=p).contains(&t)
        && j0 + 2 * k0 + 2 == t - 1 - s + p
        && (0..=1).contains(&(j0 + k0 + 2))
}

pub fn in_p_mbar(p: Prime, e: PolytopeElement4) -> bool {
    in_p_m(p, e) && e != PolytopeElement4::new(p.get(), 0, -1, 1)
}

/// Grading shift carrying `(j₀, k₀, a, b)` to `(i, j, k)`; requires `a >= b - 1`.
pub fn convert_ijk(p: Prime, j0: i64, k0: i64, a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a < b - 1 {
        return Err(Error::Domain(format!("need a >= b - 1, got a={a}, b={b}")));
    }
    let p = p.get();
    let i = -a - b;
    let (j, k) = if a > b {
        (j0 - (a - b - 1) * p + 1, k0 + (a - b - 1) * (p - 1))
    } else if a == b {
        (j0, k0)
    } else {
        (j0 + 1, k0)
    };
    Ok((i, j, k))
}

pub fn in_s1(p: Prime, v: &UpsilonElement) -> bool {
    let pp = p.get();
    let UpsilonElement {
        s,
        i,
        j,
        k,
        a,
        b,
        t,
    } = *v;
    if !((1..=pp).contains(&s) && (1..=pp).contains(&t) && a >= b && b >= 0 && i == -a - b) {
        return false;
    }
    let c = a - b;
    let w = t - s;
    if c == 0 && w < 0 {
        return false;
    }
    (0..=1).any(|u| {
        j == -pp * c - w + 2 * u
            && k == (pp - 1) * c + w - u
            && !(u == 1 && w == 0 && c == 0)
            && !(u == 1 && c == 1 && w < 2 - pp)
    })
}

pub fn in_s2(p: Prime, v: &UpsilonElement) -> bool {
    let pp = p.get();
    (1..=pp - 1).contains(&v.s)
        && v.t == pp + 1 - v.s
        && v.a >= 0
        && v.b == v.a + 1
        && v.i == -2 * v.a - 1
        && v.j == 1
        && v.k == 0
}

pub fn in_s3(p: Prime, v: &UpsilonElement) -> bool {
    let pp = p.get();
    (1..=pp).contains(&v.s)
        && v.i == 1
        && v.j == 1
        && v.k == 0
        && v.a == 0
        && v.b == 0
        && v.t == pp + 1 - v.s
}

/// The unique family containing `v`, if any.
pub fn classify(p: Prime, v: &UpsilonElement) -> Option<SetTag> {
    if in_s1(p, v) {
        Some(SetTag::S1)
    } else if in_s2(p, v) {
        Some(SetTag::S2)
    } else if in_s3(p, v) {
        Some(SetTag::S3)
    } else {
        None
    }
}
