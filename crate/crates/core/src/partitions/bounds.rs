//! Floating-point evaluation of the growth bounds for `r_p`, `Z_p`, `A`
//! and the Ext dimension.
//!
//! Series are summed term by term using the ratio of consecutive terms and
//! stop once the terms decrease and fall below [`SERIES_TOLERANCE`] of the
//! running sum. Infinite products stop once a factor is within
//! [`PRODUCT_TOLERANCE`] of 1.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::digits::Prime;
use crate::error::{Error, Result};
use crate::recursion::Count;

/// Relative size of the last series term kept.
pub const SERIES_TOLERANCE: f64 = 1e-15;
/// Distance from 1 below which product factors are dropped.
pub const PRODUCT_TOLERANCE: f64 = 1e-15;
/// Relative slack granted to the float side when comparing with exact counts.
pub const RELATIVE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    SeriesS,
    SeriesT,
    SeriesF,
    FLower,
    FUpper,
    C1,
    C2,
    ZpLower,
    ZpUpper,
    ZpRecursiveUpper,
    RddLower,
    RddUpper,
    XLower,
    XUpper,
    AUpper,
}

impl FormulaId {
    /// Closed-form bounds accepted by [`evaluate`].
    pub const EVALUATORS: [FormulaId; 8] = [
        FormulaId::ZpLower,
        FormulaId::ZpUpper,
        FormulaId::ZpRecursiveUpper,
        FormulaId::RddLower,
        FormulaId::RddUpper,
        FormulaId::XLower,
        FormulaId::XUpper,
        FormulaId::AUpper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::SeriesS => "series_s",
            FormulaId::SeriesT => "series_t",
            FormulaId::SeriesF => "series_f",
            FormulaId::FLower => "f_lower",
            FormulaId::FUpper => "f_upper",
            FormulaId::C1 => "c1",
            FormulaId::C2 => "c2",
            FormulaId::ZpLower => "zp_lower",
            FormulaId::ZpUpper => "zp_upper",
            FormulaId::ZpRecursiveUpper => "zp_recursive_upper",
            FormulaId::RddLower => "rdd_lower",
            FormulaId::RddUpper => "rdd_upper",
            FormulaId::XLower => "x_lower",
            FormulaId::XUpper => "x_upper",
            FormulaId::AUpper => "a_upper",
        }
    }

    /// Whether the formula is stated in terms of `k` (otherwise `d`).
    pub fn takes_k(self) -> bool {
        matches!(
            self,
            FormulaId::XLower | FormulaId::XUpper | FormulaId::AUpper
        )
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::EVALUATORS
            .iter()
            .chain(&[
                FormulaId::SeriesS,
                FormulaId::SeriesT,
                FormulaId::SeriesF,
                FormulaId::FLower,
                FormulaId::FUpper,
                FormulaId::C1,
                FormulaId::C2,
            ])
            .find(|id| id.name() == s)
            .copied()
            .ok_or_else(|| Error::Domain(format!("unknown formula `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub formula: FormulaId,
}

impl BoundValue {
    fn checked(value: f64, formula: FormulaId) -> Result<Self> {
        if value.is_finite() {
            Ok(BoundValue { value, formula })
        } else {
            Err(Error::Domain(format!(
                "{formula} is not finite in double precision"
            )))
        }
    }

    /// `self <= exact`, allowing [`RELATIVE_SLACK`] on the float side.
    pub fn is_below(&self, exact: &Count) -> bool {
        let e = exact.to_f64().unwrap_or(f64::INFINITY);
        self.value * (1.0 - RELATIVE_SLACK) <= e
    }

    /// `exact <= self`, allowing [`RELATIVE_SLACK`] on the float side.
    pub fn is_above(&self, exact: &Count) -> bool {
        let e = exact.to_f64().unwrap_or(f64::INFINITY);
        e <= self.value * (1.0 + RELATIVE_SLACK)
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {:.12e}", self.formula, self.value)
    }
}

/// `Σ_n term_n` with `term_0 = first` and `term_n = term_{n-1} · ratio(n)`.
fn sum_series(first: f64, ratio: impl Fn(u32) -> f64) -> f64 {
    let (mut sum, mut term) = (first, first);
    let mut n = 1;
    loop {
        let r = ratio(n);
        term *= r;
        sum += term;
        if r < 1.0 && term <= SERIES_TOLERANCE * sum {
            return sum;
        }
        n += 1;
    }
}

fn check_x(x: f64) -> Result<()> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "series argument {x} must be finite and >= 0"
        )))
    }
}

/// `S_p(x) = Σ a_n x^n` with `a_n = (2 n! Π_{j<=n} ((p+1)^j + 1))^{-1}`.
pub fn series_s(p: Prime, x: f64) -> Result<BoundValue> {
    check_x(x)?;
    let base = (p.get() + 1) as f64;
    let v = sum_series(0.5, |n| x / (f64::from(n) * (base.powi(n as i32) + 1.0)));
    BoundValue::checked(v, FormulaId::SeriesS)
}

/// `T_p(x) = Σ b_n x^n` with `b_n = (n! Π_{j<=n} (p^j - 1))^{-1}`.
pub fn series_t(p: Prime, x: f64) -> Result<BoundValue> {
    check_x(x)?;
    let base = p.get() as f64;
    let v = sum_series(1.0, |n| x / (f64::from(n) * (base.powi(n as i32) - 1.0)));
    BoundValue::checked(v, FormulaId::SeriesT)
}

/// `(S_p(x), T_p(x))`.
pub fn sandwich_s_t(p: Prime, x: f64) -> Result<(BoundValue, BoundValue)> {
    Ok((series_s(p, x)?, series_t(p, x)?))
}

/// `F_q(x) = Σ x^n / (n! q^{n(n+1)/2})`.
pub fn f_q_eval(q_base: i64, x: f64) -> Result<BoundValue> {
    check_x(x)?;
    if q_base < 1 {
        return Err(Error::Domain(format!("F_q needs q >= 1, got {q_base}")));
    }
    let q = q_base as f64;
    let v = sum_series(1.0, |n| x / (f64::from(n) * q.powi(n as i32)));
    BoundValue::checked(v, FormulaId::SeriesF)
}

/// `x^{(log_q x - 3)/2} / Γ(log_q x + 1) <= F_q(x) <= e q^{1/8} x^{(log_q x - 1)/2}`
/// for `x >= q >= 2`.
pub fn f_bounds(q_base: i64, x: f64) -> Result<(BoundValue, BoundValue)> {
    if q_base < 2 || !x.is_finite() || x < q_base as f64 {
        return Err(Error::Domain(format!(
            "F bounds need x >= q >= 2, got q = {q_base}, x = {x}"
        )));
    }
    let q = q_base as f64;
    let lq = x.ln() / q.ln();
    let lower = (0.5 * (lq - 3.0) * x.ln() - libm::lgamma(lq + 1.0)).exp();
    let upper = std::f64::consts::E * q.powf(0.125) * x.powf(0.5 * (lq - 1.0));
    Ok((
        BoundValue::checked(lower, FormulaId::FLower)?,
        BoundValue::checked(upper, FormulaId::FUpper)?,
    ))
}

/// `C_1 = ½ Π (1 - 1/((p+1)^j + 1))` and `C_2 = Π (1 + 1/(p^j - 1))`.
pub fn constants_c1_c2(p: Prime) -> (BoundValue, BoundValue) {
    let product = |base: f64, shift: f64, sign: f64| {
        let mut acc = 1.0;
        let mut power = 1.0;
        loop {
            power *= base;
            let delta = 1.0 / (power + shift);
            acc *= 1.0 + sign * delta;
            if delta < PRODUCT_TOLERANCE {
                return acc;
            }
        }
    };
    let pp = p.get() as f64;
    let c1 = 0.5 * product(pp + 1.0, 1.0, -1.0);
    let c2 = product(pp, -1.0, 1.0);
    (
        BoundValue {
            value: c1,
            formula: FormulaId::C1,
        },
        BoundValue {
            value: c2,
            formula: FormulaId::C2,
        },
    )
}

fn log_base(base: f64, x: f64) -> f64 {
    x.ln() / base.ln()
}

fn need(formula: FormulaId, n: i64, min: i64) -> Result<()> {
    if n < min {
        let var = if formula.takes_k() { "k" } else { "d" };
        Err(Error::Domain(format!(
            "{formula} needs {var} >= {min}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// `U(0) = 1`, `U(d) = 1 + (log_p d + 2) Σ_{f<d} U(f)`: an upper bound for `Z_p(d)`.
pub fn zp_recursive_upper(p: Prime, d: i64) -> Result<BoundValue> {
    need(FormulaId::ZpRecursiveUpper, d, 0)?;
    let pp = p.get() as f64;
    let (mut last, mut prefix) = (1.0f64, 1.0f64);
    for g in 1..=d {
        last = 1.0 + (log_base(pp, g as f64) + 2.0) * prefix;
        prefix += last;
    }
    BoundValue::checked(last, FormulaId::ZpRecursiveUpper)
}

/// Evaluates one closed-form bound at `n` (`d` or `k`, per [`FormulaId::takes_k`]).
pub fn evaluate(formula: FormulaId, p: Prime, n: i64) -> Result<BoundValue> {
    let pp = p.get() as f64;
    let x = n as f64;
    let (c1, c2) = constants_c1_c2(p);
    let lower_shape = |exp_shift: f64, halve_all: bool| {
        let l = log_base(pp + 1.0, x);
        let e = if halve_all {
            0.5 * (l - 3.0)
        } else {
            0.5 * l - exp_shift
        };
        c1.value * (e * x.ln() - libm::lgamma(l + 1.0)).exp()
    };
    let value = match formula {
        FormulaId::ZpLower | FormulaId::RddLower => {
            need(formula, n, 1)?;
            lower_shape(0.0, true)
        }
        FormulaId::ZpUpper => {
            need(formula, n, 0)?;
            (log_base(pp, x + 1.0) + 3.0).powf(x)
        }
        FormulaId::ZpRecursiveUpper => return zp_recursive_upper(p, n),
        FormulaId::RddUpper => {
            need(formula, n, 1)?;
            c2.value * x.powf(0.5 * (log_base(pp, x) - 1.0))
        }
        FormulaId::XLower => {
            need(formula, n, 10)?;
            lower_shape(6.0, false)
        }
        FormulaId::XUpper => {
            need(formula, n, 0)?;
            (x + 4.0).powi(3) * (32.0 * log_base(pp, x + 1.0) + 96.0).powf(x)
        }
        FormulaId::AUpper => {
            need(formula, n, 0)?;
            (x + 1.0).powi(2) * (32.0 * log_base(pp, x + 1.0) + 96.0).powf(x)
        }
        other => {
            return Err(Error::Domain(format!("{other} is not a closed-form bound")));
        }
    };
    BoundValue::checked(value, formula)
}

/// An `ℓ` with `dim Ext^k(Δ_m, Δ_ℓ)` large: `p >= 3`:
/// `m + 2p(p²-1)⌊k/5⌋ + 2(p-1)⌊k/2⌋`; `p = 2`: `m + 16⌊k/5⌋ + k`.
pub fn lower_bound_witness(p: Prime, k: i64, m: i64) -> Result<i64> {
    crate::error::check_range("k", k, 0, i64::MAX)?;
    crate::error::check_range("m", m, 1, i64::MAX)?;
    let pp = p.get();
    let shift = if pp == 2 {
        (16i64).checked_mul(k / 5).and_then(|x| x.checked_add(k))
    } else {
        let big = pp
            .checked_mul(pp)
            .and_then(|x| x.checked_sub(1))
            .and_then(|x| x.checked_mul(2 * pp))
            .and_then(|x| x.checked_mul(k / 5));
        big.and_then(|x| x.checked_add(2 * (pp - 1) * (k / 2)))
    };
    shift
        .and_then(|s| s.checked_add(m))
        .ok_or(Error::Overflow("witness index"))
}
