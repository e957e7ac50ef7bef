//! Block positions of the standard modules with highest weights `λ`, `μ`
//! (restricted to `SL₂`).
//!
//! The `λ`-derived index is reported as `e` and the `μ`-derived index as
//! `m`, so `(m, e)` feeds directly into `Ext^k(Δ_m, Δ_e)`.

use crate::digits::Prime;
use crate::error::{check_range, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightPair {
    pub lambda: i64,
    pub mu: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockPosition {
    pub m: i64,
    pub e: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockResult {
    Position(BlockPosition),
    /// Different blocks: every Ext-group vanishes.
    NotSameBlock,
}

impl BlockResult {
    pub fn position(self) -> Option<BlockPosition> {
        match self {
            BlockResult::Position(pos) => Some(pos),
            BlockResult::NotSameBlock => None,
        }
    }
}

pub fn block_position(p: Prime, wp: WeightPair) -> Result<BlockResult> {
    check_range("λ", wp.lambda, 0, i64::MAX)?;
    check_range("μ", wp.mu, 0, i64::MAX)?;
    let pp = p.get();
    let (mut lambda, mut mu) = (wp.lambda, wp.mu);
    loop {
        let (a, b) = (lambda / pp, mu / pp);
        let (i, j) = (lambda % pp, mu % pp);
        match (i == pp - 1, j == pp - 1) {
            (true, true) => {
                lambda = a;
                mu = b;
            }
            (false, false) => {
                let same = (a - b) % 2 == 0;
                let linked = if same { i == j } else { i == pp - 2 - j };
                return Ok(if linked {
                    BlockResult::Position(BlockPosition { m: b + 1, e: a + 1 })
                } else {
                    BlockResult::NotSameBlock
                });
            }
            _ => return Ok(BlockResult::NotSameBlock),
        }
    }
}
