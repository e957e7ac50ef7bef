//! Exact dimensions of `Ext^k(Δ_m, Δ_ℓ)` between Weyl modules for `GL₂`
//! in characteristic `p`, with the combinatorial models behind them.
//!
//! * [`digits`]: `p`-adic block coordinates of the indices.
//! * [`polytopes`]: the polytope sets and the basis enumerators.
//! * [`recursion`]: memoized `A`/`B` counts and the dimension formula.
//! * [`partitions`]: `p`-ary partition counts and the growth bounds.
//! * [`weights`]: locating a pair of weights inside a block.

pub mod digits;
pub mod error;
pub mod partitions;
pub mod polytopes;
pub mod recursion;
pub mod weights;

pub use digits::{digits_of, index_of, minimal_q, BlockCoordinates, Prime};
pub use error::{Error, Result};
pub use recursion::{duality_partner, Count, DimBreakdown, Recursion};
