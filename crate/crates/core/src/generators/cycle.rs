//! Covering cycles for even grid sizes.

use crate::chain::PolygonalChain;
use crate::error::{Error, Result};
use crate::generators::catalog;
use crate::scalar::GridScalar;

/// A covering cycle with the minimum number of edges for even `n`.
pub fn covering_cycle_even<S: GridScalar>(n: usize) -> Result<PolygonalChain<S>> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Domain(format!("covering cycles are built for even n ≥ 2, got {n}")));
    }
    match n {
        2 => catalog::explicit_chain("cycle-c2"),
        4 => catalog::explicit_chain("cycle-c4"),
        _ => Err(Error::UnimplementedPattern(format!(
            "no certified covering cycle pattern for n = {n}"
        ))),
    }
}
