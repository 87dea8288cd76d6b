//! Brute-force check of which grid nodes lie on the bridge line through the
//! two missed points.
//!
//! Works on plain integers so it does not share code with the exact geometry
//! it is meant to cross-check.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::missed_points;
use crate::geometry::Node;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpectedKind {
    /// Only the two missed points.
    Pair,
    /// Five nodes in arithmetic progression (`n ≡ 3 (mod 6)`).
    Five,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionProfile {
    pub n: usize,
    pub residue: usize,
    /// Grid nodes on the line, sorted by `x`.
    pub hits: Vec<Node>,
    pub expected_kind: ExpectedKind,
    /// The nodes the residue class predicts, sorted by `x`.
    pub predicted: Vec<Node>,
}

impl CollisionProfile {
    pub fn matches_prediction(&self) -> bool {
        self.hits == self.predicted
    }

    /// Turns a mismatch into an error.
    pub fn check(&self) -> Result<()> {
        if self.matches_prediction() {
            return Ok(());
        }
        let show = |v: &[Node]| v.iter().map(Node::to_string).collect::<Vec<_>>().join(" ");
        Err(Error::OracleViolation {
            n: self.n,
            detail: format!(
                "predicted {} but found {}",
                show(&self.predicted),
                show(&self.hits)
            ),
        })
    }
}

/// Enumerates the grid nodes on the line through `P₁(n)` and `P₂(n)`.
pub fn collision_profile(n: usize) -> Result<CollisionProfile> {
    let (p1, p2) = missed_points(n)?;
    let (dx, dy) = (p2.x - p1.x, p2.y - p1.y);
    let ni = n as i64;
    let mut hits = Vec::new();
    for x in 0..ni {
        let num = p1.y * dx + (x - p1.x) * dy;
        if num % dx == 0 {
            let y = num / dx;
            if (0..ni).contains(&y) {
                hits.push(Node::new(x, y));
            }
        }
    }
    let (expected_kind, predicted) = if n % 6 == 3 {
        let (a, b) = ((ni + 3) / 6, (ni - 3) / 6);
        let q = (0..5).map(|t| Node::new(p1.x + a * (t - 1), p1.y + b * (t - 1))).collect();
        (ExpectedKind::Five, q)
    } else {
        (ExpectedKind::Pair, vec![p1, p2])
    };
    Ok(CollisionProfile {
        n,
        residue: n % 6,
        hits,
        expected_kind,
        predicted,
    })
}

/// The values `x_k` allowed by the divisibility condition on the bridge line,
/// as `(k, x_k)` pairs with `x_k` in `[0, n)`.
///
/// The line has slope `j/(j+1)` through `P₁`. With `n = 3j+1`, `P₁ = (j−1, j)`
/// and integer `y` forces `x_k = (j+1)k − 2`; with `n = 3j+2`, `P₁ = (j, j)`
/// and it forces `x_k = (j+1)k − 1`.
pub fn divisibility_witness(n: usize) -> Result<Vec<(i64, i64)>> {
    if n < 4 || n % 3 == 0 {
        return Err(Error::Domain(format!(
            "divisibility witness needs n ≥ 4 and n ≢ 0 (mod 3), got {n}"
        )));
    }
    let ni = n as i64;
    let j = ni / 3;
    // The step (j+1) only forces this progression because j and j+1 share
    // no factor.
    assert_eq!((j + 1).gcd(&j), 1);
    let offset = if n % 3 == 1 { 2 } else { 1 };
    Ok((0..=ni)
        .map(|k| (k, (j + 1) * k - offset))
        .filter(|&(_, x)| (0..ni).contains(&x))
        .collect())
}
