//! A covering path of the 5×5 grid whose endpoints are arbitrarily close.

use num_traits::{Signed, Zero};

use crate::chain::ChainKind;
use crate::error::{Error, Result};
use crate::generators::certifies;
use crate::geometry::{Point, Segment, squared_length};
use crate::scalar::GridScalar;
use crate::{Chain, Rational, Scalar};

/// The 8-edge covering path of the 5×5 grid starting at `(4−ε, 0)` and ending
/// at `(4 − ε/√2, ε/√2)`, on the line `x + y = 4`.
///
/// Closing the gap (extending the first and last edges until they meet at
/// `(4,0)`) gives a covering circuit, but no covering cycle.
pub fn epsilon_path(eps: &Rational) -> Result<Chain> {
    if !eps.is_positive() {
        return Err(Error::Domain(format!("ε must be positive, got {eps}")));
    }
    let q = |a: i64, b: i64| Scalar::ratio(a, b);
    let e = Scalar::from_rational(eps.clone());
    // ε/√2 = (ε/2)·√2
    let e_over_root2 = Scalar::new(Rational::zero(), eps / Rational::from_integer(2.into()));
    let vertices = vec![
        Point::new(q(4, 1) - e, q(0, 1)),
        Point::from_ints(-1, 0),
        Point::new(q(11, 3), q(7, 3)),
        Point::new(q(1, 2), q(11, 2)),
        Point::from_ints(4, -5),
        Point::from_ints(4, 5),
        Point::from_ints(0, 1),
        Point::from_ints(0, 4),
        Point::new(q(4, 1) - e_over_root2.clone(), e_over_root2),
    ];
    let chain = Chain::new(5, vertices, ChainKind::Path)?;
    if !certifies(&chain, ChainKind::Path) {
        return Err(Error::Domain(format!(
            "ε = {eps} is too large for a covering path"
        )));
    }
    Ok(chain)
}

/// Squared distance between the endpoints of a chain.
pub fn epsilon_gap_squared(chain: &Chain) -> Result<Scalar> {
    let seg = Segment::new(chain.first().clone(), chain.last().clone())?;
    Ok(squared_length(&seg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::explicit_chain;
    use crate::geometry::{line_intersection, Crossing, Line};

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn gap_is_exact() {
        let p = epsilon_path(&r(1, 10)).unwrap();
        let want = Scalar::new(r(2, 100), r(-1, 100));
        assert_eq!(epsilon_gap_squared(&p).unwrap(), want);
    }

    #[test]
    fn gap_scales_linearly() {
        let g = |e| epsilon_gap_squared(&epsilon_path(&e).unwrap()).unwrap();
        assert_eq!(g(r(1, 2)) / g(r(1, 4)), Scalar::from_int(4));
    }

    #[test]
    fn rejects_bad_eps() {
        assert!(matches!(epsilon_path(&r(0, 1)), Err(Error::Domain(_))));
        assert!(matches!(epsilon_path(&r(-1, 3)), Err(Error::Domain(_))));
        assert!(matches!(epsilon_path(&r(3, 1)), Err(Error::Domain(_))));
    }

    #[test]
    fn closing_gives_f5() {
        let p = epsilon_path(&r(1, 1000)).unwrap();
        let v = p.vertices();
        let first = Line::through(v[0].clone(), v[1].clone()).unwrap();
        let last = Line::through(v[7].clone(), v[8].clone()).unwrap();
        let Crossing::At(x) = line_intersection(&first, &last) else {
            panic!("edges must meet");
        };
        let mut closed = vec![x.clone()];
        closed.extend_from_slice(&v[1..8]);
        closed.push(x);
        let f5: Chain = explicit_chain("circuit-f5").unwrap();
        assert_eq!(closed, f5.vertices());
    }
}
