//! Square-spiral growth: circuits closed by extending the first edge, and
//! trails of short total length.

use crate::chain::{ChainKind, PolygonalChain};
use crate::error::{Error, Result};
use crate::generators::{catalog, certifies};
use crate::geometry::{line_intersection, Crossing, Line, Node, Point};
use crate::scalar::GridScalar;

fn node_of<S: GridScalar>(p: &Point<S>) -> Result<Node> {
    p.as_node()
        .ok_or_else(|| Error::ConstructionFailure(format!("growth needs an integer endpoint, got {:?}", p)))
}

/// Grows an open chain whose last edge is axis-parallel and ends at a corner
/// of the window `[lo, hi]²`, one ring per step, until the window side is
/// `n`.
///
/// Each step lengthens the last edge by one unit and adds two edges of length
/// `m` (the current side) sweeping the new row and column. Returns the grown
/// vertices, untranslated, and the lower-left corner of the final window.
pub fn square_spiral_grow<S: GridScalar>(
    vertices: &[Point<S>],
    lo: Node,
    hi: Node,
    n: usize,
) -> Result<(Vec<Point<S>>, Node)> {
    if vertices.len() < 2 {
        return Err(Error::MalformedChain("growth needs at least one edge".into()));
    }
    let (mut lo, mut hi) = (lo, hi);
    let mut vs = vertices.to_vec();
    let mut m = hi.x - lo.x + 1;
    while m < n as i64 {
        let v = node_of(&vs[vs.len() - 1])?;
        let w = node_of(&vs[vs.len() - 2])?;
        let d = ((v.x - w.x).signum(), (v.y - w.y).signum());
        let at_corner = (v.x == lo.x || v.x == hi.x) && (v.y == lo.y || v.y == hi.y);
        if (d.0 != 0 && d.1 != 0) || !at_corner {
            return Err(Error::ConstructionFailure(
                "last edge must be axis-parallel and end at a window corner".into(),
            ));
        }
        let p0 = Node::new(v.x + d.0, v.y + d.1);
        let e = if d.0 == 0 {
            (if v.x == lo.x { 1 } else { -1 }, 0)
        } else {
            (0, if v.y == lo.y { 1 } else { -1 })
        };
        let p1 = Node::new(p0.x + m * e.0, p0.y + m * e.1);
        let p2 = Node::new(p1.x - m * d.0, p1.y - m * d.1);
        vs.pop();
        vs.extend([p0, p1, p2].map(Node::to_point));
        lo = Node::new(lo.x.min(p0.x).min(p1.x), lo.y.min(p0.y).min(p1.y));
        hi = Node::new(hi.x.max(p0.x).max(p1.x), hi.y.max(p0.y).max(p1.y));
        m += 1;
    }
    Ok((vs, lo))
}

fn shift<S: GridScalar>(vs: Vec<Point<S>>, lo: Node) -> Vec<Point<S>> {
    let (dx, dy) = (S::from_int(-lo.x), S::from_int(-lo.y));
    vs.into_iter().map(|p| p.translated(&dx, &dy)).collect()
}

/// A covering circuit with `2(n−1)` edges (3 for `n = 2`).
///
/// For `n ≥ 4` a seed trail (`n = 4` for even `n`, `n = 5` for odd) is grown
/// by the square spiral and closed where the line of its last edge meets the
/// line of its first edge; the start vertex moves to that point.
pub fn covering_circuit<S: GridScalar>(n: usize) -> Result<PolygonalChain<S>> {
    match n {
        0 => return Err(Error::Domain("grid size must be at least 1".into())),
        1 | 3 => {
            return Err(Error::Impossible(format!(
                "no covering circuit of the {n}x{n} grid has the minimum number of edges"
            )))
        }
        2 => return catalog::explicit_chain::<S>("cycle-c2").map(|c| c.with_kind(ChainKind::Circuit)),
        _ => {}
    }
    let (seed, n0) = if n % 2 == 0 { ("trail-t4", 4) } else { ("trail-t5", 5) };
    let seed = catalog::explicit_chain::<S>(seed)?.reversed();
    let hi = Node::new(n0 - 1, n0 - 1);
    let (vs, lo) = square_spiral_grow(seed.vertices(), Node::new(0, 0), hi, n)?;
    let last = Line::through(vs[vs.len() - 2].clone(), vs[vs.len() - 1].clone())?;
    let first = Line::through(vs[0].clone(), vs[1].clone())?;
    let Crossing::At(x) = line_intersection(&last, &first) else {
        return Err(Error::ConstructionFailure(format!("first and last edges are parallel for n = {n}")));
    };
    let mut closed = Vec::with_capacity(vs.len());
    closed.push(x.clone());
    closed.extend_from_slice(&vs[1..vs.len() - 1]);
    closed.push(x);
    let chain = PolygonalChain::new(n, shift(closed, lo), ChainKind::Circuit)?;
    if !certifies(&chain, ChainKind::Circuit) {
        return Err(Error::ConstructionFailure(format!("circuit for n = {n} does not certify")));
    }
    Ok(chain)
}

/// A minimum-link covering trail whose total length meets the best known
/// bound: `3`, `5+5√2`, `13+5√2`, `20+6√2` for `n = 2..5` and `n²−3+5√2`
/// beyond.
pub fn distance_optimal_trail<S: GridScalar>(n: usize) -> Result<PolygonalChain<S>> {
    let id = match n {
        0 | 1 => return Err(Error::Domain(format!("distance trails need n ≥ 2, got {n}"))),
        2 => "distance-t2",
        3 => "distance-t3",
        4 => "distance-t4",
        5 => "distance-t5",
        _ => {
            let seed = catalog::explicit_chain::<S>("distance-t4")?;
            let (vs, lo) = square_spiral_grow(seed.vertices(), Node::new(0, 0), Node::new(3, 3), n)?;
            let chain = PolygonalChain::new(n, shift(vs, lo), ChainKind::Trail)?;
            if !certifies(&chain, ChainKind::Trail) {
                return Err(Error::ConstructionFailure(format!("trail for n = {n} does not certify")));
            }
            return Ok(chain);
        }
    };
    catalog::explicit_chain(id)
}
