//! Planar primitives: points, segments, lines and exact incidence tests.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radical::RadicalSum;
use crate::scalar::GridScalar;

/// A planar point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S> Point<S> {
    pub const fn new(x: S, y: S) -> Self {
        Point { x, y }
    }
}

impl<S: GridScalar> Point<S> {
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(S::from_int(x), S::from_int(y))
    }

    /// The grid node at this position, if both coordinates are integers.
    pub fn as_node(&self) -> Option<Node> {
        Some(Node::new(self.x.to_integer()?, self.y.to_integer()?))
    }

    pub fn translated(&self, dx: &S, dy: &S) -> Self {
        Point::new(self.x.clone() + dx.clone(), self.y.clone() + dy.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl<S: fmt::Display> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A lattice point with integer coordinates; grid nodes are nodes inside
/// `[0, n)²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub x: i64,
    pub y: i64,
}

impl Node {
    pub const fn new(x: i64, y: i64) -> Self {
        Node { x, y }
    }

    pub fn in_grid(&self, n: usize) -> bool {
        let n = n as i64;
        (0..n).contains(&self.x) && (0..n).contains(&self.y)
    }

    pub fn to_point<S: GridScalar>(self) -> Point<S> {
        Point::from_ints(self.x, self.y)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// All nodes of the `n × n` grid in row-major order.
pub fn grid_nodes(n: usize) -> impl Iterator<Item = Node> {
    let n = n as i64;
    (0..n).flat_map(move |y| (0..n).map(move |x| Node::new(x, y)))
}

/// Ordered segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment<S> {
    a: Point<S>,
    b: Point<S>,
}

impl<S: GridScalar> Segment<S> {
    pub fn new(a: Point<S>, b: Point<S>) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &Point<S> {
        &self.a
    }

    pub fn b(&self) -> &Point<S> {
        &self.b
    }

    pub fn line(&self) -> Line<S> {
        Line {
            p: self.a.clone(),
            q: self.b.clone(),
        }
    }

    pub fn reversed(&self) -> Self {
        Segment {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

/// Line through two distinct points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line<S> {
    p: Point<S>,
    q: Point<S>,
}

impl<S: GridScalar> Line<S> {
    pub fn through(p: Point<S>, q: Point<S>) -> Result<Self> {
        if p == q {
            return Err(Error::DegenerateLine);
        }
        Ok(Line { p, q })
    }

    pub fn p(&self) -> &Point<S> {
        &self.p
    }

    pub fn q(&self) -> &Point<S> {
        &self.q
    }

    pub fn contains(&self, r: &Point<S>) -> bool {
        cross(&self.p, &self.q, r).is_zero()
    }

    pub fn direction(&self) -> (S, S) {
        (
            self.q.x.clone() - self.p.x.clone(),
            self.q.y.clone() - self.p.y.clone(),
        )
    }

    /// `dy/dx`, or `None` for a vertical line.
    pub fn slope(&self) -> Option<S> {
        let (dx, dy) = self.direction();
        (!dx.is_zero()).then(|| dy / dx)
    }

    /// Whether two lines describe the same set of points.
    pub fn coincides(&self, other: &Line<S>) -> bool {
        self.contains(&other.p) && self.contains(&other.q)
    }
}

/// Outcome of intersecting two lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crossing<S> {
    At(Point<S>),
    Parallel,
    Coincident,
}

/// z-component of `(a − o) × (b − o)`.
pub fn cross<S: GridScalar>(o: &Point<S>, a: &Point<S>, b: &Point<S>) -> S {
    (a.x.clone() - o.x.clone()) * (b.y.clone() - o.y.clone())
        - (a.y.clone() - o.y.clone()) * (b.x.clone() - o.x.clone())
}

fn dot<S: GridScalar>(o: &Point<S>, a: &Point<S>, b: &Point<S>) -> S {
    (a.x.clone() - o.x.clone()) * (b.x.clone() - o.x.clone())
        + (a.y.clone() - o.y.clone()) * (b.y.clone() - o.y.clone())
}

fn between<S: GridScalar>(v: &S, a: &S, b: &S) -> bool {
    if a <= b {
        a <= v && v <= b
    } else {
        b <= v && v <= a
    }
}

/// Whether `p` lies on the closed segment `s`.
pub fn point_on_segment<S: GridScalar>(p: &Point<S>, s: &Segment<S>) -> bool {
    cross(&s.a, &s.b, p).is_zero() && between(&p.x, &s.a.x, &s.b.x) && between(&p.y, &s.a.y, &s.b.y)
}

/// Whether `p` lies strictly between the endpoints of `s`.
pub fn point_inside_segment<S: GridScalar>(p: &Point<S>, s: &Segment<S>) -> bool {
    *p != s.a && *p != s.b && point_on_segment(p, s)
}

/// Whether the carrier lines of two segments coincide.
pub fn segments_collinear<S: GridScalar>(s1: &Segment<S>, s2: &Segment<S>) -> bool {
    cross(&s1.a, &s1.b, &s2.a).is_zero() && cross(&s1.a, &s1.b, &s2.b).is_zero()
}

/// Intersection of two lines.
pub fn line_intersection<S: GridScalar>(l1: &Line<S>, l2: &Line<S>) -> Crossing<S> {
    let (d1x, d1y) = l1.direction();
    let (d2x, d2y) = l2.direction();
    let den = d1x.clone() * d2y.clone() - d1y.clone() * d2x.clone();
    if den.is_zero() {
        return if l1.contains(&l2.p) {
            Crossing::Coincident
        } else {
            Crossing::Parallel
        };
    }
    let wx = l2.p.x.clone() - l1.p.x.clone();
    let wy = l2.p.y.clone() - l1.p.y.clone();
    let t = (wx * d2y - wy * d2x) / den;
    Crossing::At(Point::new(
        l1.p.x.clone() + t.clone() * d1x,
        l1.p.y.clone() + t * d1y,
    ))
}

/// Grid nodes of `[0, n)²` on the closed segment, in order from `a` to `b`.
pub fn lattice_points_on_segment<S: GridScalar>(s: &Segment<S>, n: usize) -> Vec<Node> {
    let (a, b) = (&s.a, &s.b);
    let dx = b.x.clone() - a.x.clone();
    let upper = n as i64;
    let mut out = Vec::new();
    if dx.is_zero() {
        let Some(x) = a.x.to_integer() else {
            return out;
        };
        if !(0..upper).contains(&x) {
            return out;
        }
        for y in axis_range(&a.y, &b.y, upper) {
            out.push(Node::new(x, y));
        }
        return out;
    }
    let slope = (b.y.clone() - a.y.clone()) / dx;
    for x in axis_range(&a.x, &b.x, upper) {
        let y = a.y.clone() + (S::from_int(x) - a.x.clone()) * slope.clone();
        if let Some(y) = y.to_integer() {
            if (0..upper).contains(&y) {
                out.push(Node::new(x, y));
            }
        }
    }
    out
}

/// Integers of `[0, upper)` within the closed range spanned by `from..to`, in
/// the direction of travel.
fn axis_range<S: GridScalar>(from: &S, to: &S, upper: i64) -> Vec<i64> {
    let mut values: Vec<i64> = (0..upper)
        .filter(|&v| between(&S::from_int(v), from, to))
        .collect();
    if to < from {
        values.reverse();
    }
    values
}

/// Squared Euclidean length.
pub fn squared_length<S: GridScalar>(s: &Segment<S>) -> S {
    dot(&s.a, &s.b, &s.b)
}

/// Exact Euclidean length of a segment whose squared length is rational.
pub fn segment_length<S: GridScalar>(s: &Segment<S>) -> Result<RadicalSum> {
    let sq = squared_length(s);
    match sq.to_rational() {
        Some(q) => RadicalSum::sqrt_of(&q),
        None => Err(Error::UnsupportedRadical(format!("{sq:?}"))),
    }
}

/// The eight symmetries of the square `[0, n−1]²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dihedral {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipX,
    FlipY,
    Diagonal,
    AntiDiagonal,
}

impl Dihedral {
    pub const ALL: [Dihedral; 8] = [
        Dihedral::Identity,
        Dihedral::Rot90,
        Dihedral::Rot180,
        Dihedral::Rot270,
        Dihedral::FlipX,
        Dihedral::FlipY,
        Dihedral::Diagonal,
        Dihedral::AntiDiagonal,
    ];

    /// Applies the symmetry, keeping the grid `[0, n−1]²` in place.
    pub fn apply<S: GridScalar>(self, p: &Point<S>, n: usize) -> Point<S> {
        let m = S::from_int(n as i64 - 1);
        let (x, y) = (p.x.clone(), p.y.clone());
        let (nx, ny) = match self {
            Dihedral::Identity => (x, y),
            Dihedral::Rot90 => (m - y, x),
            Dihedral::Rot180 => (m.clone() - x, m - y),
            Dihedral::Rot270 => (y, m - x),
            Dihedral::FlipX => (m - x, y),
            Dihedral::FlipY => (x, m - y),
            Dihedral::Diagonal => (y, x),
            Dihedral::AntiDiagonal => (m.clone() - y, m - x),
        };
        Point::new(nx, ny)
    }
}
