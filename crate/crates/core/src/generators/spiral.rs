//! Covering paths built from two triangular spirals joined by a bridge edge,
//! and the one-ring extension used when `n ≡ 0 (mod 3)`.

use serde::Serialize;

use crate::chain::{ChainKind, PolygonalChain};
use crate::error::{Error, Result};
use crate::generators::{catalog, certifies};
use crate::geometry::{line_intersection, Crossing, Line, Node, Point};
use crate::scalar::GridScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpiralKind {
    /// Starts at `(0,0)` and covers the nodes with `x + y ≤ n − 2`.
    Bottom,
    /// Starts at `(n−1,n−1)` and covers the nodes with `x + y ≥ n − 1`.
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpiralParams {
    pub n: usize,
    pub kind: SpiralKind,
}

impl SpiralParams {
    pub fn new(n: usize, kind: SpiralKind) -> Result<Self> {
        if n < 4 {
            return Err(Error::Domain(format!("triangular spirals need n ≥ 4, got {n}")));
        }
        Ok(SpiralParams { n, kind })
    }

    /// Number of edges of the spiral.
    pub fn edge_budget(&self) -> usize {
        match self.kind {
            SpiralKind::Bottom => self.n - 2,
            SpiralKind::Top => self.n - 1,
        }
    }
}

/// The triangular spiral fragment as an open chain on the `n × n` grid.
pub fn triangular_spiral<S: GridScalar>(params: SpiralParams) -> Result<PolygonalChain<S>> {
    let n = params.n as i64;
    let len = params.edge_budget() + 1;
    let mut v = Vec::with_capacity(len + 2);
    let mut t = 0i64;
    match params.kind {
        SpiralKind::Bottom => {
            v.push((0, 0));
            while v.len() < len {
                v.extend([(n - 2 - 2 * t, t), (t, n - 2 - 2 * t), (t, t + 1)]);
                t += 1;
            }
        }
        SpiralKind::Top => {
            v.push((n - 1, n - 1));
            while v.len() < len {
                v.extend([(2 * t, n - 1 - t), (n - 1 - t, 2 * t), (n - 1 - t, n - 2 - t)]);
                t += 1;
            }
        }
    }
    v.truncate(len);
    PolygonalChain::from_ints(params.n, &v, ChainKind::Unknown)
}

/// The node each spiral misses: `P₁` for the bottom one, `P₂` for the top.
pub fn missed_points(n: usize) -> Result<(Node, Node)> {
    if n < 4 {
        return Err(Error::Domain(format!("missed points need n ≥ 4, got {n}")));
    }
    let n = n as i64;
    let p1 = Node::new((n - 2) / 3, n / 3);
    let j = n / 3;
    let p2 = match n % 3 {
        1 => Node::new(2 * j, 2 * j),
        2 => Node::new(2 * j + 1, 2 * j),
        _ => Node::new(2 * j, 2 * j - 1),
    };
    Ok((p1, p2))
}

/// Orientation of the two spirals in an assembled path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionConfig {
    /// The bottom spiral is walked from its inner end, so its first edge is
    /// the one extended to the bridge.
    pub bottom_reversed: bool,
    /// The top spiral is walked from its inner end, so its last edge is the
    /// one extended to the bridge.
    pub top_reversed: bool,
}

/// How the two spirals are joined through the missed points.
#[derive(Clone, Debug, PartialEq)]
pub struct BridgeData<S> {
    pub p1: Node,
    pub p2: Node,
    /// The line through `p1` and `p2`.
    pub line_r: Line<S>,
    pub junction_b: Point<S>,
    pub junction_u: Point<S>,
    pub extension: ExtensionConfig,
}

const CONFIGS: [ExtensionConfig; 4] = [
    ExtensionConfig { bottom_reversed: false, top_reversed: false },
    ExtensionConfig { bottom_reversed: false, top_reversed: true },
    ExtensionConfig { bottom_reversed: true, top_reversed: false },
    ExtensionConfig { bottom_reversed: true, top_reversed: true },
];

/// Tries every spiral orientation and returns the first bridged chain that
/// certifies as a covering path.
fn bridged_path<S: GridScalar>(n: usize) -> Result<(PolygonalChain<S>, BridgeData<S>)> {
    let bottom = triangular_spiral::<S>(SpiralParams::new(n, SpiralKind::Bottom)?)?;
    let top = triangular_spiral::<S>(SpiralParams::new(n, SpiralKind::Top)?)?;
    let (p1, p2) = missed_points(n)?;
    let line_r = Line::through(p1.to_point(), p2.to_point())?;

    for cfg in CONFIGS {
        let b = if cfg.bottom_reversed { bottom.reversed() } else { bottom.clone() };
        let u = if cfg.top_reversed { top.reversed() } else { top.clone() };
        let (bv, uv) = (b.vertices(), u.vertices());
        let b_last = Line::through(bv[bv.len() - 2].clone(), bv[bv.len() - 1].clone())?;
        let u_first = Line::through(uv[0].clone(), uv[1].clone())?;
        let (Crossing::At(jb), Crossing::At(ju)) = (
            line_intersection(&b_last, &line_r),
            line_intersection(&u_first, &line_r),
        ) else {
            continue;
        };
        if jb == ju {
            continue;
        }
        let mut vertices = bv[..bv.len() - 1].to_vec();
        vertices.push(jb.clone());
        vertices.push(ju.clone());
        vertices.extend_from_slice(&uv[1..]);
        let chain = PolygonalChain::new(n, vertices, ChainKind::Path)?;
        if certifies(&chain, ChainKind::Path) {
            let data = BridgeData {
                p1,
                p2,
                line_r,
                junction_b: jb,
                junction_u: ju,
                extension: cfg,
            };
            return Ok((chain, data));
        }
    }
    Err(Error::ConstructionFailure(format!(
        "no spiral orientation bridges through the missed points for n = {n}"
    )))
}

/// Bridge of the two-spiral path for `n ≥ 4`. Fails when no orientation
/// certifies, which happens for `n ≡ 3 (mod 6)` where the bridge line hits
/// extra nodes.
pub fn bridge_data<S: GridScalar>(n: usize) -> Result<BridgeData<S>> {
    bridged_path(n).map(|(_, d)| d)
}

/// A covering path of the `n × n` grid with `2(n−1)` edges (3 for `n = 2`,
/// 1 for `n = 1`).
pub fn assemble_path<S: GridScalar>(n: usize) -> Result<PolygonalChain<S>> {
    match n {
        0 => Err(Error::Domain("grid size must be at least 1".into())),
        1 => catalog::explicit_chain("small-p1"),
        2 => catalog::explicit_chain("small-p2"),
        3 => catalog::explicit_chain("small-p3"),
        4 => catalog::explicit_chain("small-p4"),
        _ if n % 3 == 0 => mixed_spiral_extend(&assemble_path(n - 1)?),
        _ => bridged_path(n).map(|(c, _)| c),
    }
}

fn signum<S: GridScalar>(v: S) -> i64 {
    if v.is_zero() {
        0
    } else if v.is_negative_value() {
        -1
    } else {
        1
    }
}

/// Extends a minimal covering path of the `n × n` grid to one of the
/// `(n+1) × (n+1)` grid by adding a row and a column on two sides.
///
/// The terminal edge (at either end) is lengthened to the new row (or
/// column), then two axis-aligned edges sweep the new row and column. The
/// result is translated back into `[0, n]²`.
pub fn mixed_spiral_extend<S: GridScalar>(chain: &PolygonalChain<S>) -> Result<PolygonalChain<S>> {
    let n = chain.n();
    if n % 3 == 0 {
        return Err(Error::Domain(format!(
            "mixed spiral extension takes n ≢ 0 (mod 3), got {n}"
        )));
    }
    if !certifies(chain, ChainKind::Path) {
        return Err(Error::Domain(
            "mixed spiral extension needs a minimal covering path".into(),
        ));
    }
    let ni = n as i64;
    let int = |v: i64| S::from_int(v);
    for oriented in [chain.clone(), chain.reversed()] {
        let vs = oriented.vertices();
        let (w, v) = (&vs[vs.len() - 2], &vs[vs.len() - 1]);
        let terminal = Line::through(w.clone(), v.clone())?;
        for sx in [-1, ni] {
            for sy in [-1, ni] {
                for row_first in [true, false] {
                    let (guide, corner, far) = if row_first {
                        (
                            Line::through(Point::new(int(0), int(sy)), Point::new(int(1), int(sy)))?,
                            Point::new(int(sx), int(sy)),
                            Point::new(int(sx), int(if sy == ni { 0 } else { ni - 1 })),
                        )
                    } else {
                        (
                            Line::through(Point::new(int(sx), int(0)), Point::new(int(sx), int(1)))?,
                            Point::new(int(sx), int(sy)),
                            Point::new(int(if sx == ni { 0 } else { ni - 1 }), int(sy)),
                        )
                    };
                    let Crossing::At(a) = line_intersection(&terminal, &guide) else {
                        continue;
                    };
                    // Only lengthen the terminal edge, never shorten it.
                    let along = (v.x.clone() - w.x.clone()) * (a.x.clone() - v.x.clone())
                        + (v.y.clone() - w.y.clone()) * (a.y.clone() - v.y.clone());
                    if signum(along) < 0 {
                        continue;
                    }
                    let mut out = vs.to_vec();
                    if a != *v {
                        out.pop();
                        out.push(a);
                    }
                    out.push(corner);
                    out.push(far);
                    let (dx, dy) = (i64::from(sx == -1), i64::from(sy == -1));
                    let grown = PolygonalChain::new(n + 1, out, ChainKind::Path)?.translated(dx, dy);
                    if certifies(&grown, ChainKind::Path) {
                        return Ok(grown);
                    }
                }
            }
        }
    }
    Err(Error::ConstructionFailure(format!(
        "no two-edge extension of the n = {n} path certifies"
    )))
}
