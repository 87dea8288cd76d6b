//! Polygonal chains over the grid and their visit semantics.
//!
//! A grid node is *visited* once per connected component of the set of curve
//! parameters at which the traversal sits on it. Because every edge is
//! non-degenerate that set is finite, so a visit is one distinct parameter
//! value: a vertex shared by two consecutive edges is a single visit, an
//! edge-interior crossing is a single visit, and for a closed chain the
//! coincident start and end are the same visit.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ChainDefect, Error, Result};
use crate::geometry::{
    grid_nodes, lattice_points_on_segment, segment_length, segments_collinear, Dihedral, Node,
    Point, Segment,
};
use crate::radical::RadicalSum;
use crate::scalar::GridScalar;

/// The kind of covering object a chain claims to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Trail,
    Path,
    Circuit,
    Cycle,
    #[default]
    Unknown,
}

impl ChainKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ChainKind::Trail => "trail",
            ChainKind::Path => "path",
            ChainKind::Circuit => "circuit",
            ChainKind::Cycle => "cycle",
            ChainKind::Unknown => "unknown",
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trail" => Ok(ChainKind::Trail),
            "path" => Ok(ChainKind::Path),
            "circuit" => Ok(ChainKind::Circuit),
            "cycle" => Ok(ChainKind::Cycle),
            "unknown" => Ok(ChainKind::Unknown),
            other => Err(Error::Parse(format!("unknown chain kind `{other}`"))),
        }
    }
}

/// An ordered vertex sequence drawn over the grid `[0, n)²`.
///
/// Construction only checks the shape (n ≥ 1, at least two vertices);
/// [`PolygonalChain::validate`] checks the edge rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonalChain<S> {
    n: usize,
    vertices: Vec<Point<S>>,
    kind: ChainKind,
}

impl<S: GridScalar> PolygonalChain<S> {
    pub fn new(n: usize, vertices: Vec<Point<S>>, kind: ChainKind) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("grid size must be positive".into()));
        }
        if vertices.len() < 2 {
            return Err(Error::MalformedChain("a chain needs at least two vertices".into()));
        }
        Ok(PolygonalChain { n, vertices, kind })
    }

    pub fn from_ints(n: usize, coords: &[(i64, i64)], kind: ChainKind) -> Result<Self> {
        let vertices = coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        Self::new(n, vertices, kind)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Point<S>] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point<S>> {
        self.vertices
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: ChainKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn first(&self) -> &Point<S> {
        &self.vertices[0]
    }

    pub fn last(&self) -> &Point<S> {
        &self.vertices[self.vertices.len() - 1]
    }

    /// Number of edges.
    pub fn link_length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    /// Edges in traversal order. Fails on a zero-length edge.
    pub fn edges(&self) -> Result<Vec<Segment<S>>> {
        self.vertices
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                Segment::new(w[0].clone(), w[1].clone()).map_err(|_| Error::InvalidChain {
                    defect: ChainDefect::DegenerateEdge,
                    first: i,
                    second: i,
                })
            })
            .collect()
    }

    /// Checks that no edge is degenerate, no two consecutive edges (including
    /// the wrap-around pair of a closed chain) are collinear, and no undirected
    /// edge repeats.
    pub fn validate(&self) -> Result<()> {
        let edges = self.edges()?;
        for (i, pair) in edges.windows(2).enumerate() {
            if segments_collinear(&pair[0], &pair[1]) {
                return Err(Error::InvalidChain {
                    defect: ChainDefect::CollinearConsecutive,
                    first: i,
                    second: i + 1,
                });
            }
        }
        let h = edges.len();
        if self.is_closed() && h >= 2 && segments_collinear(&edges[h - 1], &edges[0]) {
            return Err(Error::InvalidChain {
                defect: ChainDefect::CollinearConsecutive,
                first: h - 1,
                second: 0,
            });
        }
        let mut seen: Vec<(&Point<S>, &Point<S>, usize)> = Vec::with_capacity(h);
        for (i, e) in edges.iter().enumerate() {
            let (a, b) = (e.a(), e.b());
            if let Some(&(_, _, j)) = seen
                .iter()
                .find(|(p, q, _)| (*p == a && *q == b) || (*p == b && *q == a))
            {
                return Err(Error::InvalidChain {
                    defect: ChainDefect::RepeatedEdge,
                    first: j,
                    second: i,
                });
            }
            seen.push((&self.vertices[i], &self.vertices[i + 1], i));
        }
        Ok(())
    }

    /// The same chain traversed backwards.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PolygonalChain {
            n: self.n,
            vertices,
            kind: self.kind,
        }
    }

    /// Moves every vertex by `(dx, dy)`; the grid window stays at `[0, n)²`.
    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        let (dx, dy) = (S::from_int(dx), S::from_int(dy));
        self.map_vertices(|p| p.translated(&dx, &dy))
    }

    pub fn transformed(&self, g: Dihedral) -> Self {
        let n = self.n;
        self.map_vertices(|p| g.apply(p, n))
    }

    pub fn map_vertices(&self, f: impl Fn(&Point<S>) -> Point<S>) -> Self {
        PolygonalChain {
            n: self.n,
            vertices: self.vertices.iter().map(f).collect(),
            kind: self.kind,
        }
    }

    /// Same vertices, judged against a different grid size.
    pub fn with_grid(&self, n: usize) -> Result<Self> {
        Self::new(n, self.vertices.clone(), self.kind)
    }

    /// Exact total Euclidean length.
    pub fn total_length(&self) -> Result<RadicalSum> {
        self.edges()?.iter().map(segment_length).sum()
    }

    /// Floating-point total length, for cross-checks.
    pub fn total_length_f64(&self) -> f64 {
        self.vertices
            .windows(2)
            .map(|w| {
                let (ax, ay) = w[0].to_f64();
                let (bx, by) = w[1].to_f64();
                (bx - ax).hypot(by - ay)
            })
            .sum()
    }

    /// Visit statistics; fails if the chain breaks an edge rule.
    pub fn visit_report(&self) -> Result<VisitReport> {
        self.validate()?;
        let edges = self.edges()?;
        let h = edges.len();
        let closed = self.is_closed();
        let vertex_nodes: Vec<Option<Node>> = self.vertices.iter().map(|v| v.as_node()).collect();

        // Parameter values in half-edge units: vertex k sits at 2k, the
        // interior of edge i at 2i + 1.
        let mut times: BTreeMap<Node, BTreeSet<usize>> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            for node in lattice_points_on_segment(e, self.n) {
                let mut t = if vertex_nodes[i] == Some(node) {
                    2 * i
                } else if vertex_nodes[i + 1] == Some(node) {
                    2 * i + 2
                } else {
                    2 * i + 1
                };
                if closed && t == 2 * h {
                    t = 0;
                }
                times.entry(node).or_default().insert(t);
            }
        }

        let visit_counts: BTreeMap<Node, usize> =
            times.into_iter().map(|(k, v)| (k, v.len())).collect();
        let covered: BTreeSet<Node> = visit_counts.keys().copied().collect();
        let uncovered: BTreeSet<Node> = grid_nodes(self.n).filter(|v| !covered.contains(v)).collect();
        let total_length = self.total_length().ok();
        Ok(VisitReport {
            n: self.n,
            covered,
            visit_counts,
            uncovered,
            is_closed: closed,
            link_length: h,
            total_length,
        })
    }
}

/// What a traversal does to the grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisitReport {
    pub n: usize,
    pub covered: BTreeSet<Node>,
    pub visit_counts: BTreeMap<Node, usize>,
    pub uncovered: BTreeSet<Node>,
    pub is_closed: bool,
    pub link_length: usize,
    /// `None` when some edge has an irrational squared length.
    pub total_length: Option<RadicalSum>,
}

impl VisitReport {
    /// Nodes visited more than once, with their counts.
    pub fn revisited(&self) -> BTreeMap<Node, usize> {
        self.visit_counts
            .iter()
            .filter(|(_, &c)| c > 1)
            .map(|(&k, &c)| (k, c))
            .collect()
    }

    pub fn total_visits(&self) -> usize {
        self.visit_counts.values().sum()
    }

    pub fn covers_grid(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Grid nodes touched by any edge, ignoring multiplicity and edge rules.
pub fn touched_nodes<S: GridScalar>(chain: &PolygonalChain<S>) -> Result<HashSet<Node>> {
    let mut out = HashSet::new();
    for e in chain.edges()? {
        out.extend(lattice_points_on_segment(&e, chain.n()));
    }
    Ok(out)
}
