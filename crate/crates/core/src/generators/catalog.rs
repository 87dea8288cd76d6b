//! Hard-coded chains with known coordinates.

use crate::chain::{ChainKind, PolygonalChain};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::scalar::GridScalar;

/// A coordinate written as `num/den`.
#[derive(Clone, Copy, Debug)]
struct Q(i64, i64);

const fn z(v: i64) -> Q {
    Q(v, 1)
}

struct Entry {
    id: &'static str,
    n: usize,
    kind: ChainKind,
    summary: &'static str,
    vertices: &'static [(Q, Q)],
}

macro_rules! ints {
    ($(($x:expr, $y:expr)),* $(,)?) => {
        &[$((z($x), z($y))),*]
    };
}

const CATALOG: &[Entry] = &[
    Entry {
        id: "small-p1",
        n: 1,
        kind: ChainKind::Path,
        summary: "single segment through the only node",
        vertices: ints![(-1, 0), (1, 0)],
    },
    Entry {
        id: "small-p2",
        n: 2,
        kind: ChainKind::Path,
        summary: "three sides of the unit square",
        vertices: ints![(0, 1), (0, 0), (1, 0), (1, 1)],
    },
    Entry {
        id: "small-p3",
        n: 3,
        kind: ChainKind::Path,
        summary: "four-edge nine-dots path",
        vertices: ints![(2, 2), (0, 0), (0, 3), (3, 0), (1, 0)],
    },
    Entry {
        id: "small-p4",
        n: 4,
        kind: ChainKind::Path,
        summary: "two triangular spirals joined on the bridge line",
        vertices: &[
            (z(0), z(2)),
            (z(2), z(0)),
            (z(-2), z(0)),
            (z(3), Q(5, 2)),
            (z(3), z(0)),
            (z(0), z(3)),
            (z(3), z(3)),
        ],
    },
    Entry {
        id: "cycle-c2",
        n: 2,
        kind: ChainKind::Cycle,
        summary: "right triangle around the 2x2 grid",
        vertices: ints![(0, 0), (0, 2), (2, 0), (0, 0)],
    },
    Entry {
        id: "cycle-c4",
        n: 4,
        kind: ChainKind::Cycle,
        summary: "six-edge star cycle",
        vertices: &[
            (z(-1), z(-1)),
            (Q(3, 2), z(4)),
            (z(4), z(-1)),
            (z(-1), z(4)),
            (Q(3, 2), z(-1)),
            (z(4), z(4)),
            (z(-1), z(-1)),
        ],
    },
    Entry {
        id: "trail-t4",
        n: 4,
        kind: ChainKind::Trail,
        summary: "seed trail for even circuits",
        vertices: ints![(3, 3), (0, 3), (0, 0), (4, 0), (1, 3), (1, 0), (3, 2)],
    },
    Entry {
        id: "trail-t5",
        n: 5,
        kind: ChainKind::Trail,
        summary: "seed trail for odd circuits",
        vertices: ints![(4, 4), (4, 0), (0, 0), (0, 8), (4, 0), (-1, 5), (7, 1), (0, 1), (3, 4)],
    },
    Entry {
        id: "circuit-f5",
        n: 5,
        kind: ChainKind::Circuit,
        summary: "circuit revisiting only its start node",
        vertices: &[
            (z(4), z(0)),
            (z(-1), z(0)),
            (Q(11, 3), Q(7, 3)),
            (Q(1, 2), Q(11, 2)),
            (z(4), z(-5)),
            (z(4), z(5)),
            (z(0), z(1)),
            (z(0), z(4)),
            (z(4), z(0)),
        ],
    },
    Entry {
        id: "distance-t2",
        n: 2,
        kind: ChainKind::Trail,
        summary: "shortest minimum-link trail, length 3",
        vertices: ints![(0, 1), (0, 0), (1, 0), (1, 1)],
    },
    Entry {
        id: "distance-t3",
        n: 3,
        kind: ChainKind::Trail,
        summary: "short minimum-link trail, length 5+5√2",
        vertices: ints![(2, 2), (0, 0), (0, 3), (3, 0), (1, 0)],
    },
    Entry {
        id: "distance-t4",
        n: 4,
        kind: ChainKind::Trail,
        summary: "short minimum-link trail, length 13+5√2",
        vertices: ints![(1, 3), (3, 1), (0, 1), (3, 4), (3, 0), (0, 0), (0, 3)],
    },
    Entry {
        id: "distance-t4-extended",
        n: 4,
        kind: ChainKind::Trail,
        summary: "distance-t4 with its last edge lengthened by one, the square-spiral seed",
        vertices: ints![(1, 3), (3, 1), (0, 1), (3, 4), (3, 0), (0, 0), (0, 4)],
    },
    Entry {
        id: "distance-t5",
        n: 5,
        kind: ChainKind::Trail,
        summary: "short minimum-link trail, length 20+6√2",
        vertices: ints![(2, 3), (4, 3), (1, 0), (1, 3), (4, 0), (0, 0), (0, 4), (4, 4), (4, 1)],
    },
    Entry {
        id: "revisit-trail-t3",
        n: 3,
        kind: ChainKind::Trail,
        summary: "minimum-link trail that visits (0,0) twice",
        vertices: ints![(0, -1), (0, 3), (3, 0), (0, 0), (2, 2)],
    },
    Entry {
        id: "steiner-path-p3",
        n: 3,
        kind: ChainKind::Path,
        summary: "path repeating the Steiner point (0,3)",
        vertices: &[
            (z(0), z(3)),
            (z(0), z(0)),
            (z(3), z(0)),
            (z(0), z(3)),
            (z(3), z(3)),
            (Q(1, 7), Q(1, 7)),
        ],
    },
];

/// Identifiers of every catalog chain, in catalog order.
pub fn catalog_ids() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|e| e.id)
}

/// One-line description of a catalog chain.
pub fn catalog_summary(id: &str) -> Option<&'static str> {
    CATALOG.iter().find(|e| e.id == id).map(|e| e.summary)
}

/// The catalog chain with the given id.
pub fn explicit_chain<S: GridScalar>(id: &str) -> Result<PolygonalChain<S>> {
    let entry = CATALOG
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))?;
    let q = |c: Q| S::ratio(c.0, c.1);
    let vertices = entry
        .vertices
        .iter()
        .map(|&(x, y)| Point::new(q(x), q(y)))
        .collect();
    PolygonalChain::new(entry.n, vertices, entry.kind)
}
