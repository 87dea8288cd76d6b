//! Exhaustive search for covering trails in a restricted model.
//!
//! Edges lie on lines through at least two points of the padded lattice
//! `{−p, …, n−1+p}²`, interior vertices are intersections of consecutive
//! lines, and each end edge runs to the farthest grid node on its ray. A
//! result of "none" only says that no trail exists in this model; real
//! covering trails may put vertices anywhere.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chain::{ChainKind, VisitReport};
use crate::error::{Error, Result};
use crate::generators::explicit_chain;
use crate::geometry::{Dihedral, Node};
use crate::scalar::GridScalar;
use crate::verify::{classify_report, min_link_length};
use crate::{Chain, Point, Scalar};

/// Largest grid the search accepts.
pub const MAX_SEARCH_N: usize = 4;

/// Label attached to every search result.
pub const MODEL_LABEL: &str = "restricted-model";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateModel {
    pub n: usize,
    pub padding: i64,
    pub max_edges: usize,
    /// Only try one first line per dihedral orbit. Ignored by predicate
    /// searches, whose predicates need not be symmetric.
    pub use_symmetry: bool,
    /// Shuffles the line order with this seed; `None` keeps the sorted order.
    pub seed: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl CandidateModel {
    pub fn new(n: usize, max_edges: usize) -> Self {
        CandidateModel {
            n,
            padding: 2,
            max_edges,
            use_symmetry: true,
            seed: None,
            time_budget: None,
        }
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_SEARCH_N {
            return Err(Error::SearchRefused(format!(
                "search is limited to 1 ≤ n ≤ {MAX_SEARCH_N} (got n = {}); use the generators for larger grids",
                self.n
            )));
        }
        let h = min_link_length(self.n)?;
        if self.max_edges == 0 || self.max_edges > h {
            return Err(Error::SearchRefused(format!(
                "max_edges must be in 1..={h} for n = {}",
                self.n
            )));
        }
        if self.padding < 0 {
            return Err(Error::SearchRefused("padding must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: usize,
    pub padding: i64,
    pub max_edges: usize,
    /// A certified covering trail with the fewest edges found.
    pub chain: Option<Chain>,
    /// Search-tree nodes visited.
    pub explored: u64,
    /// Whether the search ran to completion, so `None` means "no trail in
    /// the model".
    pub complete: bool,
    pub model: &'static str,
}

/// `a·x + b·y = c` with coprime integer coefficients and `(a, b)` positive
/// lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Ln {
    a: i64,
    b: i64,
    c: i64,
}

impl Ln {
    fn through(p: (i64, i64), q: (i64, i64)) -> Ln {
        let a = q.1 - p.1;
        let b = p.0 - q.0;
        let c = a * p.0 + b * p.1;
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / g, b / g, c / g);
        if a < 0 || (a == 0 && b < 0) {
            (a, b, c) = (-a, -b, -c);
        }
        Ln { a, b, c }
    }

    /// Direction vector.
    fn dir(&self) -> (i64, i64) {
        (-self.b, self.a)
    }

    fn parallel(&self, o: &Ln) -> bool {
        self.a * o.b == self.b * o.a
    }
}

/// A rational point `(x/d, y/d)` with `d > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct RPt {
    x: i64,
    y: i64,
    d: i64,
}

fn meet(l: &Ln, m: &Ln) -> RPt {
    let det = l.a * m.b - m.a * l.b;
    let x = l.c * m.b - m.c * l.b;
    let y = l.a * m.c - m.a * l.c;
    let (x, y, d) = if det < 0 { (-x, -y, -det) } else { (x, y, det) };
    let g = x.gcd(&y).gcd(&d);
    RPt { x: x / g, y: y / g, d: d / g }
}

/// Position of a point along a line, as `num / den` with `den > 0`.
fn param(l: &Ln, p: &RPt) -> (i64, i64) {
    let (dx, dy) = l.dir();
    (dx * p.x + dy * p.y, p.d)
}

/// Grid nodes of one line, sorted by position.
#[derive(Clone, Debug)]
struct LineInfo {
    line: Ln,
    nodes: Vec<(i64, Node, u64)>,
    mask: u64,
}

impl LineInfo {
    fn new(line: Ln, n: usize) -> LineInfo {
        let (dx, dy) = line.dir();
        let mut nodes: Vec<(i64, Node, u64)> = crate::geometry::grid_nodes(n)
            .filter(|v| line.a * v.x + line.b * v.y == line.c)
            .map(|v| (dx * v.x + dy * v.y, v, bit(v, n)))
            .collect();
        nodes.sort();
        let mask = nodes.iter().fold(0, |m, t| m | t.2);
        LineInfo { line, nodes, mask }
    }

    /// Nodes with position between `s` and `t` inclusive.
    fn between(&self, s: (i64, i64), t: (i64, i64)) -> u64 {
        let (lo, hi) = if s.0 * t.1 <= t.0 * s.1 { (s, t) } else { (t, s) };
        self.nodes
            .iter()
            .filter(|(k, _, _)| lo.0 <= k * lo.1 && k * hi.1 <= hi.0)
            .fold(0, |m, t| m | t.2)
    }

    /// Nodes on the ray from `s` in direction `sign`, and the ray's far end.
    fn ray(&self, s: (i64, i64), sign: i64) -> (u64, Option<Node>) {
        let on: Vec<_> = self
            .nodes
            .iter()
            .filter(|(k, _, _)| sign * (k * s.1 - s.0) >= 0)
            .collect();
        let mask = on.iter().fold(0, |m, t| m | t.2);
        let far = if sign > 0 { on.last() } else { on.first() };
        (mask, far.map(|t| t.1))
    }
}

fn bit(v: Node, n: usize) -> u64 {
    1u64 << (v.y as usize * n + v.x as usize)
}

fn line_family(n: usize, padding: i64) -> Vec<Ln> {
    let lo = -padding;
    let hi = n as i64 - 1 + padding;
    let pts: Vec<(i64, i64)> = (lo..=hi).flat_map(|y| (lo..=hi).map(move |x| (x, y))).collect();
    let mut set = BTreeSet::new();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            set.insert(Ln::through(*p, *q));
        }
    }
    set.into_iter().collect()
}

fn transform_line(l: &Ln, g: Dihedral, n: usize) -> Ln {
    // Normalised lines have gcd(a, b) = 1, so they carry integer points.
    let e = l.a.extended_gcd(&l.b);
    let p0 = (l.c * e.x, l.c * e.y);
    let (dx, dy) = l.dir();
    let map = |(x, y): (i64, i64)| {
        let q = g.apply(&crate::geometry::Point::<Ratio<i64>>::from_ints(x, y), n);
        (q.x.to_integer(), q.y.to_integer())
    };
    Ln::through(map(p0), map((p0.0 + dx, p0.1 + dy)))
}

struct Ctx<'a> {
    n: usize,
    full: u64,
    lines: &'a [LineInfo],
    h: usize,
    accept: &'a (dyn Fn(&Chain, &VisitReport) -> bool + Sync),
    explored: &'a AtomicU64,
    stop: &'a AtomicBool,
    deadline: Option<Instant>,
}

impl Ctx<'_> {
    fn out_of_time(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stop.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    /// Depth-first extension of the line sequence `seq` with vertices `vs`
    /// (`vs[i]` joins `seq[i]` and `seq[i+1]`) and exact interior coverage.
    fn dfs(&self, seq: &mut Vec<usize>, vs: &mut Vec<RPt>, inner: u64) -> Option<Chain> {
        self.explored.fetch_add(1, Ordering::Relaxed);
        if self.out_of_time() {
            return None;
        }
        let k = seq.len();
        let first = self.lines[seq[0]].mask;
        let last = self.lines[seq[k - 1]].mask;
        let optimistic = inner | first | last;
        let uncovered = self.full & !optimistic;
        let left = self.h - k;
        if uncovered != 0 {
            if left == 0 {
                return None;
            }
            // No single line covers more than `best` of what is left.
            let best = self
                .lines
                .iter()
                .map(|l| (l.mask & uncovered).count_ones())
                .max()
                .unwrap_or(0) as usize;
            if uncovered.count_ones() as usize > left * best {
                return None;
            }
        }
        if k == self.h {
            return self.finish(seq, vs, inner);
        }
        let cur = self.lines[seq[k - 1]].line;
        for (j, info) in self.lines.iter().enumerate() {
            if info.line.parallel(&cur) {
                continue;
            }
            let v = meet(&cur, &info.line);
            let mut add = 0;
            if let Some(prev) = vs.last() {
                if *prev == v {
                    continue;
                }
                let li = &self.lines[seq[k - 1]];
                add = li.between(param(&li.line, prev), param(&li.line, &v));
            }
            seq.push(j);
            vs.push(v);
            let found = self.dfs(seq, vs, inner | add);
            seq.pop();
            vs.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn finish(&self, seq: &[usize], vs: &[RPt], inner: u64) -> Option<Chain> {
        let ends = |li: &LineInfo, at: Option<&RPt>, sign: i64| -> (u64, RPt) {
            match at {
                Some(v) => {
                    let s = param(&li.line, v);
                    let (mask, far) = li.ray(s, sign);
                    let end = match far {
                        Some(f) if RPt { x: f.x, y: f.y, d: 1 } != *v => RPt { x: f.x, y: f.y, d: 1 },
                        _ => {
                            let (dx, dy) = li.line.dir();
                            RPt { x: v.x + sign * dx * v.d, y: v.y + sign * dy * v.d, d: v.d }
                        }
                    };
                    (mask, end)
                }
                None => unreachable!(),
            }
        };
        let mut candidates = Vec::new();
        if seq.len() == 1 {
            let li = &self.lines[seq[0]];
            let (Some(a), Some(b)) = (li.nodes.first(), li.nodes.last()) else {
                return None;
            };
            let pa = RPt { x: a.1.x, y: a.1.y, d: 1 };
            let pb = if a.1 == b.1 {
                let (dx, dy) = li.line.dir();
                RPt { x: a.1.x + dx, y: a.1.y + dy, d: 1 }
            } else {
                RPt { x: b.1.x, y: b.1.y, d: 1 }
            };
            if li.mask == self.full {
                candidates.push(vec![pa, pb]);
            }
        } else {
            let l0 = &self.lines[seq[0]];
            let ll = &self.lines[seq[seq.len() - 1]];
            for s0 in [1, -1] {
                let (m0, e0) = ends(l0, vs.first(), s0);
                for s1 in [1, -1] {
                    let (m1, e1) = ends(ll, vs.last(), s1);
                    if (inner | m0 | m1) != self.full {
                        continue;
                    }
                    let mut pts = Vec::with_capacity(vs.len() + 2);
                    pts.push(e0);
                    pts.extend_from_slice(vs);
                    pts.push(e1);
                    candidates.push(pts);
                }
            }
        }
        for pts in candidates {
            let vertices = pts
                .iter()
                .map(|p| Point::new(Scalar::ratio(p.x, p.d), Scalar::ratio(p.y, p.d)))
                .collect();
            let Ok(chain) = Chain::new(self.n, vertices, ChainKind::Trail) else {
                continue;
            };
            let Ok(report) = chain.visit_report() else {
                continue;
            };
            if classify_report(&report).is_covering_trail && (self.accept)(&chain, &report) {
                return Some(chain);
            }
        }
        None
    }
}

fn run(model: &CandidateModel, accept: &(dyn Fn(&Chain, &VisitReport) -> bool + Sync), symmetric: bool) -> Result<SearchResult> {
    model.check()?;
    let n = model.n;
    let mut family = line_family(n, model.padding);
    if let Some(seed) = model.seed {
        family.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut lines: Vec<LineInfo> = family.iter().map(|l| LineInfo::new(*l, n)).collect();
    if model.seed.is_none() {
        // Lines through many nodes first; the sort is stable, so ties keep
        // the family order.
        lines.sort_by_key(|l| std::cmp::Reverse(l.nodes.len()));
    }
    let starts: Vec<usize> = if symmetric && model.use_symmetry {
        (0..lines.len())
            .filter(|&i| {
                let l = lines[i].line;
                Dihedral::ALL.iter().all(|g| transform_line(&l, *g, n) >= l)
            })
            .collect()
    } else {
        (0..lines.len()).collect()
    };
    let full = if n * n == 64 { u64::MAX } else { (1u64 << (n * n)) - 1 };
    let explored = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let deadline = model.time_budget.map(|b| Instant::now() + b);

    let mut chain = None;
    for h in 1..=model.max_edges {
        let ctx = Ctx {
            n,
            full,
            lines: &lines,
            h,
            accept,
            explored: &explored,
            stop: &stop,
            deadline,
        };
        chain = starts.par_iter().find_map_first(|&i| {
            let mut seq = vec![i];
            let mut vs = Vec::new();
            ctx.dfs(&mut seq, &mut vs, 0)
        });
        if chain.is_some() || stop.load(Ordering::Relaxed) {
            break;
        }
    }
    let complete = chain.is_some() || !stop.load(Ordering::Relaxed);
    Ok(SearchResult {
        n,
        padding: model.padding,
        max_edges: model.max_edges,
        chain,
        explored: explored.load(Ordering::Relaxed),
        complete,
        model: MODEL_LABEL,
    })
}

/// The covering trail with the fewest edges (at most `max_edges`) in the
/// model, if any.
pub fn search_min_trail(model: &CandidateModel) -> Result<SearchResult> {
    run(model, &|_, _| true, true)
}

/// Like [`search_min_trail`], keeping only trails accepted by `accept`, which
/// sees the chain and its visit report.
pub fn search_trail_with(
    model: &CandidateModel,
    accept: &(dyn Fn(&Chain, &VisitReport) -> bool + Sync),
) -> Result<SearchResult> {
    run(model, accept, false)
}

/// A covering trail with the minimum number of edges that visits `(0,0)`
/// twice, so it is not a covering path.
pub fn find_trail_not_path(n: usize) -> Result<Chain> {
    match n {
        0 => Err(Error::Domain("grid size must be at least 1".into())),
        1 => Err(Error::Impossible(
            "the only one-edge covering trail of the 1x1 grid is a path".into(),
        )),
        2 => {
            let mut model = CandidateModel::new(2, 3);
            model.padding = 1;
            let origin = Node::new(0, 0);
            let res = search_trail_with(&model, &|_, r| r.visit_counts.get(&origin).copied().unwrap_or(0) >= 2)?;
            res.chain.ok_or_else(|| Error::ConstructionFailure("no revisiting trail found".into()))
        }
        3 => explicit_chain("revisit-trail-t3"),
        _ => Err(Error::Domain(format!(
            "trails that are not paths are only built for n ≤ 3; for n = {n} use a covering circuit"
        ))),
    }
}
