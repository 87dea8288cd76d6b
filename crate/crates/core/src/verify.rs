//! Classification of chains and checks against the known link and length
//! formulas.

use serde::Serialize;

use crate::chain::{ChainKind, PolygonalChain, VisitReport};
use crate::error::{Error, Result};
use crate::radical::RadicalSum;
use crate::scalar::GridScalar;
use crate::Rational;

/// Which covering classes a chain belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_covering_trail: bool,
    pub is_covering_path: bool,
    pub is_covering_circuit: bool,
    pub is_covering_cycle: bool,
    pub failure_reasons: Vec<String>,
}

impl Classification {
    pub fn satisfies(&self, kind: ChainKind) -> bool {
        match kind {
            ChainKind::Trail => self.is_covering_trail,
            ChainKind::Path => self.is_covering_path,
            ChainKind::Circuit => self.is_covering_circuit,
            ChainKind::Cycle => self.is_covering_cycle,
            ChainKind::Unknown => true,
        }
    }

    /// The most specific class, if any.
    pub fn strongest(&self) -> ChainKind {
        if self.is_covering_cycle {
            ChainKind::Cycle
        } else if self.is_covering_circuit {
            ChainKind::Circuit
        } else if self.is_covering_path {
            ChainKind::Path
        } else if self.is_covering_trail {
            ChainKind::Trail
        } else {
            ChainKind::Unknown
        }
    }
}

/// Classifies from an existing report.
///
/// The start and end of a closed chain are one visit (see [`crate::chain`]),
/// so a cycle is a closed chain in which every grid node has count one. In
/// the usual wording, only the shared start/end node may be touched twice.
pub fn classify_report(report: &VisitReport) -> Classification {
    let mut reasons = Vec::new();
    let trail = report.uncovered.is_empty();
    if !trail {
        let missing: Vec<String> = report.uncovered.iter().map(|v| v.to_string()).collect();
        reasons.push(format!("uncovered nodes: {}", missing.join(" ")));
    }
    let revisited = report.revisited();
    let once = revisited.is_empty();
    if !once {
        let twice: Vec<String> = revisited.iter().map(|(v, c)| format!("{v}x{c}")).collect();
        reasons.push(format!("revisited nodes: {}", twice.join(" ")));
    }
    if !report.is_closed {
        reasons.push("chain is open".into());
    }
    Classification {
        is_covering_trail: trail,
        is_covering_path: trail && once,
        is_covering_circuit: trail && report.is_closed,
        is_covering_cycle: trail && report.is_closed && once,
        failure_reasons: reasons,
    }
}

pub fn classify<S: GridScalar>(chain: &PolygonalChain<S>) -> Result<Classification> {
    Ok(classify_report(&chain.visit_report()?))
}

/// Fewest edges of any covering trail (and path) of the `n × n` grid.
pub fn min_link_length(n: usize) -> Result<usize> {
    match n {
        0 => Err(Error::Domain("grid size must be at least 1".into())),
        1 => Ok(1),
        2 => Ok(3),
        _ => Ok(2 * (n - 1)),
    }
}

/// Best known total length of a minimum-link covering trail.
pub fn length_upper_bound(n: usize) -> Result<RadicalSum> {
    let sqrt2 = |k: i64| RadicalSum::term(Rational::from_integer(k.into()), 2u32);
    match n {
        0 | 1 => Err(Error::Domain(format!("length bound needs n ≥ 2, got {n}"))),
        2 => Ok(RadicalSum::from_int(3)),
        3 => Ok(RadicalSum::from_int(5) + sqrt2(5)),
        5 => Ok(RadicalSum::from_int(20) + sqrt2(6)),
        _ => {
            let n = n as i64;
            Ok(RadicalSum::from_int(n * n - 3) + sqrt2(5))
        }
    }
}

/// Trivial lower bound `n² − 1` on the length of a covering trail.
pub fn length_lower_bound(n: usize) -> RadicalSum {
    let n = n as i64;
    RadicalSum::from_int(n * n - 1)
}

/// Where a minimum-link covering trail sits relative to the length bounds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    #[serde(serialize_with = "display")]
    pub length: RadicalSum,
    #[serde(serialize_with = "display")]
    pub lower_bound: RadicalSum,
    /// Whether the lower bound is strict (n ≥ 3).
    pub lower_strict: bool,
    pub meets_lower_bound: bool,
    #[serde(serialize_with = "display")]
    pub upper_bound: RadicalSum,
    pub within_upper_bound: bool,
    /// Same two comparisons redone in floating point with a 1e−12 slack.
    pub float_agrees: bool,
}

fn display<S: serde::Serializer>(v: &RadicalSum, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Compares the exact length of a minimum-link covering trail with
/// `n² − 1` (strict from n = 3 on) and with [`length_upper_bound`].
pub fn check_bounds<S: GridScalar>(chain: &PolygonalChain<S>) -> Result<BoundReport> {
    let n = chain.n();
    let report = chain.visit_report()?;
    let class = classify_report(&report);
    let h_min = min_link_length(n)?;
    if !class.is_covering_trail {
        return Err(Error::NotMinimal("chain does not cover the grid".into()));
    }
    if report.link_length != h_min {
        return Err(Error::NotMinimal(format!(
            "{} edges, minimum is {h_min}",
            report.link_length
        )));
    }
    let length = report
        .total_length
        .clone()
        .map_or_else(|| chain.total_length(), Ok)?;
    let upper = length_upper_bound(n)?;
    let lower = length_lower_bound(n);
    let strict = n >= 3;
    let meets_lower = if strict { length > lower } else { length >= lower };
    let within_upper = length <= upper;

    const SLACK: f64 = 1e-12;
    let lf = chain.total_length_f64();
    let (lo, hi) = (lower.to_f64(), upper.to_f64());
    let float_lower = if strict { lf > lo - SLACK } else { lf >= lo - SLACK };
    let float_upper = lf <= hi + SLACK;
    let float_agrees = float_lower == meets_lower && float_upper == within_upper;

    Ok(BoundReport {
        n,
        length,
        lower_bound: lower,
        lower_strict: strict,
        meets_lower_bound: meets_lower,
        upper_bound: upper,
        within_upper_bound: within_upper,
        float_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Chain;

    fn chain(n: usize, v: &[(i64, i64)]) -> Chain {
        Chain::from_ints(n, v, ChainKind::Unknown).unwrap()
    }

    #[test]
    fn c2_is_a_cycle() {
        let c = classify(&chain(2, &[(0, 0), (0, 2), (2, 0), (0, 0)])).unwrap();
        assert!(c.is_covering_cycle && c.is_covering_circuit && c.is_covering_trail);
        assert!(c.is_covering_path);
        assert_eq!(c.strongest(), ChainKind::Cycle);
    }

    #[test]
    fn revisiting_trail_is_not_a_path() {
        let c = classify(&chain(3, &[(0, -1), (0, 3), (3, 0), (0, 0), (2, 2)])).unwrap();
        assert!(c.is_covering_trail);
        assert!(!c.is_covering_path);
        assert!(c.failure_reasons.iter().any(|r| r.contains("(0,0)x2")));
    }

    #[test]
    fn steiner_points_may_repeat_in_a_path() {
        let q = |a, b| crate::Scalar::ratio(a, b);
        let mut v: Vec<_> = [(0, 3), (0, 0), (3, 0), (0, 3), (3, 3)]
            .iter()
            .map(|&(x, y)| crate::Point::from_ints(x, y))
            .collect();
        v.push(crate::Point::new(q(1, 7), q(1, 7)));
        let c = classify(&Chain::new(3, v, ChainKind::Path).unwrap()).unwrap();
        assert!(c.is_covering_path);
        assert!(!c.is_covering_circuit);
    }

    #[test]
    fn min_link_values() {
        assert_eq!(min_link_length(1).unwrap(), 1);
        assert_eq!(min_link_length(2).unwrap(), 3);
        assert_eq!(min_link_length(5).unwrap(), 8);
        assert!(min_link_length(0).is_err());
    }

    #[test]
    fn upper_bound_values() {
        let s2 = |k: i64| RadicalSum::term(Rational::from_integer(k.into()), 2u32);
        assert_eq!(length_upper_bound(3).unwrap(), RadicalSum::from_int(5) + s2(5));
        assert_eq!(length_upper_bound(5).unwrap(), RadicalSum::from_int(20) + s2(6));
        assert_eq!(length_upper_bound(7).unwrap(), RadicalSum::from_int(46) + s2(5));
        assert!(length_upper_bound(1).is_err());
    }

    #[test]
    fn bounds_of_distance_trails() {
        let t4 = chain(4, &[(1, 3), (3, 1), (0, 1), (3, 4), (3, 0), (0, 0), (0, 3)]);
        let r = check_bounds(&t4).unwrap();
        assert!(r.meets_lower_bound && r.within_upper_bound && r.float_agrees);
        assert_eq!(r.length, length_upper_bound(4).unwrap());

        let unit = chain(2, &[(0, 1), (0, 0), (1, 0), (1, 1)]);
        let r = check_bounds(&unit).unwrap();
        assert!(!r.lower_strict);
        assert!(r.meets_lower_bound && r.within_upper_bound);
    }

    #[test]
    fn long_trail_exceeds_upper_bound() {
        // Minimum-link trail for n = 4 stretched by pushing the end far out.
        let t = chain(4, &[(3, 3), (0, 3), (0, 0), (4, 0), (1, 3), (1, 0), (30, 29)]);
        let r = check_bounds(&t).unwrap();
        assert!(r.meets_lower_bound);
        assert!(!r.within_upper_bound);
        assert!(r.float_agrees);
    }

    #[test]
    fn non_minimal_chain_is_rejected() {
        let t = chain(2, &[(0, 1), (0, 0), (1, 0), (1, 1), (3, 3)]);
        assert!(matches!(check_bounds(&t), Err(Error::NotMinimal(_))));
    }
}
