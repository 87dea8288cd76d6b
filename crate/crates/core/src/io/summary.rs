//! Human- and machine-readable verification summaries.

use std::fmt;

use serde::Serialize;

use crate::chain::ChainKind;
use crate::error::Result;
use crate::geometry::Node;
use crate::verify::{classify_report, min_link_length, Classification};
use crate::Chain;

#[derive(Clone, Debug, Serialize)]
pub struct ChainSummary {
    pub n: usize,
    pub declared_kind: ChainKind,
    pub strongest_kind: ChainKind,
    pub classification: Classification,
    pub closed: bool,
    pub link_length: usize,
    pub min_link_length: Option<usize>,
    /// Exact total length, when every edge length is a sum of square roots
    /// of rationals.
    pub length: Option<String>,
    pub length_approx: f64,
    pub uncovered: Vec<Node>,
    pub revisited: Vec<(Node, usize)>,
}

impl ChainSummary {
    /// Whether the chain is of its declared kind with the minimum number of
    /// edges.
    pub fn certified(&self) -> bool {
        self.classification.satisfies(self.declared_kind)
            && self.min_link_length == Some(self.link_length)
    }
}

pub fn summarize(chain: &Chain) -> Result<ChainSummary> {
    let report = chain.visit_report()?;
    let classification = classify_report(&report);
    Ok(ChainSummary {
        n: chain.n(),
        declared_kind: chain.kind(),
        strongest_kind: classification.strongest(),
        classification,
        closed: report.is_closed,
        link_length: report.link_length,
        min_link_length: min_link_length(chain.n()).ok(),
        length: report.total_length.as_ref().map(|l| l.to_string()),
        length_approx: chain.total_length_f64(),
        uncovered: report.uncovered.iter().copied().collect(),
        revisited: report.revisited().into_iter().collect(),
    })
}

impl fmt::Display for ChainSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.classification;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "declared kind: {}", self.declared_kind)?;
        writeln!(
            f,
            "trail: {}  path: {}  circuit: {}  cycle: {}",
            c.is_covering_trail, c.is_covering_path, c.is_covering_circuit, c.is_covering_cycle
        )?;
        match self.min_link_length {
            Some(m) => writeln!(f, "edges: {} (minimum {m})", self.link_length)?,
            None => writeln!(f, "edges: {}", self.link_length)?,
        }
        match &self.length {
            Some(l) => writeln!(f, "length: {l} ≈ {:.12}", self.length_approx)?,
            None => writeln!(f, "length ≈ {:.12}", self.length_approx)?,
        }
        let nodes = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
        writeln!(f, "uncovered: {{{}}}", nodes(&mut self.uncovered.iter().map(Node::to_string)))?;
        writeln!(
            f,
            "revisited: {{{}}}",
            nodes(&mut self.revisited.iter().map(|(v, k)| format!("{v}:{k}")))
        )?;
        for reason in &c.failure_reasons {
            writeln!(f, "note: {reason}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::explicit_chain;

    #[test]
    fn f5_summary() {
        let f5: Chain = explicit_chain("circuit-f5").unwrap();
        let s = summarize(&f5).unwrap();
        assert!(s.certified() && s.closed);
        assert_eq!(s.revisited, [(Node::new(4, 0), 2)]);
        assert!(s.to_string().contains("revisited: {(4,0):2}"));
    }

    #[test]
    fn gap_is_listed() {
        let c = Chain::from_ints(3, &[(0, 0), (0, 2), (2, 0), (2, 1)], ChainKind::Trail).unwrap();
        let s = summarize(&c).unwrap();
        assert!(!s.certified());
        assert!(s.uncovered.contains(&Node::new(1, 2)));
    }
}
