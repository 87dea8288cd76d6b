use thiserror::Error;

/// Structural defect found while validating a polygonal chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainDefect {
    /// Two consecutive vertices coincide.
    DegenerateEdge,
    /// Two consecutive edges lie on the same line.
    CollinearConsecutive,
    /// The same undirected edge appears twice.
    RepeatedEdge,
}

impl std::fmt::Display for ChainDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ChainDefect::DegenerateEdge => "degenerate edge",
            ChainDefect::CollinearConsecutive => "collinear consecutive edges",
            ChainDefect::RepeatedEdge => "repeated edge",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line is defined by two coincident points")]
    DegenerateLine,

    #[error("segment endpoints coincide")]
    DegenerateSegment,

    #[error("squared length {0} is not rational; nested radicals are not supported")]
    UnsupportedRadical(String),

    #[error("invalid chain: {defect} between edges {first} and {second}")]
    InvalidChain {
        defect: ChainDefect,
        first: usize,
        second: usize,
    },

    #[error("invalid chain: {0}")]
    MalformedChain(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("impossible request: {0}")]
    Impossible(String),

    #[error("construction failed: {0}")]
    ConstructionFailure(String),

    #[error("pattern not implemented: {0}")]
    UnimplementedPattern(String),

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error("chain is not a minimum-link covering trail: {0}")]
    NotMinimal(String),

    #[error("search refused: {0}")]
    SearchRefused(String),

    #[error("collision oracle violation for n = {n}: {detail}")]
    OracleViolation { n: usize, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
