//! Minimum-link covering chains for the square point grid `{0, …, n−1}²`.
//!
//! The crate builds covering paths, trails, circuits and cycles with the
//! fewest possible edges, and verifies arbitrary polygonal chains against the
//! covering definitions with exact arithmetic. Coordinates live in Q(√2); the
//! geometry and chain code is generic over [`GridScalar`], and the aliases
//! below fix the exact instantiation used throughout.

pub mod chain;
pub mod collision;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod radical;
pub mod scalar;
pub mod search;
pub mod verify;

pub use chain::{ChainKind, VisitReport};
pub use error::{ChainDefect, Error, Result};
pub use geometry::{Crossing, Dihedral, Node};
pub use radical::RadicalSum;
pub use scalar::{GridScalar, QSqrt2};
pub use verify::{check_bounds, classify, length_upper_bound, min_link_length, Classification};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Exact coordinate type: `r + s2·√2` with rational `r`, `s2`.
pub type Scalar = QSqrt2<Rational>;
pub type Point = geometry::Point<Scalar>;
pub type Segment = geometry::Segment<Scalar>;
pub type Line = geometry::Line<Scalar>;
pub type Chain = chain::PolygonalChain<Scalar>;
