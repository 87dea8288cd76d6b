//! Constructions of minimum-link covering chains.
//!
//! Every generator certifies its output with [`crate::verify::classify`]
//! before returning it; a construction that does not certify is reported as
//! an error instead of being handed out.

pub mod catalog;
pub mod cycle;
pub mod epsilon;
pub mod spiral;
pub mod square;

pub use catalog::{catalog_ids, catalog_summary, explicit_chain};
pub use cycle::covering_cycle_even;
pub use epsilon::{epsilon_gap_squared, epsilon_path};
pub use spiral::{
    assemble_path, bridge_data, missed_points, mixed_spiral_extend, triangular_spiral,
    BridgeData, ExtensionConfig, SpiralKind, SpiralParams,
};
pub use square::{covering_circuit, distance_optimal_trail, square_spiral_grow};

use crate::chain::{ChainKind, PolygonalChain};
use crate::scalar::GridScalar;
use crate::verify::{classify, min_link_length};

/// Whether `chain` is a valid chain of the given kind with the minimum number
/// of edges for its grid.
pub(crate) fn certifies<S: GridScalar>(chain: &PolygonalChain<S>, kind: ChainKind) -> bool {
    let Ok(h_min) = min_link_length(chain.n()) else {
        return false;
    };
    chain.link_length() == h_min
        && classify(chain).is_ok_and(|c| c.satisfies(kind))
}
