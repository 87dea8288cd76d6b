//! Serialization, report tables and SVG rendering.

pub mod document;
pub mod summary;
pub mod svg;
pub mod sweep;

pub use document::{ChainDocument, FORMAT_VERSION};
pub use summary::{summarize, ChainSummary};
pub use svg::{render_svg, SvgOptions};
pub use sweep::{run_sweep, SweepKind, SweepReport, SweepRow};
