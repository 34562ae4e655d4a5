//! Threshold graphs, their oriented flow graphs, inflated multigraphs and the
//! containment poset of connected threshold graphs.
//!
//! Vertices are `0..=n` with `0` the sink; edges are oriented `i -> j` for
//! `i > j`.

mod dag;
mod multigraph;
mod poset;
mod threshold;

pub use dag::Dag;
pub use multigraph::Multigraph;
pub use poset::{shifted_diagram, PosetPn, MAX_POSET_N};
pub use threshold::{GraphSummary, ThresholdGraph};
