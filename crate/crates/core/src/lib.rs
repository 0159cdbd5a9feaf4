//! Linear geometric centralities on directed graphs.
//!
//! A linear centrality scores node `i` as `(C·a)_i`, where `C` is the
//! distance-count matrix of the graph (row `i`, column `k` counts the nodes
//! at distance `k` to `i`) and `a` is a coefficient vector. In-degree,
//! harmonic centrality and negative peripherality are all of this form.
//!
//! The crate evaluates such centralities exactly, decides their axioms,
//! builds graphs on which two non-proportional coefficient vectors rank
//! nodes differently, and decides which node rankings a graph can realise
//! under any linear centrality, with a checkable Farkas certificate when it
//! cannot.

pub mod axioms;
pub mod centrality;
pub mod distinguish;
pub mod error;
pub mod exact;
pub mod graph;
pub mod represent;

pub use error::{Error, Result};
