//! Exact combinatorics for dominating sets and their reconfiguration graphs.
//!
//! The `k`-dominating graph `D_k(G)` has one vertex per dominating set of `G`
//! of cardinality at most `k`; two sets are adjacent when one is obtained from
//! the other by adding or removing a single vertex.

pub mod census;
pub mod domination;
pub mod error;
pub mod family;
pub mod formats;
pub mod gen;
pub mod graph;
pub mod iso;
pub mod reconfig;

pub use error::{Error, Result};
pub use graph::{FamilyKind, Graph, VertexSet};
