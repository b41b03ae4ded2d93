//! Exact counting and averaging of connected vertex sets.
//!
//! A connected set of a graph is a nonempty vertex subset inducing a
//! connected subgraph. This crate computes, exactly,
//!
//! * `N(G)`, the number of connected sets, and `S(G)`, the sum of their sizes;
//! * the average size `A(G) = S/N` and density `D(G) = A/n` as reduced rationals;
//! * the same quantities restricted to sets containing a fixed connected set;
//!
//! together with block-cut trees, near-tree classification, the minimal-set
//! construction over shortest-path spanning trees, seeded graph families,
//! and a registry of checkable inequalities run over graph streams.
//!
//! ```
//! use connset_core::{io::parse_graph6, stats, Budget};
//!
//! let k3 = parse_graph6(b"Bw").unwrap();
//! let s = stats(&k3, &Budget::default()).unwrap();
//! assert_eq!(s.count, 7u32.into());
//! assert_eq!(s.average.to_string(), "12/7");
//! ```

pub mod blocks;
pub mod budget;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod minimal;
pub mod pipeline;
pub mod search;
pub mod theorems;

use num_rational::BigRational;
use serde::Serializer;

pub use blocks::{block_cut_tree, classify_near_tree, BlockCutTree, NearTreeClass};
pub use budget::{Budget, DEFAULT_BUDGET};
pub use engine::{
    cut_decomposition, rooted_stats, stats, stats_bruteforce, stats_by_components, vertex_profile,
    ConnStats, CutDecomposition, RootedStats,
};
pub use error::{Error, Result};
pub use graph::{bfs_spanning_tree, connected_components, Graph, SpanningTree, VertexSet};
pub use minimal::{check_av_inequality, minimal_family, MinimalFamily};

/// Writes a rational as `"p/q"`, or `"p"` when it is an integer.
pub(crate) fn serialize_ratio<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}
