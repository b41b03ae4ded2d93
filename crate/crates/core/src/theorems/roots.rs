use num_bigint::BigUint;
use serde::Serialize;

use crate::blocks::block_cut_tree;
use crate::budget::Budget;
use crate::engine::cut_decomposition;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotFoundReason {
    NoCutVertex,
    NoSatisfyingCut,
}

/// Outcome of the search for a root vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RootSearch {
    /// `x` satisfies `(n-1) prod N_i(x) > 2 sum (n - n_i) N_i`, whose two
    /// sides are `lhs` and `rhs`.
    Found {
        x: usize,
        lhs: BigUint,
        rhs: BigUint,
    },
    NotFound {
        reason: NotFoundReason,
    },
}

impl RootSearch {
    pub fn root(&self) -> Option<usize> {
        match self {
            RootSearch::Found { x, .. } => Some(*x),
            RootSearch::NotFound { .. } => None,
        }
    }
}

/// Smallest-id cut vertex satisfying the root-vertex inequality.
pub fn find_root_vertex(g: &Graph, budget: &Budget) -> Result<RootSearch> {
    let tree = block_cut_tree(g)?;
    if tree.cut_vertices.is_empty() {
        return Ok(RootSearch::NotFound {
            reason: NotFoundReason::NoCutVertex,
        });
    }
    for &x in &tree.cut_vertices {
        let d = cut_decomposition(g, x, budget)?;
        let (lhs, rhs) = d.root_inequality_sides();
        if lhs > rhs {
            return Ok(RootSearch::Found { x, lhs, rhs });
        }
    }
    Ok(RootSearch::NotFound {
        reason: NotFoundReason::NoSatisfyingCut,
    })
}
