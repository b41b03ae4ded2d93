//! Empirical listing of the pairs `(G, x)` with `N(G,x) < 2n`.
//!
//! In trees the candidate vertices are those of degree at least 2; in
//! general graphs they are the vertices lying in a block of order at least
//! 3, i.e. in some 2-connected subgraph. Every scanned pair either appears
//! in the report or satisfies `N(G,x) >= 2n`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::blocks::block_cut_tree;
use crate::budget::Budget;
use crate::engine::vertex_profile;
use crate::error::Result;
use crate::graph::Graph;
use crate::io::encode_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MiningMode {
    /// Trees, vertices of degree at least 2.
    Trees,
    /// Connected graphs, vertices inside a block of order at least 3.
    TwoConnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exception {
    pub graph_index: usize,
    pub graph6: String,
    pub n: usize,
    pub vertex: usize,
    pub degree: usize,
    /// `N(G,x)`
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MiningReport {
    pub mode: MiningMode,
    pub graphs_scanned: usize,
    /// Inputs outside the mode's domain (non-trees, disconnected graphs).
    pub graphs_skipped: usize,
    pub pairs_checked: usize,
    pub exceptions: Vec<Exception>,
}

pub fn mine_exceptions_twice<I>(
    stream: I,
    mode: MiningMode,
    budget: &Budget,
) -> Result<MiningReport>
where
    I: IntoIterator<Item = (usize, Graph)>,
{
    let mut report = MiningReport {
        mode,
        graphs_scanned: 0,
        graphs_skipped: 0,
        pairs_checked: 0,
        exceptions: Vec::new(),
    };
    for (index, g) in stream {
        let candidates: Vec<usize> = match mode {
            MiningMode::Trees if g.is_tree() => {
                g.vertices().filter(|&v| g.degree(v) >= 2).collect()
            }
            MiningMode::TwoConnected if g.is_connected() => {
                let tree = block_cut_tree(&g)?;
                let mut vs: Vec<usize> = tree
                    .red_blocks()
                    .flat_map(|b| tree.blocks[b].iter().copied())
                    .collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            }
            _ => {
                report.graphs_skipped += 1;
                continue;
            }
        };
        report.graphs_scanned += 1;
        if candidates.is_empty() {
            continue;
        }
        let profile = vertex_profile(&g, budget)?;
        let n = g.order();
        let bound = BigUint::from(2 * n);
        let mut graph6 = None;
        for x in candidates {
            report.pairs_checked += 1;
            if profile[x] < bound {
                report.exceptions.push(Exception {
                    graph_index: index,
                    graph6: graph6.get_or_insert_with(|| encode_graph6(&g)).clone(),
                    n,
                    vertex: x,
                    degree: g.degree(x),
                    count: profile[x].clone(),
                });
            }
        }
    }
    Ok(report)
}
