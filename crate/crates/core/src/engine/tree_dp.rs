//! Weighted dynamic programme over the block-cut tree.
//!
//! Rooting the block-cut tree at a vertex `r`, every vertex `u` owns the
//! subgraph hanging below it. For that subgraph we keep
//!   * `R(u)`: connected sets containing `u`,
//!   * `T(u) - R(u)`: connected sets avoiding `u`,
//! as (count, size-sum) tallies. A block `B` entered from `p` contributes
//!   * to `R(p)`: the sum over connected `U` in `B` with `p` in `U` of the
//!     product of `R(u)` for `u` in `U - p`;
//!   * to `T(p) - R(p)`: the same sum over connected `U` inside `B - p`,
//!     plus `T(u) - R(u)` for every `u` in `B - p`.
//! Only the per-block sums are exponential, so the cost is confined to the
//! largest block.

use crate::blocks::block_cut_tree;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

use super::frontier::{explore, Bits, LocalGraph, UnitSink, WeightedSink, WideBits};
use super::Tally;

/// Tallies for the whole graph seen from `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RootedTotals {
    /// Connected sets containing the root.
    pub rooted: Tally,
    /// All connected sets.
    pub total: Tally,
}

pub(crate) fn block_tree_totals(g: &Graph, root: usize, budget: &Budget) -> Result<RootedTotals> {
    let tree = block_cut_tree(g)?;
    let n = g.order();
    let mut vertex_blocks = vec![Vec::new(); n];
    for (b, members) in tree.blocks.iter().enumerate() {
        for &v in members {
            vertex_blocks[v].push(b);
        }
    }

    // Blocks in breadth-first order from the root, each with its top vertex.
    let mut visited = vec![false; tree.blocks.len()];
    let mut order = Vec::with_capacity(tree.blocks.len());
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &b in &vertex_blocks[v] {
            if visited[b] {
                continue;
            }
            visited[b] = true;
            order.push((b, v));
            for &u in &tree.blocks[b] {
                if u != v && vertex_blocks[u].len() > 1 {
                    queue.push_back(u);
                }
            }
        }
    }

    let mut rooted = vec![Tally::unit_vertex(); n];
    let mut avoiding = vec![Tally::zero(); n];
    let mut has_children = vec![false; n];

    for &(b, top) in order.iter().rev() {
        let members = tree.blocks[b].as_slice();
        let (with_top, without_top) = match members.len() {
            1 => (Tally::one(), Tally::zero()),
            2 => {
                let u = if members[0] == top {
                    members[1]
                } else {
                    members[0]
                };
                let mut below = rooted[u].clone();
                below += &avoiding[u];
                let mut with_top = Tally::one();
                with_top += &rooted[u];
                (with_top, below)
            }
            _ => {
                let weights: Vec<Tally> = members.iter().map(|&u| rooted[u].clone()).collect();
                let unit = members.iter().all(|&u| u == top || !has_children[u]);
                let (with_top, mut without_top) =
                    block_sums(g, members, top, &weights, unit, budget)?;
                for &u in members.iter().filter(|&&u| u != top) {
                    without_top += &avoiding[u];
                }
                (with_top, without_top)
            }
        };
        rooted[top] = rooted[top].times(&with_top);
        avoiding[top] += &without_top;
        has_children[top] = true;
    }

    let rooted_root = rooted[root].clone();
    let mut total = rooted_root.clone();
    total += &avoiding[root];
    Ok(RootedTotals {
        rooted: rooted_root,
        total,
    })
}

/// The two weighted sums for one block of order at least 3.
fn block_sums(
    g: &Graph,
    members: &[usize],
    top: usize,
    weights: &[Tally],
    unit: bool,
    budget: &Budget,
) -> Result<(Tally, Tally)> {
    let k = members.len();
    if k <= 64 {
        block_sums_with::<u64>(g, members, top, weights, unit, budget)
    } else if k <= 128 {
        block_sums_with::<u128>(g, members, top, weights, unit, budget)
    } else {
        block_sums_with::<WideBits>(g, members, top, weights, unit, budget)
    }
}

fn block_sums_with<B: Bits>(
    g: &Graph,
    members: &[usize],
    top: usize,
    weights: &[Tally],
    unit: bool,
    budget: &Budget,
) -> Result<(Tally, Tally)> {
    let k = members.len();
    let lists: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|w| members.binary_search(w).ok())
                .collect()
        })
        .collect();
    let local = LocalGraph::<B>::from_lists(&lists);
    let top_local = members
        .binary_search(&top)
        .expect("top vertex lies in its block");

    let single = |v: usize| {
        let mut s = B::empty(k);
        s.insert(v);
        s
    };

    // Sets containing the top vertex; the top itself contributes no size.
    let with_top = {
        let seed = single(top_local);
        let none = B::empty(k);
        if unit {
            let mut sink = UnitSink {
                count: 0,
                size: 0,
                uncounted: 1,
            };
            explore(&local, &seed, &none, (), &mut sink, budget)?;
            Tally::from_counts(sink.count, sink.size)
        } else {
            let mut sink = WeightedSink {
                weights,
                total: Tally::zero(),
            };
            explore(&local, &seed, &none, Tally::one(), &mut sink, budget)?;
            sink.total
        }
    };

    // Connected sets of the block minus the top, keyed by their smallest vertex.
    let mut without_top = Tally::zero();
    let mut forbidden = single(top_local);
    let mut unit_sink = UnitSink {
        count: 0,
        size: 0,
        uncounted: 0,
    };
    for v in (0..k).filter(|&v| v != top_local) {
        let seed = single(v);
        if unit {
            explore(&local, &seed, &forbidden, (), &mut unit_sink, budget)?;
        } else {
            let mut sink = WeightedSink {
                weights,
                total: Tally::zero(),
            };
            explore(
                &local,
                &seed,
                &forbidden,
                weights[v].clone(),
                &mut sink,
                budget,
            )?;
            without_top += &sink.total;
        }
        forbidden.insert(v);
    }
    if unit {
        without_top = Tally::from_counts(unit_sink.count, unit_sink.size);
    }
    Ok((with_top, without_top))
}
