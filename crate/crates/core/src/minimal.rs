//! Minimal sets of `G - x` relative to a shortest-distance spanning tree.
//!
//! For every connected set `U` of `G - x`, `v_U` is the member of least
//! depth (ties to the smallest id) and `p_U` the tree path from `v_U` to
//! `x`. The closure `U ∪ p_U` is a connected set of `G` containing `x`.
//! Sets sharing a closure `Q` have nested paths; the one with the longest
//! path is the minimal set `U_Q`. The family of minimal sets partitions
//! `C(G - x)` into the chains `Y(U)`, so `N(G - x)` equals the total path
//! length over minimal sets.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::json;

use crate::budget::Budget;
use crate::engine::frontier::{explore, Bits, LocalGraph, Sink};
use crate::engine::rooted_stats;
use crate::error::{Error, Result};
use crate::graph::{bfs_spanning_tree, Graph, SpanningTree, VertexSet};
use crate::theorems::{CheckResult, Status};

/// Cap on the number of connected sets materialized for one family.
pub const MAX_MATERIALIZED: usize = 1 << 22;

/// One connected set of `G - x`, as bit masks over vertex ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyEntry {
    /// `U`
    pub set: u64,
    /// `v_U`
    pub anchor: usize,
    /// Edge count of `p_U`.
    pub path_len: usize,
    /// `Q = U ∪ p_U`
    pub closure: u64,
}

impl FamilyEntry {
    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_mask(self.set)
    }
}

#[derive(Clone, Debug)]
pub struct MinimalFamily {
    pub root: usize,
    pub tree: SpanningTree,
    /// Every connected set of `G - x`, ordered by mask.
    pub entries: Vec<FamilyEntry>,
    /// Indices into `entries` of the minimal sets, ascending.
    pub minimals: Vec<usize>,
    /// Mean path length over the minimal sets; `None` for `K_1`.
    pub av: Option<BigRational>,
}

impl MinimalFamily {
    /// Tree path of an entry from `v_U` to the root, `v_U` first.
    pub fn path(&self, entry: &FamilyEntry) -> Vec<usize> {
        self.tree.path_to_root(entry.anchor)
    }

    pub fn minimal_entries(&self) -> impl Iterator<Item = &FamilyEntry> + '_ {
        self.minimals.iter().map(|&i| &self.entries[i])
    }

    pub fn path_len_sum(&self) -> usize {
        self.minimal_entries().map(|e| e.path_len).sum()
    }

    /// The chain `Y(U) = { U ∪ {p_0..p_j} : 0 <= j < |p_U| }`.
    pub fn chain(&self, entry: &FamilyEntry) -> Vec<u64> {
        let path = self.path(entry);
        let mut cur = entry.set;
        let mut out = Vec::with_capacity(entry.path_len);
        for &p in &path[..entry.path_len] {
            cur |= 1 << p;
            out.push(cur);
        }
        out
    }
}

struct CollectSink {
    sets: Vec<u64>,
    overflow: bool,
}

impl Sink for CollectSink {
    type Carry = ();
    fn include(&self, _: &(), _: usize) {}
    fn leaf<B: Bits>(&mut self, _: &(), set: &B) {
        if self.sets.len() == MAX_MATERIALIZED {
            self.overflow = true;
            return;
        }
        let mut mask = 0u64;
        let mut s = set.clone();
        while let Some(v) = s.lowest() {
            s.remove(v);
            mask |= 1 << v;
        }
        self.sets.push(mask);
    }
}

/// Every connected set of `g` avoiding `excluded`, as masks (order <= 64).
pub(crate) fn connected_set_masks(g: &Graph, excluded: u64, budget: &Budget) -> Result<Vec<u64>> {
    let n = g.order();
    if n > 64 {
        return Err(Error::BudgetExceeded {
            limit: budget.limit(),
        });
    }
    let lists: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let local = LocalGraph::<u64>::from_lists(&lists);
    let mut sink = CollectSink {
        sets: Vec::new(),
        overflow: false,
    };
    let mut forbidden = excluded;
    for v in (0..n).filter(|&v| excluded >> v & 1 == 0) {
        explore(&local, &(1u64 << v), &forbidden, (), &mut sink, budget)?;
        if sink.overflow {
            return Err(Error::BudgetExceeded {
                limit: budget.limit(),
            });
        }
        forbidden |= 1 << v;
    }
    Ok(sink.sets)
}

/// Builds the minimal family of `G - x`.
pub fn minimal_family(g: &Graph, x: usize, budget: &Budget) -> Result<MinimalFamily> {
    let tree = bfs_spanning_tree(g, x)?;
    let mut sets = connected_set_masks(g, 1 << x, budget)?;
    sets.sort_unstable();

    let path_masks: Vec<u64> = g
        .vertices()
        .map(|v| tree.path_to_root(v).iter().fold(0u64, |m, &p| m | 1 << p))
        .collect();

    let entries: Vec<FamilyEntry> = sets
        .into_iter()
        .map(|set| {
            let anchor = VertexSet::from_mask(set)
                .iter()
                .copied()
                .min_by_key(|&v| (tree.depth[v], v))
                .expect("connected sets are nonempty");
            FamilyEntry {
                set,
                anchor,
                path_len: tree.depth[anchor],
                closure: set | path_masks[anchor],
            }
        })
        .collect();

    let mut best: HashMap<u64, usize> = HashMap::new();
    for (i, e) in entries.iter().enumerate() {
        best.entry(e.closure)
            .and_modify(|j| {
                if entries[*j].path_len < e.path_len {
                    *j = i;
                }
            })
            .or_insert(i);
    }
    let mut minimals: Vec<usize> = best.into_values().collect();
    minimals.sort_unstable();

    let av = (!minimals.is_empty()).then(|| {
        let sum: usize = minimals.iter().map(|&i| entries[i].path_len).sum();
        BigRational::new(sum.into(), minimals.len().into())
    });
    Ok(MinimalFamily {
        root: x,
        tree,
        entries,
        minimals,
        av,
    })
}

/// Checks `av(G,x) (N(G,x) - 1) >= N(G - x)` together with the two counting
/// identities behind it: `N(G - x)` is the total path length over minimal
/// sets, and `N(G,x) >= |M| + 1`.
pub fn check_av_inequality(g: &Graph, x: usize, budget: &Budget) -> Result<CheckResult> {
    let family = minimal_family(g, x, budget)?;
    let rooted = rooted_stats(g, &VertexSet::singleton(x), budget)?.count;
    let outside = BigUint::from(family.entries.len());
    let minimal_count = family.minimals.len();
    let path_sum = family.path_len_sum();

    let identity_sum = BigUint::from(path_sum) == outside;
    let identity_count = rooted >= BigUint::from(minimal_count + 1);
    let (holds, equality) = match &family.av {
        Some(av) => {
            let lhs = av * BigRational::from_integer((rooted.clone() - 1u32).into());
            let rhs = BigRational::from_integer(outside.clone().into());
            (lhs >= rhs, lhs == rhs)
        }
        None => (true, true),
    };
    let status = if holds && identity_sum && identity_count {
        Status::Pass
    } else {
        Status::Fail
    };
    let witness = json!({
        "x": x,
        "av": family.av.as_ref().map(ToString::to_string),
        "N(G,x)": rooted.to_string(),
        "N(G-x)": outside.to_string(),
        "minimals": minimal_count,
        "path_len_sum": path_sum,
        "identity_sum": identity_sum,
        "identity_count": identity_count,
        "equality": equality,
    });
    Ok(CheckResult::standalone(
        "thm_av",
        Some(format!("x={x}")),
        status,
        Some(witness),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn triangle() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = minimal_family(&k3, 0, &Budget::default()).unwrap();
        let sets: Vec<_> = f.minimal_entries().map(|e| (e.set, e.path_len)).collect();
        assert_eq!(sets, vec![(0b010, 1), (0b100, 1), (0b110, 1)]);
        assert_eq!(f.av, Some(q(1, 1)));
        let r = check_av_inequality(&k3, 0, &Budget::default()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.witness.unwrap()["equality"], true);
    }

    #[test]
    fn single_edge() {
        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let f = minimal_family(&p2, 0, &Budget::default()).unwrap();
        assert_eq!(f.minimals.len(), 1);
        assert_eq!(f.av, Some(q(1, 1)));
    }

    #[test]
    fn four_cycle_by_hand() {
        // x=0, a=1, b=2, y=3 on x-a-y-b-x.
        let c4 = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        let f = minimal_family(&c4, 0, &Budget::default()).unwrap();
        let mut got: Vec<_> = f
            .minimal_entries()
            .map(|e| (e.vertices().as_slice().to_vec(), e.path_len))
            .collect();
        got.sort();
        let want = vec![
            (vec![1], 1),
            (vec![1, 2, 3], 1),
            (vec![2], 1),
            (vec![2, 3], 1),
            (vec![3], 2),
        ];
        assert_eq!(got, want);
        assert_eq!(f.av, Some(q(6, 5)));
        assert_eq!(f.path_len_sum(), 6);
        assert_eq!(f.entries.len(), 6);

        let r = check_av_inequality(&c4, 0, &Budget::default()).unwrap();
        assert_eq!(r.status, Status::Pass);
        let w = r.witness.unwrap();
        assert_eq!(w["N(G,x)"], "7");
        assert_eq!(w["equality"], false);
    }

    #[test]
    fn singletons_are_minimal() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)]).unwrap();
        for x in g.vertices() {
            let f = minimal_family(&g, x, &Budget::default()).unwrap();
            for v in g.vertices().filter(|&v| v != x) {
                assert!(
                    f.minimal_entries().any(|e| e.set == 1 << v),
                    "{{{v}}} not minimal at x={x}"
                );
            }
        }
    }

    #[test]
    fn k1_has_empty_family() {
        let f = minimal_family(&Graph::new(1).unwrap(), 0, &Budget::default()).unwrap();
        assert!(f.entries.is_empty() && f.av.is_none());
        let r = check_av_inequality(&Graph::new(1).unwrap(), 0, &Budget::default()).unwrap();
        assert_eq!(r.status, Status::Pass);
    }
}
