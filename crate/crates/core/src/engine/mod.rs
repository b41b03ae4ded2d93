//! Exact counts `N`, size sums `S`, averages `A = S/N` and densities
//! `D = A/n` of connected vertex sets, globally and rooted at a connected set.

mod decomposition;
pub(crate) mod frontier;
mod tree_dp;

use std::ops::AddAssign;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::blocks::block_cut_tree;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexSet};

pub use decomposition::{cut_decomposition, CutDecomposition};
use frontier::{explore, Bits, LocalGraph, UnitSink, WideBits};
use tree_dp::block_tree_totals;

/// A (number of sets, sum of their sizes) pair.
///
/// Tallies of independent choices multiply as
/// `(a, s) * (b, t) = (a b, a t + s b)`; disjoint families add.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub count: BigUint,
    pub size: BigUint,
}

impl Tally {
    pub fn zero() -> Self {
        Tally::default()
    }

    /// The empty choice: one way, no vertices.
    pub fn one() -> Self {
        Tally {
            count: BigUint::one(),
            size: BigUint::zero(),
        }
    }

    /// A single vertex.
    pub fn unit_vertex() -> Self {
        Tally {
            count: BigUint::one(),
            size: BigUint::one(),
        }
    }

    pub fn from_counts(count: u128, size: u128) -> Self {
        Tally {
            count: count.into(),
            size: size.into(),
        }
    }

    pub fn times(&self, other: &Tally) -> Tally {
        Tally {
            count: &self.count * &other.count,
            size: &self.count * &other.size + &self.size * &other.count,
        }
    }
}

impl AddAssign<&Tally> for Tally {
    fn add_assign(&mut self, rhs: &Tally) {
        self.count += &rhs.count;
        self.size += &rhs.size;
    }
}

pub(crate) fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Global statistics of the connected sets of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnStats {
    pub n: usize,
    /// `N(G)`
    pub count: BigUint,
    /// `S(G)`
    pub total_size: BigUint,
    /// `A(G) = S/N`
    #[serde(serialize_with = "crate::serialize_ratio")]
    pub average: BigRational,
    /// `D(G) = A/n`
    #[serde(serialize_with = "crate::serialize_ratio")]
    pub density: BigRational,
}

impl ConnStats {
    pub fn new(n: usize, count: BigUint, total_size: BigUint) -> Self {
        assert!(!count.is_zero(), "a graph always has a connected set");
        let average = ratio(&total_size, &count);
        let density = &average / BigRational::from_integer(BigInt::from(n));
        ConnStats {
            n,
            count,
            total_size,
            average,
            density,
        }
    }

    fn from_tally(n: usize, t: Tally) -> Self {
        ConnStats::new(n, t.count, t.size)
    }
}

/// Statistics of the connected sets containing a fixed connected set `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedStats {
    pub root: VertexSet,
    /// `N(G,H)`
    pub count: BigUint,
    /// `S(G,H)`
    pub total_size: BigUint,
    /// `A(G,H)`
    #[serde(serialize_with = "crate::serialize_ratio")]
    pub average: BigRational,
}

impl RootedStats {
    fn new(root: VertexSet, t: Tally) -> Self {
        let average = ratio(&t.size, &t.count);
        RootedStats {
            root,
            count: t.count,
            total_size: t.size,
            average,
        }
    }
}

/// Reference implementation: tests every nonempty vertex subset.
///
/// Disconnected graphs are accepted. Orders above 63 are rejected as over
/// budget, as is any graph with more than `budget` subsets.
pub fn stats_bruteforce(g: &Graph, budget: &Budget) -> Result<ConnStats> {
    let n = g.order();
    if n > 63 {
        return Err(Error::BudgetExceeded {
            limit: budget.limit(),
        });
    }
    let subsets = (1u64 << n) - 1;
    budget.charge(subsets)?;
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut count = 0u128;
    let mut size = 0u128;
    for mask in 1..=subsets {
        let start = mask & mask.wrapping_neg();
        let mut reached = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & mask & !reached;
            reached |= new;
            frontier |= new;
        }
        if reached == mask {
            count += 1;
            size += u128::from(mask.count_ones());
        }
    }
    Ok(ConnStats::new(n, count.into(), size.into()))
}

/// Exact statistics of a connected graph.
///
/// When the graph has a cut vertex, the smallest-id one `x` splits it into
/// components `G_1..G_M` of `G - x` and
/// `N(G) = N(G,x) + sum N(G_i)`, `S(G) = S(G,x) + sum S(G_i)`, with
/// `N(G,x)` and `S(G,x)` assembled from the rooted counts of `G_i + x`.
/// Component quantities come from the block-cut tree programme, so the
/// exponential work is confined to the largest block.
pub fn stats(g: &Graph, budget: &Budget) -> Result<ConnStats> {
    let tree = block_cut_tree(g)?;
    match tree.cut_vertices.smallest() {
        Some(x) => {
            let d = cut_decomposition(g, x, budget)?;
            let count = d.rooted_count_product() + d.component_count.iter().sum::<BigUint>();
            let size = d.rooted_size_total() + d.component_size.iter().sum::<BigUint>();
            Ok(ConnStats::new(g.order(), count, size))
        }
        None => Ok(ConnStats::from_tally(
            g.order(),
            block_tree_totals(g, 0, budget)?.total,
        )),
    }
}

/// Statistics of any graph: connected sets lie inside components, so the
/// counts and sizes of the components add up.
pub fn stats_by_components(g: &Graph, budget: &Budget) -> Result<ConnStats> {
    if g.is_connected() {
        return stats(g, budget);
    }
    let mut count = BigUint::zero();
    let mut size = BigUint::zero();
    for comp in connected_components(g, &VertexSet::new()) {
        let s = stats(&g.induced_subgraph(&comp), budget)?;
        count += s.count;
        size += s.total_size;
    }
    Ok(ConnStats::new(g.order(), count, size))
}

/// Rooted statistics `N(G,H)`, `S(G,H)`, `A(G,H)`.
pub fn rooted_stats(g: &Graph, root: &VertexSet, budget: &Budget) -> Result<RootedStats> {
    let n = g.order();
    if root.is_empty() {
        return Err(Error::EmptyRoot);
    }
    if let Some(&v) = root.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !root.is_connected_in(g) {
        return Err(Error::RootNotConnected);
    }
    if root.len() == 1 {
        let x = root.as_slice()[0];
        return Ok(RootedStats::new(
            root.clone(),
            block_tree_totals(g, x, budget)?.rooted,
        ));
    }
    let t = if n <= 64 {
        supersets::<u64>(g, root, budget)
    } else if n <= 128 {
        supersets::<u128>(g, root, budget)
    } else {
        supersets::<WideBits>(g, root, budget)
    }?;
    Ok(RootedStats::new(root.clone(), t))
}

fn supersets<B: Bits>(g: &Graph, root: &VertexSet, budget: &Budget) -> Result<Tally> {
    let n = g.order();
    let lists: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let local = LocalGraph::<B>::from_lists(&lists);
    let mut seed = B::empty(n);
    for &v in root {
        seed.insert(v);
    }
    let mut sink = UnitSink {
        count: 0,
        size: 0,
        uncounted: 0,
    };
    explore(&local, &seed, &B::empty(n), (), &mut sink, budget)?;
    Ok(Tally::from_counts(sink.count, sink.size))
}

/// `N(G,x)` for every vertex `x`, in vertex order.
pub fn vertex_profile(g: &Graph, budget: &Budget) -> Result<Vec<BigUint>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    g.vertices()
        .map(|x| Ok(block_tree_totals(g, x, budget)?.rooted.count))
        .collect()
}
