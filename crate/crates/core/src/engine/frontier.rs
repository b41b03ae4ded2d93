//! Frontier recursion over connected vertex sets of a small local graph.
//!
//! Starting from a connected seed, the recursion branches on the smallest
//! frontier vertex (neighbour of the current set, neither in it nor
//! forbidden): include it, or forbid it. Every connected superset of the
//! seed that avoids the initial forbidden set is reached at exactly one leaf.

use crate::budget::Budget;
use crate::error::Result;

use super::Tally;

/// Fixed-universe vertex sets used by the recursion.
pub(crate) trait Bits: Clone {
    fn empty(universe: usize) -> Self;
    fn insert(&mut self, i: usize);
    fn remove(&mut self, i: usize);
    fn lowest(&self) -> Option<usize>;
    fn count(&self) -> u32;
    /// `self = (self | add) & !mask`
    fn merge_without(&mut self, add: &Self, mask_a: &Self, mask_b: &Self);
}

macro_rules! word_bits {
    ($t:ty) => {
        impl Bits for $t {
            #[inline]
            fn empty(_: usize) -> Self {
                0
            }
            #[inline]
            fn insert(&mut self, i: usize) {
                *self |= 1 << i;
            }
            #[inline]
            fn remove(&mut self, i: usize) {
                *self &= !(1 << i);
            }
            #[inline]
            fn lowest(&self) -> Option<usize> {
                (*self != 0).then(|| self.trailing_zeros() as usize)
            }
            #[inline]
            fn count(&self) -> u32 {
                self.count_ones()
            }
            #[inline]
            fn merge_without(&mut self, add: &Self, a: &Self, b: &Self) {
                *self = (*self | *add) & !(*a | *b);
            }
        }
    };
}

word_bits!(u64);
word_bits!(u128);

/// Heap-backed set for universes wider than 128.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct WideBits(Box<[u64]>);

impl Bits for WideBits {
    fn empty(universe: usize) -> Self {
        WideBits(vec![0; universe.div_ceil(64).max(1)].into_boxed_slice())
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn lowest(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn merge_without(&mut self, add: &Self, a: &Self, b: &Self) {
        for (k, w) in self.0.iter_mut().enumerate() {
            *w = (*w | add.0[k]) & !(a.0[k] | b.0[k]);
        }
    }
}

/// Local graph with adjacency stored as bit sets.
pub(crate) struct LocalGraph<B> {
    pub adj: Vec<B>,
}

impl<B: Bits> LocalGraph<B> {
    pub fn from_lists(lists: &[Vec<usize>]) -> Self {
        let n = lists.len();
        let adj = lists
            .iter()
            .map(|l| {
                let mut b = B::empty(n);
                for &w in l {
                    b.insert(w);
                }
                b
            })
            .collect();
        LocalGraph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }
}

/// What the recursion accumulates at its leaves.
pub(crate) trait Sink {
    /// Running value carried along the include branches.
    type Carry: Clone;
    fn include(&self, carry: &Self::Carry, v: usize) -> Self::Carry;
    fn leaf<B: Bits>(&mut self, carry: &Self::Carry, set: &B);
}

/// Counts sets and sums their sizes, ignoring `uncounted` vertices in the size.
pub(crate) struct UnitSink {
    pub count: u128,
    pub size: u128,
    pub uncounted: u32,
}

impl Sink for UnitSink {
    type Carry = ();
    #[inline]
    fn include(&self, _: &(), _: usize) {}
    #[inline]
    fn leaf<B: Bits>(&mut self, _: &(), set: &B) {
        self.count += 1;
        self.size += u128::from(set.count() - self.uncounted);
    }
}

/// Sums the product of per-vertex tallies over the reached sets.
pub(crate) struct WeightedSink<'a> {
    pub weights: &'a [Tally],
    pub total: Tally,
}

impl Sink for WeightedSink<'_> {
    type Carry = Tally;
    fn include(&self, carry: &Tally, v: usize) -> Tally {
        carry.times(&self.weights[v])
    }
    fn leaf<B: Bits>(&mut self, carry: &Tally, _: &B) {
        self.total += carry;
    }
}

/// Visits every connected superset of `seed` inside `graph` that avoids
/// `forbidden`. `seed` must be connected and disjoint from `forbidden`.
pub(crate) fn explore<B: Bits, S: Sink>(
    graph: &LocalGraph<B>,
    seed: &B,
    forbidden: &B,
    carry: S::Carry,
    sink: &mut S,
    budget: &Budget,
) -> Result<()> {
    let mut frontier = B::empty(graph.order());
    let mut i = seed.clone();
    while let Some(v) = i.lowest() {
        i.remove(v);
        frontier.merge_without(&graph.adj[v], seed, forbidden);
    }
    let mut set = seed.clone();
    let mut forbidden = forbidden.clone();
    descend(
        graph,
        &mut set,
        &mut forbidden,
        frontier,
        carry,
        sink,
        budget,
    )
}

fn descend<B: Bits, S: Sink>(
    graph: &LocalGraph<B>,
    set: &mut B,
    forbidden: &mut B,
    frontier: B,
    carry: S::Carry,
    sink: &mut S,
    budget: &Budget,
) -> Result<()> {
    budget.charge(1)?;
    let Some(v) = frontier.lowest() else {
        sink.leaf(&carry, set);
        return Ok(());
    };
    let mut rest = frontier;
    rest.remove(v);

    set.insert(v);
    let mut grown = rest.clone();
    grown.merge_without(&graph.adj[v], set, forbidden);
    let next = sink.include(&carry, v);
    descend(graph, set, forbidden, grown, next, sink, budget)?;
    set.remove(v);

    forbidden.insert(v);
    descend(graph, set, forbidden, rest, carry, sink, budget)?;
    forbidden.remove(v);
    Ok(())
}
