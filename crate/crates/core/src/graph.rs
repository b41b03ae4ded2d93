//! Simple undirected graphs on dense vertex ids, vertex sets, components and
//! shortest-distance spanning trees.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted by [`Graph::new`].
pub const MAX_ORDER: usize = 16384;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted, which makes every traversal below visit
/// vertices in ascending id order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph of order `n`, `1 <= n <= MAX_ORDER`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("a graph needs at least one vertex".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from already validated, sorted neighbour lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(!adj.is_empty());
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self, &VertexSet::default()).len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    /// True when the graph is the path `v0 - v1 - ... - v(n-1)` up to relabeling.
    pub fn is_path(&self) -> bool {
        let n = self.order();
        if n == 1 {
            return true;
        }
        self.is_tree() && self.adj.iter().all(|l| l.len() <= 2)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() == n - 1)
    }

    /// Subgraph induced by `vertices` (sorted, distinct), relabeled to
    /// `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> Graph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A set of vertex ids, stored sorted and without repeats.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(out)
    }

    /// Bit mask of the members; `None` if some member is 64 or larger.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &v| (v < 64).then(|| acc | (1u64 << v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn smallest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// True when the members induce a connected subgraph of `g`.
    pub fn is_connected_in(&self, g: &Graph) -> bool {
        let Some(start) = self.smallest() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if self.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.len()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Connected components of `g - removed`, each sorted, ordered by smallest
/// member. Ids in `removed` that are not vertices of `g` are ignored.
pub fn connected_components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in removed.iter().filter(|&&v| v < n) {
        seen[v] = true;
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(VertexSet(members));
    }
    out
}

/// Breadth-first spanning tree whose depths are graph distances from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl SpanningTree {
    /// Tree path from `v` up to the root, `v` first.
    pub fn path_to_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path
    }

    /// Tree edges `(parent, child)` ordered by child id.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c)))
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }
}

/// Shortest-distance spanning tree rooted at `root`.
///
/// Levels are expanded in ascending id order and every non-root vertex hangs
/// from its smallest-id neighbour one level up.
pub fn bfs_spanning_tree(g: &Graph, root: usize) -> Result<SpanningTree> {
    let n = g.order();
    if root >= n {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            order: n,
        });
    }
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    depth[root] = 0;
    let mut level = vec![root];
    let mut queue = VecDeque::new();
    let mut reached = 1;
    while !level.is_empty() {
        level.sort_unstable();
        queue.extend(level.drain(..));
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    reached += 1;
                    level.push(w);
                }
            }
        }
        for &w in &level {
            // Neighbour lists are sorted, so the first hit is the smallest id.
            parent[w] = g
                .neighbors(w)
                .iter()
                .copied()
                .find(|&u| depth[u] == depth[w] - 1);
        }
    }
    if reached != n {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTree {
        root,
        parent,
        depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.add_edge(0, 2), Err(Error::DuplicateEdge(0, 2)));
        assert!(Graph::new(0).is_err());
        assert_eq!(
            Graph::new(MAX_ORDER + 1),
            Err(Error::TooLarge(MAX_ORDER + 1))
        );
    }

    #[test]
    fn components_of_p3_without_middle() {
        let comps = connected_components(&path(3), &VertexSet::singleton(1));
        assert_eq!(
            comps,
            vec![VertexSet::singleton(0), VertexSet::singleton(2)]
        );
        assert_eq!(connected_components(&path(5), &VertexSet::new()).len(), 1);
    }

    #[test]
    fn components_of_k4_bowtie_at_cut() {
        // Two K4 blocks {0,1,2,3} and {3,4,5,6} sharing vertex 3.
        let mut edges = Vec::new();
        for block in [[0, 1, 2, 3], [3, 4, 5, 6]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((block[i], block[j]));
                }
            }
        }
        let g = Graph::from_edges(7, edges).unwrap();
        let comps = connected_components(&g, &VertexSet::singleton(3));
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn bfs_tree_on_c4_uses_smallest_parent() {
        // x=0, a=1, b=2, y=3 on the cycle x-a-y-b-x.
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        let t = bfs_spanning_tree(&g, 0).unwrap();
        let edges: Vec<_> = t.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(t.depth, vec![0, 1, 1, 2]);
        assert_eq!(t.path_to_root(3), vec![3, 1, 0]);
    }

    #[test]
    fn bfs_tree_of_even_cycle_drops_one_edge_at_antipode() {
        let n = 8;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let t = bfs_spanning_tree(&g, 0).unwrap();
        let tree: Vec<_> = t.edges().map(|(p, c)| (p.min(c), p.max(c))).collect();
        let missing: Vec<_> = g.edges().filter(|e| !tree.contains(e)).collect();
        assert_eq!(missing.len(), 1);
        let (u, v) = missing[0];
        assert!(
            u == n / 2 || v == n / 2,
            "omitted edge {missing:?} not at the antipode"
        );
    }

    #[test]
    fn bfs_tree_of_tree_is_itself() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let t = bfs_spanning_tree(&g, 2).unwrap();
        let mut tree: Vec<_> = t.edges().map(|(p, c)| (p.min(c), p.max(c))).collect();
        tree.sort();
        assert_eq!(tree, g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn bfs_tree_rejects_disconnected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(bfs_spanning_tree(&g, 0), Err(Error::Disconnected));
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [5, 1, 3, 1].into_iter().collect();
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(s.to_mask(), Some(0b101010));
        assert_eq!(VertexSet::from_mask(0b101010), s);
        assert_eq!(s.to_string(), "{1,3,5}");
        let p = path(4);
        assert!(VertexSet::from_iter([1, 2]).is_connected_in(&p));
        assert!(!VertexSet::from_iter([0, 2]).is_connected_in(&p));
    }

    #[test]
    fn shape_predicates() {
        assert!(path(1).is_path());
        assert!(path(5).is_path());
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_tree() && !star.is_path());
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(tri.is_complete() && !tri.is_tree());
    }
}
