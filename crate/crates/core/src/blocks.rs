//! Biconnected blocks, the block-cut tree and near-tree classification.
//!
//! A block is red when it has at least three vertices; a cut vertex is blue
//! when it lies in at least three blocks. Leaf blocks are the leaves of the
//! block-cut tree; when the tree is a single node that node counts as a leaf.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockColor {
    Red,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CutColor {
    Blue,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockPosition {
    Leaf,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// Vertex sets of the blocks, ordered lexicographically.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// For block `b`, the cut vertices it contains (its tree neighbours).
    pub block_cuts: Vec<Vec<usize>>,
    /// For the `i`-th cut vertex, the indices of the blocks containing it.
    pub cut_blocks: Vec<Vec<usize>>,
    pub block_color: Vec<BlockColor>,
    /// Parallel to `cut_vertices`.
    pub cut_color: Vec<CutColor>,
    pub block_position: Vec<BlockPosition>,
}

impl BlockCutTree {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.contains(v)
    }

    pub fn red_blocks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.blocks.len()).filter(|&b| self.block_color[b] == BlockColor::Red)
    }

    pub fn is_leaf(&self, b: usize) -> bool {
        self.block_position[b] == BlockPosition::Leaf
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        match self.cut_vertices.as_slice().binary_search(&v) {
            Ok(i) => self.cut_blocks[i].clone(),
            Err(_) => (0..self.blocks.len())
                .filter(|&b| self.blocks[b].contains(v))
                .collect(),
        }
    }

    /// Degree of cut vertex `v` in the block-cut tree.
    pub fn cut_degree(&self, v: usize) -> Option<usize> {
        let i = self.cut_vertices.as_slice().binary_search(&v).ok()?;
        Some(self.cut_blocks[i].len())
    }
}

/// Block-cut tree of a connected graph.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    let mut blocks = biconnected_blocks(g)?;
    blocks.sort();

    let n = g.order();
    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            membership[v] += 1;
        }
    }
    let cut_vertices: VertexSet = (0..n).filter(|&v| membership[v] >= 2).collect();
    let block_cuts: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| membership[v] >= 2).collect())
        .collect();
    let mut cut_blocks = vec![Vec::new(); cut_vertices.len()];
    for (bi, cuts) in block_cuts.iter().enumerate() {
        for &c in cuts {
            let i = cut_vertices.as_slice().binary_search(&c).unwrap();
            cut_blocks[i].push(bi);
        }
    }
    let block_color = blocks
        .iter()
        .map(|b| {
            if b.len() >= 3 {
                BlockColor::Red
            } else {
                BlockColor::Plain
            }
        })
        .collect();
    let cut_color = cut_blocks
        .iter()
        .map(|bs| {
            if bs.len() >= 3 {
                CutColor::Blue
            } else {
                CutColor::Plain
            }
        })
        .collect();
    let block_position = block_cuts
        .iter()
        .map(|cuts| {
            if cuts.len() <= 1 {
                BlockPosition::Leaf
            } else {
                BlockPosition::Interior
            }
        })
        .collect();

    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        block_cuts,
        cut_blocks,
        block_color,
        cut_color,
        block_position,
    })
}

/// Vertex sets of the blocks of a connected graph (Tarjan's lowpoint
/// algorithm with an edge stack, iterative).
fn biconnected_blocks(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n == 1 {
        return Ok(vec![VertexSet::singleton(0)]);
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbour position)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    let mut timer = 1;

    while let Some(frame) = frames.last_mut() {
        let (v, parent, pos) = *frame;
        if let Some(&w) = g.neighbors(v).get(pos) {
            frame.2 += 1;
            if w == parent {
                continue;
            }
            if disc[w] == UNSEEN {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((v, w));
                frames.push((w, v, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut members = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    members.push(a);
                    members.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                blocks.push(members.into_iter().collect());
            }
        }
    }
    if disc.contains(&UNSEEN) {
        return Err(Error::Disconnected);
    }
    Ok(blocks)
}

/// True for 2-connected graphs (at least three vertices, no cut vertex).
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && matches!(biconnected_blocks(g), Ok(b) if b.len() == 1)
}

/// Which clause of the near-tree definition a graph satisfies, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NearTreeClass {
    Tree,
    OneRedK3,
    LeafBlocks34,
    NotNearTree,
}

impl NearTreeClass {
    pub fn is_near_tree(self) -> bool {
        self != NearTreeClass::NotNearTree
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NearTreeClass::Tree => "tree",
            NearTreeClass::OneRedK3 => "one_red_k3",
            NearTreeClass::LeafBlocks34 => "leaf_blocks_34",
            NearTreeClass::NotNearTree => "not_near_tree",
        }
    }
}

pub fn classify_near_tree(g: &Graph) -> Result<NearTreeClass> {
    Ok(classify_block_cut_tree(&block_cut_tree(g)?))
}

/// Classification from the block-cut tree alone. Clause 3 is read literally:
/// no red interior block and every leaf block of order at most 4.
pub fn classify_block_cut_tree(t: &BlockCutTree) -> NearTreeClass {
    let red: Vec<usize> = t.red_blocks().collect();
    if red.is_empty() {
        return NearTreeClass::Tree;
    }
    if red.len() == 1 && t.blocks[red[0]].len() == 3 {
        return NearTreeClass::OneRedK3;
    }
    let red_interior = red.iter().any(|&b| !t.is_leaf(b));
    let small_leaves = (0..t.blocks.len())
        .filter(|&b| t.is_leaf(b))
        .all(|b| t.blocks[b].len() <= 4);
    if !red_interior && small_leaves {
        NearTreeClass::LeafBlocks34
    } else {
        NearTreeClass::NotNearTree
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_on(vertices: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                out.push((a, b));
            }
        }
        out
    }

    fn k4_bowtie() -> Graph {
        let mut e = complete_on(&[0, 1, 2, 3]);
        e.extend(complete_on(&[3, 4, 5, 6]));
        Graph::from_edges(7, e).unwrap()
    }

    #[test]
    fn path_p4() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.block_count(), 3);
        assert_eq!(t.cut_vertices.as_slice(), &[1, 2]);
        assert!(t.red_blocks().next().is_none());
        // 3 blocks + 2 cut vertices, 4 incidences: a 5-node path.
        let incidences: usize = t.block_cuts.iter().map(Vec::len).sum();
        assert_eq!(incidences, 4);
        assert_eq!(
            t.block_position,
            vec![
                BlockPosition::Leaf,
                BlockPosition::Interior,
                BlockPosition::Leaf
            ]
        );
    }

    #[test]
    fn bowtie_blocks() {
        let t = block_cut_tree(&k4_bowtie()).unwrap();
        assert_eq!(t.block_count(), 2);
        assert_eq!(t.red_blocks().count(), 2);
        assert_eq!(t.cut_vertices.as_slice(), &[3]);
        assert!(t.block_position.iter().all(|&p| p == BlockPosition::Leaf));
        assert_eq!(t.cut_color, vec![CutColor::Plain]);
    }

    #[test]
    fn single_block_is_leaf() {
        let k5 = Graph::from_edges(5, complete_on(&[0, 1, 2, 3, 4])).unwrap();
        let t = block_cut_tree(&k5).unwrap();
        assert_eq!(t.block_count(), 1);
        assert!(t.cut_vertices.is_empty());
        assert_eq!(t.block_position, vec![BlockPosition::Leaf]);
        assert_eq!(t.block_color, vec![BlockColor::Red]);
        let k1 = Graph::new(1).unwrap();
        assert_eq!(
            block_cut_tree(&k1).unwrap().blocks,
            vec![VertexSet::singleton(0)]
        );
    }

    #[test]
    fn blue_cut_vertex_of_star() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.cut_color, vec![CutColor::Blue]);
        assert_eq!(t.cut_degree(0), Some(3));
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_cut_tree(&g), Err(Error::Disconnected));
    }

    #[test]
    fn near_tree_classes() {
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(classify_near_tree(&tree).unwrap(), NearTreeClass::Tree);

        // Triangle 0-1-2 with a pendant path at each corner.
        let mut e = complete_on(&[0, 1, 2]);
        e.extend([(0, 3), (3, 4), (1, 5), (2, 6), (6, 7)]);
        let g = Graph::from_edges(8, e).unwrap();
        assert_eq!(classify_near_tree(&g).unwrap(), NearTreeClass::OneRedK3);

        let k5 = Graph::from_edges(5, complete_on(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(classify_near_tree(&k5).unwrap(), NearTreeClass::NotNearTree);

        assert_eq!(
            classify_near_tree(&k4_bowtie()).unwrap(),
            NearTreeClass::LeafBlocks34
        );

        // Red interior triangle between two red leaves is not a near tree.
        let mut e = complete_on(&[0, 1, 2]);
        e.extend(complete_on(&[2, 3, 4]));
        e.extend(complete_on(&[4, 5, 6]));
        let g = Graph::from_edges(7, e).unwrap();
        assert_eq!(classify_near_tree(&g).unwrap(), NearTreeClass::NotNearTree);
    }

    #[test]
    fn two_connectivity() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(is_two_connected(&c5));
        assert!(!is_two_connected(&k4_bowtie()));
        assert!(!is_two_connected(&Graph::from_edges(2, [(0, 1)]).unwrap()));
    }
}
