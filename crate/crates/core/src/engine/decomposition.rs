use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexSet};
use crate::minimal::minimal_family;

use super::tree_dp::block_tree_totals;

/// Split of a connected graph at a cut vertex `x`.
///
/// Component `i` is `G_i`, a component of `G - x` of order `n_i`;
/// `G'_i` is `G_i` with `x` added back. Components are ordered by their
/// smallest vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutDecomposition {
    pub cut_vertex: usize,
    pub n: usize,
    pub components: Vec<VertexSet>,
    /// `N(G_i)`
    pub component_count: Vec<BigUint>,
    /// `S(G_i)`
    pub component_size: Vec<BigUint>,
    /// `N(G'_i, x)`
    pub rooted_count: Vec<BigUint>,
    /// `S(G'_i, x)`
    pub rooted_size: Vec<BigUint>,
    /// `a_i = av(G'_i, x) / n_i`, filled by [`CutDecomposition::fill_av`].
    #[serde(skip)]
    pub av_ratio: Option<Vec<BigRational>>,
}

impl CutDecomposition {
    /// Number of components `M`.
    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.components.iter().map(VertexSet::len).collect()
    }

    /// `N(G,x) = prod N(G'_i, x)`
    pub fn rooted_count_product(&self) -> BigUint {
        self.rooted_count.iter().product()
    }

    /// `S(G,x) = sum_i S(G'_i,x) prod_{j != i} N(G'_j,x) - (M-1) prod_i N(G'_i,x)`
    pub fn rooted_size_total(&self) -> BigUint {
        let m = self.arity();
        let mut sum = BigUint::default();
        for i in 0..m {
            let others: BigUint = (0..m)
                .filter(|&j| j != i)
                .map(|j| &self.rooted_count[j])
                .product();
            sum += &self.rooted_size[i] * others;
        }
        sum - BigUint::from(m - 1) * self.rooted_count_product()
    }

    /// Both sides of the root-vertex inequality
    /// `(n-1) prod N_i(x) > 2 sum (n - n_i) N_i`.
    pub fn root_inequality_sides(&self) -> (BigUint, BigUint) {
        let all: Vec<usize> = (0..self.arity()).collect();
        self.root_inequality_sides_over(&all)
    }

    /// The same inequality for the graph induced by `x` and the listed
    /// components only, whose order is `1 + sum n_i` over those components.
    pub fn root_inequality_sides_over(&self, keep: &[usize]) -> (BigUint, BigUint) {
        let n = 1 + keep
            .iter()
            .map(|&i| self.components[i].len())
            .sum::<usize>();
        let product: BigUint = keep.iter().map(|&i| &self.rooted_count[i]).product();
        let lhs = BigUint::from(n - 1) * product;
        let rhs: BigUint = keep
            .iter()
            .map(|&i| BigUint::from(n - self.components[i].len()) * &self.component_count[i])
            .sum::<BigUint>()
            * 2u32;
        (lhs, rhs)
    }

    pub fn satisfies_root_inequality(&self) -> bool {
        let (lhs, rhs) = self.root_inequality_sides();
        lhs > rhs
    }

    /// Computes `a_i` for every component from the minimal-set construction.
    pub fn fill_av(&mut self, g: &Graph, budget: &Budget) -> Result<&[BigRational]> {
        if self.av_ratio.is_none() {
            let x = self.cut_vertex;
            let mut out = Vec::with_capacity(self.arity());
            for comp in &self.components {
                let (sub, local_x) = with_vertex(g, comp, x);
                let family = minimal_family(&sub, local_x, budget)?;
                let av = family
                    .av
                    .expect("a component with x has at least two vertices");
                out.push(av / BigRational::from_integer(comp.len().into()));
            }
            self.av_ratio = Some(out);
        }
        Ok(self.av_ratio.as_deref().unwrap())
    }
}

/// `G'_i`: the component plus `x`, relabeled, with the local id of `x`.
pub(crate) fn with_vertex(g: &Graph, comp: &VertexSet, x: usize) -> (Graph, usize) {
    let mut members = comp.clone();
    members.insert(x);
    let local_x = members.as_slice().binary_search(&x).unwrap();
    (g.induced_subgraph(&members), local_x)
}

/// Decomposes a connected graph at the cut vertex `x`.
pub fn cut_decomposition(g: &Graph, x: usize, budget: &Budget) -> Result<CutDecomposition> {
    let n = g.order();
    if x >= n {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            order: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let components = connected_components(g, &VertexSet::singleton(x));
    if components.len() < 2 {
        return Err(Error::NotACutVertex(x));
    }
    let m = components.len();
    let mut d = CutDecomposition {
        cut_vertex: x,
        n,
        components: Vec::with_capacity(m),
        component_count: Vec::with_capacity(m),
        component_size: Vec::with_capacity(m),
        rooted_count: Vec::with_capacity(m),
        rooted_size: Vec::with_capacity(m),
        av_ratio: None,
    };
    for comp in components {
        let sub = g.induced_subgraph(&comp);
        let whole = block_tree_totals(&sub, 0, budget)?.total;
        let (with_x, local_x) = with_vertex(g, &comp, x);
        let rooted = block_tree_totals(&with_x, local_x, budget)?.rooted;
        d.component_count.push(whole.count);
        d.component_size.push(whole.size);
        d.rooted_count.push(rooted.count);
        d.rooted_size.push(rooted.size);
        d.components.push(comp);
    }
    debug_assert_eq!(1 + d.orders().iter().sum::<usize>(), n);
    debug_assert!(d.rooted_count.iter().all(|c| *c > BigUint::one()));
    Ok(d)
}
