//! The individual statement checkers.
//!
//! Conditional statements report `not_applicable` when their hypothesis
//! fails, so a vacuous instance is never counted as a pass. All comparisons
//! are on exact integers or reduced rationals.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::blocks::NearTreeClass;
use crate::budget::Budget;
use crate::engine::{cut_decomposition, rooted_stats, vertex_profile};
use crate::error::Result;
use crate::graph::VertexSet;
use crate::minimal::{check_av_inequality, connected_set_masks, minimal_family};

use super::{
    find_root_vertex, is_cograph, CheckResult, GraphContext, RootSearch, Statement, StatementKind,
    Status,
};

/// Largest order for which the rooted bound is checked for every connected
/// root set rather than only singletons.
const ALL_ROOTS_MAX_ORDER: usize = 6;

pub(super) fn all() -> Vec<Statement> {
    use StatementKind::*;
    let st = |id, kind, summary, check| Statement {
        id,
        kind,
        summary,
        check,
    };
    vec![
        st(
            "thm_main",
            Theorem,
            "3 S(G) >= (n+2) N(G), equality iff G is a path",
            thm_main,
        ),
        st(
            "thm_rooted",
            Theorem,
            "2 S(G,H) >= (n+h) N(G,H) for connected H",
            thm_rooted,
        ),
        st(
            "cor_v",
            Theorem,
            "2 S(G,x) >= (n+1) N(G,x) for every vertex",
            cor_v,
        ),
        st(
            "cor_nt",
            Theorem,
            "near trees satisfy the main bound, equality iff path",
            cor_nt,
        ),
        st(
            "lemma_one3",
            Theorem,
            "exactly one red block, a triangle: A(G) > (n+2)/3",
            lemma_one3,
        ),
        st(
            "thm_av",
            Theorem,
            "av(G,x) (N(G,x) - 1) >= N(G-x) and its counting identities",
            thm_av,
        ),
        st(
            "thm_2av",
            Theorem,
            "2-connected: av(G,x) <= (n-1)/2, equality iff K3",
            thm_2av,
        ),
        st(
            "cor_av1",
            Theorem,
            "x with clique neighbourhood inside a red block: av <= (n-1)/2",
            cor_av1,
        ),
        st(
            "thm_inequal",
            Theorem,
            "cut vertex and not a near tree: a root vertex exists",
            thm_inequal,
        ),
        st(
            "thm_inequal_strict",
            Conjecture,
            "root vertex exists when order-4 leaf blocks do not make a near tree",
            thm_inequal_strict,
        ),
        st(
            "lemma_d2",
            Theorem,
            "two components with N_i(x) >= 2(n_i+1), a_i <= 1/2: root",
            lemma_d2,
        ),
        st(
            "lemma_cut1",
            Theorem,
            "M >= 4, or M = 3 with large components: root",
            lemma_cut1,
        ),
        st(
            "lemma_cut2",
            Theorem,
            "root after dropping the min-N component lifts to G",
            lemma_cut2,
        ),
        st(
            "prop_nx",
            Theorem,
            "sum over x of N(G,x) equals S(G)",
            prop_nx,
        ),
        st(
            "cograph_bounds",
            Theorem,
            "connected cographs: n/2 < A <= (n+1)/2, equality iff n = 1",
            cograph_bounds,
        ),
        st(
            "tree_density_bounds",
            Theorem,
            "trees without degree-2 vertices, n >= 2: 1/2 <= D < 3/4",
            tree_density_bounds,
        ),
        st(
            "min_degree3_density",
            Conjecture,
            "minimum degree 3: D(G) > 1/2",
            min_degree3_density,
        ),
        st(
            "fixture_corrupt_half",
            Fixture,
            "deliberately false: A(G) >= n/2",
            fixture_corrupt_half,
        ),
    ]
}

fn frac(num: usize, den: usize) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn one(id: &str, st: Status, witness: Value) -> Vec<CheckResult> {
    vec![CheckResult::standalone(id, None, st, Some(witness))]
}

fn at(id: &str, param: String, st: Status, witness: Value) -> CheckResult {
    CheckResult::standalone(id, Some(param), st, Some(witness))
}

fn na(id: &str, reason: &str) -> Vec<CheckResult> {
    vec![CheckResult::not_applicable(id, reason)]
}

/// The main bound with its equality clause.
fn main_bound(
    id: &str,
    ctx: &GraphContext<'_>,
    extra: Option<(&str, Value)>,
) -> Result<Vec<CheckResult>> {
    let s = ctx.stats()?;
    let n = ctx.n();
    let lhs = &s.total_size * 3u32;
    let rhs = &s.count * BigUint::from(n + 2);
    let equality = lhs == rhs;
    let is_path = ctx.graph.is_path();
    let mut w = json!({
        "N": s.count.to_string(),
        "S": s.total_size.to_string(),
        "A": s.average.to_string(),
        "lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
        "equality": equality,
        "is_path": is_path,
    });
    if let Some((k, v)) = extra {
        w[k] = v;
    }
    Ok(one(id, status(lhs >= rhs && equality == is_path), w))
}

fn thm_main(ctx: &GraphContext<'_>, _: &Budget) -> Result<Vec<CheckResult>> {
    main_bound("thm_main", ctx, None)
}

fn thm_rooted(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let g = ctx.graph;
    let n = ctx.n();
    let roots: Vec<VertexSet> = if n <= ALL_ROOTS_MAX_ORDER {
        let mut sets: Vec<VertexSet> = connected_set_masks(g, 0, budget)?
            .into_iter()
            .map(VertexSet::from_mask)
            .collect();
        sets.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        sets
    } else {
        g.vertices().map(VertexSet::singleton).collect()
    };
    let mut out = Vec::with_capacity(roots.len());
    for h in roots {
        let r = rooted_stats(g, &h, budget)?;
        let lhs = &r.total_size * 2u32;
        let rhs = &r.count * BigUint::from(n + h.len());
        let w = json!({
            "N": r.count.to_string(),
            "S": r.total_size.to_string(),
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "equality": lhs == rhs,
        });
        out.push(at("thm_rooted", format!("H={h}"), status(lhs >= rhs), w));
    }
    Ok(out)
}

fn cor_v(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let n = ctx.n();
    let mut out = Vec::with_capacity(n);
    for x in ctx.graph.vertices() {
        let r = rooted_stats(ctx.graph, &VertexSet::singleton(x), budget)?;
        let lhs = &r.total_size * 2u32;
        let rhs = &r.count * BigUint::from(n + 1);
        let w = json!({
            "N(G,x)": r.count.to_string(),
            "A(G,x)": r.average.to_string(),
            "equality": lhs == rhs,
        });
        out.push(at("cor_v", format!("x={x}"), status(lhs >= rhs), w));
    }
    Ok(out)
}

fn cor_nt(ctx: &GraphContext<'_>, _: &Budget) -> Result<Vec<CheckResult>> {
    let class = ctx.near_tree_class()?;
    if !class.is_near_tree() {
        return Ok(na("cor_nt", "not a near tree"));
    }
    main_bound("cor_nt", ctx, Some(("class", json!(class.as_str()))))
}

fn lemma_one3(ctx: &GraphContext<'_>, _: &Budget) -> Result<Vec<CheckResult>> {
    let tree = ctx.block_cut_tree()?;
    let red: Vec<usize> = tree.red_blocks().collect();
    if red.len() != 1 || tree.blocks[red[0]].len() != 3 {
        return Ok(na("lemma_one3", "not exactly one red block of order 3"));
    }
    let s = ctx.stats()?;
    let lhs = &s.total_size * 3u32;
    let rhs = &s.count * BigUint::from(ctx.n() + 2);
    let w = json!({ "A": s.average.to_string(), "lhs": lhs.to_string(), "rhs": rhs.to_string() });
    Ok(one("lemma_one3", status(lhs > rhs), w))
}

fn thm_av(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    ctx.graph
        .vertices()
        .map(|x| check_av_inequality(ctx.graph, x, budget))
        .collect()
}

fn thm_2av(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let g = ctx.graph;
    let n = ctx.n();
    if n < 3 || ctx.block_cut_tree()?.block_count() != 1 {
        return Ok(na("thm_2av", "not 2-connected"));
    }
    let bound = frac(n - 1, 2);
    let is_k3 = n == 3 && g.is_complete();
    let mut out = Vec::with_capacity(n);
    for x in g.vertices() {
        let av = minimal_family(g, x, budget)?.av.expect("n >= 3");
        let equality = av == bound;
        let ok = av <= bound && equality == is_k3;
        let w = json!({ "av": av.to_string(), "bound": bound.to_string(), "equality": equality });
        out.push(at("thm_2av", format!("x={x}"), status(ok), w));
    }
    Ok(out)
}

fn cor_av1(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let g = ctx.graph;
    let n = ctx.n();
    let tree = ctx.block_cut_tree()?;
    let bound = frac(n - 1, 2);
    let is_k3 = n == 3 && g.is_complete();
    let mut out = Vec::new();
    for b in tree.red_blocks() {
        let block = &tree.blocks[b];
        for &x in block {
            let nbrs = g.neighbors(x);
            let inside = nbrs.iter().all(|&v| block.contains(v));
            let clique = nbrs
                .iter()
                .enumerate()
                .all(|(i, &u)| nbrs[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if !(inside && clique) {
                continue;
            }
            let av = minimal_family(g, x, budget)?.av.expect("x has a neighbour");
            let equality = av == bound;
            let w = json!({
                "av": av.to_string(),
                "bound": bound.to_string(),
                "block": block.to_string(),
                "equality": equality,
            });
            out.push(at(
                "cor_av1",
                format!("x={x}"),
                status(av <= bound && equality == is_k3),
                w,
            ));
        }
    }
    if out.is_empty() {
        return Ok(na(
            "cor_av1",
            "no vertex with a clique neighbourhood inside a red block",
        ));
    }
    out.sort_by_key(|r| r.param.as_deref().map(param_vertex));
    Ok(out)
}

fn param_vertex(p: &str) -> usize {
    p.trim_start_matches("x=").parse().unwrap_or(usize::MAX)
}

fn root_outcome(
    id: &str,
    ctx: &GraphContext<'_>,
    class: NearTreeClass,
    budget: &Budget,
) -> Result<Vec<CheckResult>> {
    let search = find_root_vertex(ctx.graph, budget)?;
    let ok = matches!(search, RootSearch::Found { .. });
    let mut w = serde_json::to_value(&search).expect("serialisable");
    w["class"] = json!(class.as_str());
    Ok(one(id, status(ok), w))
}

fn thm_inequal(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let tree = ctx.block_cut_tree()?;
    if tree.cut_vertices.is_empty() {
        return Ok(na("thm_inequal", "no cut vertex"));
    }
    let class = ctx.near_tree_class()?;
    if class.is_near_tree() {
        return Ok(na("thm_inequal", "near tree"));
    }
    root_outcome("thm_inequal", ctx, class, budget)
}

/// Like `thm_inequal`, but a graph qualifying as a near tree only through
/// an order-4 leaf block is treated as not a near tree.
fn thm_inequal_strict(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let tree = ctx.block_cut_tree()?;
    if tree.cut_vertices.is_empty() {
        return Ok(na("thm_inequal_strict", "no cut vertex"));
    }
    let class = ctx.near_tree_class()?;
    let order4_leaf = (0..tree.block_count()).any(|b| tree.is_leaf(b) && tree.blocks[b].len() == 4);
    let applies = match class {
        NearTreeClass::NotNearTree => true,
        NearTreeClass::LeafBlocks34 => order4_leaf,
        NearTreeClass::Tree | NearTreeClass::OneRedK3 => false,
    };
    if !applies {
        return Ok(na(
            "thm_inequal_strict",
            "near tree without order-4 leaf blocks",
        ));
    }
    root_outcome("thm_inequal_strict", ctx, class, budget)
}

fn lemma_d2(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let g = ctx.graph;
    let tree = ctx.block_cut_tree()?;
    let half = frac(1, 2);
    let mut out = Vec::new();
    for &x in &tree.cut_vertices {
        let mut d = cut_decomposition(g, x, budget)?;
        let param = format!("x={x}");
        if d.arity() != 2 {
            out.push(at(
                "lemma_d2",
                param,
                Status::NotApplicable,
                json!({ "reason": "M(x) != 2" }),
            ));
            continue;
        }
        let orders = d.orders();
        let large: Vec<bool> = (0..2)
            .map(|i| d.rooted_count[i] >= BigUint::from(2 * (orders[i] + 1)))
            .collect();
        let mut witness_i = None;
        if large.iter().any(|&b| b) {
            let a = d.fill_av(g, budget)?.to_vec();
            witness_i = (0..2).find(|&i| large[i] && a[i] <= half);
        }
        let Some(i) = witness_i else {
            let w = json!({ "reason": "no component with N_i(x) >= 2(n_i+1) and a_i <= 1/2" });
            out.push(at("lemma_d2", param, Status::NotApplicable, w));
            continue;
        };
        let (lhs, rhs) = d.root_inequality_sides();
        let w = json!({
            "component": i,
            "n_i": orders,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
        });
        out.push(at("lemma_d2", param, status(lhs > rhs), w));
    }
    if out.is_empty() {
        return Ok(na("lemma_d2", "no cut vertex"));
    }
    Ok(out)
}

fn lemma_cut1(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let tree = ctx.block_cut_tree()?;
    let mut out = Vec::new();
    for &x in &tree.cut_vertices {
        let d = cut_decomposition(ctx.graph, x, budget)?;
        let orders = d.orders();
        let m = d.arity();
        let hypothesis = m >= 4
            || (m == 3
                && orders.iter().all(|&k| k >= 2)
                && orders.iter().filter(|&&k| k >= 3).count() >= 2);
        let param = format!("x={x}");
        if !hypothesis {
            let w = json!({ "reason": "hypothesis fails", "M": m, "n_i": orders });
            out.push(at("lemma_cut1", param, Status::NotApplicable, w));
            continue;
        }
        let (lhs, rhs) = d.root_inequality_sides();
        let w = json!({ "M": m, "n_i": orders, "lhs": lhs.to_string(), "rhs": rhs.to_string() });
        out.push(at("lemma_cut1", param, status(lhs > rhs), w));
    }
    if out.is_empty() {
        return Ok(na("lemma_cut1", "no cut vertex"));
    }
    Ok(out)
}

fn lemma_cut2(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let tree = ctx.block_cut_tree()?;
    let mut out = Vec::new();
    for &x in &tree.cut_vertices {
        let d = cut_decomposition(ctx.graph, x, budget)?;
        let m = d.arity();
        let param = format!("x={x}");
        if m < 3 {
            out.push(at(
                "lemma_cut2",
                param,
                Status::NotApplicable,
                json!({ "reason": "M(x) < 3" }),
            ));
            continue;
        }
        // Smallest-index component among those minimising N_i.
        let dropped = (0..m)
            .min_by_key(|&i| (&d.component_count[i], i))
            .expect("m >= 3");
        let keep: Vec<usize> = (0..m).filter(|&i| i != dropped).collect();
        let (sub_lhs, sub_rhs) = d.root_inequality_sides_over(&keep);
        if sub_lhs <= sub_rhs {
            let w = json!({ "reason": "reduced graph fails the inequality", "dropped": dropped });
            out.push(at("lemma_cut2", param, Status::NotApplicable, w));
            continue;
        }
        let (lhs, rhs) = d.root_inequality_sides();
        let w = json!({
            "dropped": dropped,
            "reduced": [sub_lhs.to_string(), sub_rhs.to_string()],
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
        });
        out.push(at("lemma_cut2", param, status(lhs > rhs), w));
    }
    if out.is_empty() {
        return Ok(na("lemma_cut2", "no cut vertex"));
    }
    Ok(out)
}

fn prop_nx(ctx: &GraphContext<'_>, budget: &Budget) -> Result<Vec<CheckResult>> {
    let s = ctx.stats()?;
    let total: BigUint = vertex_profile(ctx.graph, budget)?.into_iter().sum();
    let w = json!({ "sum": total.to_string(), "S": s.total_size.to_string() });
    Ok(one("prop_nx", status(total == s.total_size), w))
}

fn cograph_bounds(ctx: &GraphContext<'_>, _: &Budget) -> Result<Vec<CheckResult>> {
    if !is_cograph(ctx.graph) {
        return Ok(na("cograph_bounds", "not a cograph"));
    }
    let n = ctx.n();
    let a = &ctx.stats()?.average;
    let low = frac(n, 2);
    let high = frac(n + 1, 2);
    let equality = *a == high;
    let ok = *a > low && *a <= high && equality == (n == 1);
    let w = json!({ "A": a.to_string(), "low": low.to_string(), "high": high.to_string() });
    Ok(one("cograph_bounds", status(ok), w))
}

fn tree_density_bounds(ctx: &GraphContext<'_>, _: &Budget) -> Result<Vec<CheckResult>> {
    let g = ctx.graph;
    if !g.is_tree() || ctx.n() < 2 || g.vertices().any(|v| g.degree(v) == 2) {
        return Ok(na(
            "tree_density_bounds",
            "not a tree of order >= 2 without degree-2 vertices",
        ));
    }
    let d = &ctx.stats()?.density;
    let ok = *d >= frac(1, 2) && *d < frac(3, 4);
    Ok(one(
        "tree_density_bounds",
        status(ok),
        json!({ "D": d.to_string() }),
    ))
}

fn min_degree3_density(ctx: &GraphContext<'_>, _: &Budget) -> Result<Vec<CheckResult>> {
    if ctx.graph.min_degree() < 3 {
        return Ok(na("min_degree3_density", "minimum degree below 3"));
    }
    let d = &ctx.stats()?.density;
    Ok(one(
        "min_degree3_density",
        status(*d > frac(1, 2)),
        json!({ "D": d.to_string() }),
    ))
}

fn fixture_corrupt_half(ctx: &GraphContext<'_>, _: &Budget) -> Result<Vec<CheckResult>> {
    let a = &ctx.stats()?.average;
    let bound = frac(ctx.n(), 2);
    let w = json!({ "A": a.to_string(), "bound": bound.to_string() });
    Ok(one("fixture_corrupt_half", status(*a >= bound), w))
}
