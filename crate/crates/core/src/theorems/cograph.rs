use crate::graph::{Graph, VertexSet};

/// True iff `g` has no induced path on four vertices.
///
/// Uses the recursive characterisation: a graph on two or more vertices is
/// a cograph iff it, or its complement, splits into smaller cographs. A
/// connected graph with a connected complement is therefore not one.
pub fn is_cograph(g: &Graph) -> bool {
    let all: Vec<usize> = g.vertices().collect();
    cograph_on(g, &all)
}

fn cograph_on(g: &Graph, vs: &[usize]) -> bool {
    if vs.len() <= 3 {
        // Every graph on at most three vertices is P4-free.
        return true;
    }
    let parts = components_within(g, vs, false);
    if parts.len() > 1 {
        return parts.iter().all(|p| cograph_on(g, p));
    }
    let co_parts = components_within(g, vs, true);
    if co_parts.len() == 1 {
        return false;
    }
    co_parts.iter().all(|p| cograph_on(g, p))
}

/// Components of `g[vs]`, or of its complement when `complement` is set.
fn components_within(g: &Graph, vs: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; vs.len()];
    let mut out = Vec::new();
    for start in 0..vs.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![vs[start]];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..vs.len() {
                if !seen[j] && g.has_edge(vs[i], vs[j]) != complement {
                    seen[j] = true;
                    comp.push(vs[j]);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Direct search for an induced `P4`, quartic in the order.
pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let set: VertexSet = [a, b, c, d].into_iter().collect();
                    let sub = g.induced_subgraph(&set);
                    if sub.size() == 3 && sub.is_path() {
                        return true;
                    }
                }
            }
        }
    }
    false
}
