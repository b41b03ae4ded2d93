//! Deterministic and seeded graph families.
//!
//! Families are named by strings such as `baton:L=6,k=4` or
//! `cograph_random:n=12,seed=7`. A parameter value may be an integer, an
//! inclusive range `a..b`, a stepped range `a..b/s`, or the name of another
//! parameter (`baton:L=2..8,k=L`). Ranges expand to the cartesian product
//! of their values, the first parameter varying slowest.
//!
//! Random families draw from SplitMix64 with its state initialised to the
//! seed (default 0): each draw adds `0x9e3779b97f4a7c15` to the state and
//! returns the state mixed by the shifts 30, 27, 31 and the multipliers
//! `0xbf58476d1ce4e5b9`, `0x94d049bb133111eb`. An integer below `b` is the
//! first draw `r` with `r < 2^64 - (2^64 mod b)`, reduced mod `b`
//! (computed as `u64::MAX - u64::MAX % b` as the exclusive bound), and
//! shuffles are Fisher-Yates from the last position down. Re-implementing
//! these three rules reproduces every random family exactly.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Spider,
    Caterpillar,
    Baton,
    CographRandom,
    BlockGraphRandom,
    ConnectedGnm,
    CubicRandom,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Spider,
        Family::Caterpillar,
        Family::Baton,
        Family::CographRandom,
        Family::BlockGraphRandom,
        Family::ConnectedGnm,
        Family::CubicRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Spider => "spider",
            Family::Caterpillar => "caterpillar",
            Family::Baton => "baton",
            Family::CographRandom => "cograph_random",
            Family::BlockGraphRandom => "block_graph_random",
            Family::ConnectedGnm => "connected_gnm",
            Family::CubicRandom => "cubic_random",
        }
    }

    /// Required parameter names, in canonical order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Path | Family::Cycle | Family::Complete => &["n"],
            Family::CompleteBipartite => &["a", "b"],
            Family::Star => &["m"],
            Family::Spider => &["k", "l"],
            Family::Caterpillar => &["s", "k"],
            Family::Baton => &["L", "k"],
            Family::CographRandom | Family::CubicRandom => &["n"],
            Family::BlockGraphRandom => &["b", "k"],
            Family::ConnectedGnm => &["n", "m"],
        }
    }

    pub fn is_random(self) -> bool {
        matches!(
            self,
            Family::CographRandom
                | Family::BlockGraphRandom
                | Family::ConnectedGnm
                | Family::CubicRandom
        )
    }

    fn from_name(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family `{s}`")))
    }
}

/// One concrete family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    /// Parameter values in canonical order, seed excluded.
    pub params: Vec<u64>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[u64], seed: Option<u64>) -> Result<Self> {
        if params.len() != family.params().len() {
            return Err(Error::InvalidParams(format!(
                "{} takes parameters {:?}",
                family.name(),
                family.params()
            )));
        }
        if seed.is_some() && !family.is_random() {
            return Err(Error::InvalidParams(format!(
                "{} takes no seed",
                family.name()
            )));
        }
        Ok(FamilySpec {
            family,
            params: params.to_vec(),
            seed,
        })
    }

    /// Parses a concrete spec; ranges are rejected.
    pub fn parse(s: &str) -> Result<Self> {
        let template = FamilyTemplate::parse(s)?;
        let mut it = template.expand();
        let first = it.next().expect("templates expand to at least one spec")?;
        if it.next().is_some() {
            return Err(Error::InvalidParams(format!(
                "`{s}` describes more than one graph"
            )));
        }
        Ok(first)
    }

    fn get(&self, i: usize) -> usize {
        self.params[i] as usize
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.name())?;
        for (i, (name, v)) in self.family.params().iter().zip(&self.params).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{name}={v}")?;
        }
        if let Some(seed) = self.seed {
            write!(f, ",seed={seed}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Value {
    Fixed(u64),
    Range { lo: u64, hi: u64, step: u64 },
    Alias(String),
}

impl Value {
    fn parse(s: &str) -> Result<Value> {
        let bad = || Error::InvalidParams(format!("bad parameter value `{s}`"));
        let int = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        if let Some((lo, rest)) = s.split_once("..") {
            let (hi, step) = match rest.split_once('/') {
                Some((hi, step)) => (int(hi)?, int(step)?),
                None => (int(rest)?, 1),
            };
            let lo = int(lo)?;
            if step == 0 || hi < lo {
                return Err(bad());
            }
            Ok(Value::Range { lo, hi, step })
        } else if s.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
            Ok(Value::Alias(s.to_string()))
        } else {
            Ok(Value::Fixed(int(s)?))
        }
    }

    fn values(&self) -> Vec<u64> {
        match *self {
            Value::Fixed(v) => vec![v],
            Value::Range { lo, hi, step } => (lo..=hi).step_by(step as usize).collect(),
            Value::Alias(_) => vec![0],
        }
    }
}

/// A family with possibly ranged parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTemplate {
    pub family: Family,
    /// Parameters in the order written, seed included.
    params: Vec<(String, Value)>,
}

impl FamilyTemplate {
    pub fn parse(s: &str) -> Result<Self> {
        let (name, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let family = Family::from_name(name)?;
        let mut params: Vec<(String, Value)> = Vec::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("expected key=value, got `{part}`")))?;
            let k = k.trim().to_string();
            let known =
                family.params().contains(&k.as_str()) || (k == "seed" && family.is_random());
            if !known {
                return Err(Error::InvalidParams(format!(
                    "{} has no parameter `{k}`",
                    family.name()
                )));
            }
            if params.iter().any(|(p, _)| *p == k) {
                return Err(Error::InvalidParams(format!("parameter `{k}` given twice")));
            }
            params.push((k, Value::parse(v.trim())?));
        }
        for &p in family.params() {
            if !params.iter().any(|(k, _)| k == p) {
                return Err(Error::InvalidParams(format!(
                    "{} needs parameter `{p}`",
                    family.name()
                )));
            }
        }
        for (k, v) in &params {
            if let Value::Alias(target) = v {
                let ok = params
                    .iter()
                    .any(|(k2, v2)| k2 == target && !matches!(v2, Value::Alias(_)));
                if !ok || target == k {
                    return Err(Error::InvalidParams(format!(
                        "`{k}={target}` names no plain parameter"
                    )));
                }
            }
        }
        Ok(FamilyTemplate { family, params })
    }

    /// Every concrete spec, first-written parameter varying slowest.
    pub fn expand(&self) -> impl Iterator<Item = Result<FamilySpec>> + '_ {
        let axes: Vec<Vec<u64>> = self.params.iter().map(|(_, v)| v.values()).collect();
        let total: usize = axes.iter().map(Vec::len).product();
        (0..total).map(move |mut idx| {
            let mut chosen = vec![0u64; axes.len()];
            for (slot, axis) in chosen.iter_mut().zip(&axes).rev() {
                *slot = axis[idx % axis.len()];
                idx /= axis.len();
            }
            let lookup = |name: &str| -> u64 {
                let i = self
                    .params
                    .iter()
                    .position(|(k, _)| k == name)
                    .expect("validated");
                match &self.params[i].1 {
                    Value::Alias(t) => {
                        let j = self
                            .params
                            .iter()
                            .position(|(k, _)| k == t)
                            .expect("validated");
                        chosen[j]
                    }
                    _ => chosen[i],
                }
            };
            let params: Vec<u64> = self.family.params().iter().map(|p| lookup(p)).collect();
            let seed = self
                .params
                .iter()
                .any(|(k, _)| k == "seed")
                .then(|| lookup("seed"));
            FamilySpec::new(self.family, &params, seed)
        })
    }
}

/// Lazily generates every member of a template.
pub fn family_stream(
    template: &FamilyTemplate,
) -> impl Iterator<Item = Result<(FamilySpec, Graph)>> + '_ {
    template.expand().map(|spec| {
        let spec = spec?;
        let g = generate(&spec)?;
        Ok((spec, g))
    })
}

/// SplitMix64 with unbiased bounded draws.
#[derive(Clone, Debug)]
pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let r = self.next_u64();
            if r < zone {
                return r % bound;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

fn invalid(spec: &FamilySpec, why: &str) -> Error {
    Error::InvalidParams(format!("{spec}: {why}"))
}

fn add_clique(g: &mut Graph, vs: &[usize]) -> Result<()> {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            g.add_edge(a, b)?;
        }
    }
    Ok(())
}

/// Builds the graph described by `spec`, with canonical labels.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let p = |i| spec.get(i);
    let mut rng = SeededRng::new(spec.seed.unwrap_or(0));
    match spec.family {
        Family::Path => {
            let n = p(0);
            if n < 1 {
                return Err(invalid(spec, "n >= 1 required"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            let n = p(0);
            if n < 3 {
                return Err(invalid(spec, "n >= 3 required"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete => {
            let n = p(0);
            if n < 1 {
                return Err(invalid(spec, "n >= 1 required"));
            }
            let mut g = Graph::new(n)?;
            add_clique(&mut g, &(0..n).collect::<Vec<_>>())?;
            Ok(g)
        }
        Family::CompleteBipartite => {
            let (a, b) = (p(0), p(1));
            if a < 1 || b < 1 {
                return Err(invalid(spec, "a, b >= 1 required"));
            }
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Star => {
            let m = p(0);
            if m < 1 {
                return Err(invalid(spec, "m >= 1 required"));
            }
            Graph::from_edges(m + 1, (1..=m).map(|i| (0, i)))
        }
        Family::Spider => {
            let (k, l) = (p(0), p(1));
            if k < 1 || l < 1 {
                return Err(invalid(spec, "k, l >= 1 required"));
            }
            // Leg j occupies 1 + j*l .. 1 + (j+1)*l, starting next to the centre.
            let edges = (0..k).flat_map(|j| {
                let base = 1 + j * l;
                std::iter::once((0, base)).chain((1..l).map(move |t| (base + t - 1, base + t)))
            });
            Graph::from_edges(1 + k * l, edges)
        }
        Family::Caterpillar => {
            let (s, k) = (p(0), p(1));
            if s < 1 {
                return Err(invalid(spec, "s >= 1 required"));
            }
            let spine = (1..s).map(|i| (i - 1, i));
            let legs = (0..s).flat_map(|i| (0..k).map(move |t| (i, s + i * k + t)));
            Graph::from_edges(s + s * k, spine.chain(legs))
        }
        Family::Baton => {
            let (l, k) = (p(0), p(1));
            if l < 2 {
                return Err(invalid(spec, "L >= 2 required"));
            }
            let spine = (1..l).map(|i| (i - 1, i));
            let left = (0..k).map(|t| (0, l + t));
            let right = (0..k).map(|t| (l - 1, l + k + t));
            Graph::from_edges(l + 2 * k, spine.chain(left).chain(right))
        }
        Family::CographRandom => {
            let n = p(0);
            if n < 1 {
                return Err(invalid(spec, "n >= 1 required"));
            }
            let mut g = Graph::new(n)?;
            cograph_into(&mut g, 0, n, true, &mut rng)?;
            Ok(g)
        }
        Family::BlockGraphRandom => {
            let (b, k) = (p(0), p(1));
            if b < 1 || k < 2 {
                return Err(invalid(spec, "b >= 1 and k >= 2 required"));
            }
            let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(b);
            let mut n = 0;
            for i in 0..b {
                let size = 2 + rng.below(k as u64 - 1) as usize;
                let mut members = Vec::with_capacity(size);
                if i > 0 {
                    members.push(rng.below(n as u64) as usize);
                }
                while members.len() < size {
                    members.push(n);
                    n += 1;
                }
                blocks.push(members);
            }
            let mut g = Graph::new(n)?;
            for members in &blocks {
                add_clique(&mut g, members)?;
            }
            Ok(g)
        }
        Family::ConnectedGnm => {
            let (n, m) = (p(0), p(1));
            let max = n * n.saturating_sub(1) / 2;
            if n < 1 || m + 1 < n || m > max {
                return Err(invalid(spec, "need n >= 1 and n-1 <= m <= n(n-1)/2"));
            }
            connected_gnm(n, m, &mut rng)
        }
        Family::CubicRandom => {
            let n = p(0);
            if n < 4 || n % 2 == 1 {
                return Err(invalid(spec, "n must be even and at least 4"));
            }
            cubic(n, &mut rng).ok_or_else(|| invalid(spec, "no simple connected pairing found"))
        }
    }
}

/// Random cograph on `lo..lo+n`: split into two nonempty parts, build each,
/// then join them (always at the top, so the result is connected) or leave
/// them disjoint.
fn cograph_into(g: &mut Graph, lo: usize, n: usize, join: bool, rng: &mut SeededRng) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    let k = 1 + rng.below(n as u64 - 1) as usize;
    let join = join || rng.below(2) == 1;
    cograph_into(g, lo, k, false, rng)?;
    cograph_into(g, lo + k, n - k, false, rng)?;
    if join {
        for a in lo..lo + k {
            for b in lo + k..lo + n {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(())
}

/// Uniform labelled spanning tree from a random Prüfer sequence, then
/// `m - (n-1)` further edges drawn without replacement.
fn connected_gnm(n: usize, m: usize, rng: &mut SeededRng) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    if n >= 2 {
        let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
        let mut degree = vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
        for &c in &code {
            let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
            g.add_edge(leaf, c)?;
            degree[c] -= 1;
            if degree[c] == 1 {
                leaves.push(Reverse(c));
            }
        }
        let Reverse(a) = leaves.pop().expect("two leaves remain");
        let Reverse(b) = leaves.pop().expect("two leaves remain");
        g.add_edge(a, b)?;
    }

    let extra = m + 1 - n;
    let candidates = n * (n - 1) / 2 - (n - 1);
    if extra == 0 {
        return Ok(g);
    }
    if candidates <= 1 << 22 || 2 * extra > candidates {
        let mut pool: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.has_edge(i, j))
            .collect();
        // Partial Fisher-Yates: the first `extra` slots become the sample.
        for i in 0..extra {
            let j = i + rng.below((pool.len() - i) as u64) as usize;
            pool.swap(i, j);
        }
        for &(a, b) in &pool[..extra] {
            g.add_edge(a, b)?;
        }
    } else {
        let mut chosen = BTreeSet::new();
        while chosen.len() < extra {
            let a = rng.below(n as u64) as usize;
            let b = rng.below(n as u64) as usize;
            let e = (a.min(b), a.max(b));
            if a != b && !g.has_edge(a, b) {
                chosen.insert(e);
            }
        }
        for (a, b) in chosen {
            g.add_edge(a, b)?;
        }
    }
    Ok(g)
}

/// Pairing model: shuffle `3n` half-edges and pair neighbours, retrying
/// until the result is simple and connected.
fn cubic(n: usize, rng: &mut SeededRng) -> Option<Graph> {
    const ATTEMPTS: usize = 100_000;
    let mut points: Vec<usize> = (0..3 * n).collect();
    'attempt: for _ in 0..ATTEMPTS {
        points.sort_unstable();
        rng.shuffle(&mut points);
        let mut g = Graph::new(n).ok()?;
        for pair in points.chunks(2) {
            let (a, b) = (pair[0] / 3, pair[1] / 3);
            if a == b || g.has_edge(a, b) {
                continue 'attempt;
            }
            g.add_edge(a, b).ok()?;
        }
        if g.is_connected() {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_cut_tree;
    use crate::theorems::is_cograph;

    fn gen(s: &str) -> Result<Graph> {
        generate(&FamilySpec::parse(s)?)
    }

    #[test]
    fn fixed_families() {
        assert!(gen("path:n=4").unwrap().is_path());
        let b = gen("baton:L=2,k=1").unwrap();
        assert!(b.is_path() && b.order() == 4);
        let s = gen("star:m=3").unwrap();
        assert_eq!((s.order(), s.size(), s.degree(0)), (4, 3, 3));
        let k23 = gen("complete_bipartite:a=2,b=3").unwrap();
        assert_eq!(k23.size(), 6);
        assert!(is_cograph(&k23));
        let sp = gen("spider:k=3,l=2").unwrap();
        assert!(sp.is_tree() && sp.order() == 7 && sp.degree(0) == 3);
        let cat = gen("caterpillar:s=3,k=2").unwrap();
        assert!(cat.is_tree() && cat.order() == 9);
        let c = gen("cycle:n=5").unwrap();
        assert!(c.vertices().all(|v| c.degree(v) == 2) && c.is_connected());
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            gen("cubic_random:n=5,seed=1"),
            Err(Error::InvalidParams(_))
        ));
        assert!(gen("path:n=0").is_err());
        assert!(gen("path").is_err());
        assert!(gen("path:n=3,q=2").is_err());
        assert!(gen("path:n=3,seed=2").is_err());
        assert!(gen("hypercube:n=3").is_err());
        assert!(gen("connected_gnm:n=5,m=3").is_err());
        assert!(FamilySpec::parse("path:n=3..5").is_err());
    }

    #[test]
    fn streams_expand_ranges_and_aliases() {
        let t = FamilyTemplate::parse("path:n=3..6").unwrap();
        let orders: Vec<usize> = family_stream(&t).map(|r| r.unwrap().1.order()).collect();
        assert_eq!(orders, vec![3, 4, 5, 6]);

        let t = FamilyTemplate::parse("baton:L=2..8,k=L").unwrap();
        let got: Vec<(String, usize)> = family_stream(&t)
            .map(|r| r.map(|(s, g)| (s.to_string(), g.order())).unwrap())
            .collect();
        assert_eq!(got.len(), 7);
        assert_eq!(got[0], ("baton:L=2,k=2".to_string(), 6));
        assert!(got.iter().zip(2..).all(|((_, n), k)| *n == 3 * k));

        let t = FamilyTemplate::parse("cubic_random:n=4..14/2,seed=3").unwrap();
        let gs: Vec<Graph> = family_stream(&t).map(|r| r.unwrap().1).collect();
        assert_eq!(gs.len(), 6);
        assert!(gs
            .iter()
            .all(|g| g.vertices().all(|v| g.degree(v) == 3) && g.is_connected()));

        let t = FamilyTemplate::parse("complete_bipartite:a=1..2,b=1..3").unwrap();
        let names: Vec<String> = t.expand().map(|s| s.unwrap().to_string()).collect();
        assert_eq!(names[0], "complete_bipartite:a=1,b=1");
        assert_eq!(names[1], "complete_bipartite:a=1,b=2");
        assert_eq!(names.len(), 6);
    }

    #[test]
    fn random_families_are_deterministic() {
        for s in [
            "cograph_random:n=10,seed=7",
            "block_graph_random:b=6,k=5,seed=11",
            "connected_gnm:n=12,m=20,seed=5",
            "cubic_random:n=12,seed=9",
        ] {
            let a = gen(s).unwrap();
            let b = gen(s).unwrap();
            assert_eq!(a, b, "{s}");
            assert!(a.is_connected(), "{s}");
        }
        assert!(is_cograph(&gen("cograph_random:n=10,seed=7").unwrap()));
        assert_ne!(
            gen("connected_gnm:n=12,m=20,seed=5"),
            gen("connected_gnm:n=12,m=20,seed=6")
        );
    }

    #[test]
    fn splitmix_reference_stream() {
        // First outputs of SplitMix64 from state 0.
        let mut r = SeededRng::new(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn gnm_edge_counts_and_trees() {
        for seed in 0..20 {
            let g = gen(&format!("connected_gnm:n=9,m=8,seed={seed}")).unwrap();
            assert!(g.is_tree());
            let g = gen(&format!("connected_gnm:n=9,m=30,seed={seed}")).unwrap();
            assert_eq!(g.size(), 30);
            assert!(g.is_connected());
        }
        assert_eq!(gen("connected_gnm:n=1,m=0").unwrap().order(), 1);
    }

    #[test]
    fn block_graphs_have_complete_blocks() {
        for seed in 0..30 {
            let g = gen(&format!("block_graph_random:b=5,k=4,seed={seed}")).unwrap();
            let t = block_cut_tree(&g).unwrap();
            assert_eq!(t.block_count(), 5);
            for b in &t.blocks {
                assert!(g.induced_subgraph(b).is_complete());
            }
        }
    }
    fn densities(template: &str) -> Vec<num_rational::BigRational> {
        let t = FamilyTemplate::parse(template).unwrap();
        family_stream(&t)
            .map(|r| {
                crate::engine::stats(&r.unwrap().1, &crate::budget::Budget::default())
                    .unwrap()
                    .density
            })
            .collect()
    }

    #[test]
    fn baton_density_increases() {
        let d = densities("baton:L=2..8,k=L");
        assert!(d.windows(2).all(|w| w[0] < w[1]), "{d:?}");
    }

    #[test]
    fn caterpillar_density_stays_below_three_quarters() {
        let bound = num_rational::BigRational::new(3.into(), 4.into());
        assert!(densities("caterpillar:s=2..12,k=1")
            .iter()
            .all(|d| *d < bound));
    }

    #[test]
    fn star_density_tends_to_half() {
        // N(K_{1,m}) = 2^m + m and S = 2^m + m + m 2^(m-1), so D dips to 13/25
        // at m = 4, peaks at m = 9 and decreases from there on.
        let half = num_rational::BigRational::new(1.into(), 2.into());
        let d = densities("star:m=2..40");
        assert!(d.iter().all(|x| *x > half));
        assert_eq!(d[2].to_string(), "13/25");
        assert!(d[..3].windows(2).all(|w| w[0] > w[1]));
        assert!(d[7..].windows(2).all(|w| w[0] > w[1]));
        assert!(
            d[38].clone() - &half
                < (d[0].clone() - &half) / num_rational::BigRational::from_integer(4.into())
        );
    }
}
