//! Record search over graph streams.
//!
//! Every connected input is scored by its average connected-set order or
//! its density, and the scanner keeps the extreme values with the graphs
//! attaining them. Graphs of minimum degree at least 3 additionally feed a
//! density report, where any density at most 1/2 is listed as a finding.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::budget::Budget;
use crate::engine::{stats, ConnStats};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::pipeline::ordered_map;

/// Holders kept per record; further ties are only counted.
pub const MAX_HOLDERS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Objective {
    A,
    D,
}

impl Objective {
    pub fn value(self, s: &ConnStats) -> &BigRational {
        match self {
            Objective::A => &s.average,
            Objective::D => &s.density,
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Objective::A),
            "D" | "d" => Ok(Objective::D),
            _ => Err(Error::InvalidParams(format!("unknown objective `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Min,
    Max,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(Error::InvalidParams(format!("unknown direction `{s}`"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

/// A scored input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub graph_index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub graph6: String,
    pub n: usize,
    #[serde(serialize_with = "crate::serialize_ratio")]
    pub value: BigRational,
}

/// Extreme value seen so far in one direction, with its first holders in
/// input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub direction: Direction,
    #[serde(serialize_with = "serialize_opt_ratio")]
    pub value: Option<BigRational>,
    pub holders: Vec<Candidate>,
    pub ties: usize,
}

fn serialize_opt_ratio<S: serde::Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

impl Record {
    pub fn new(direction: Direction) -> Self {
        Record {
            direction,
            value: None,
            holders: Vec::new(),
            ties: 0,
        }
    }

    pub fn offer(&mut self, c: &Candidate) {
        let better = match (&self.value, self.direction) {
            (None, _) => true,
            (Some(v), Direction::Min) => c.value < *v,
            (Some(v), Direction::Max) => c.value > *v,
        };
        if better {
            self.value = Some(c.value.clone());
            self.holders.clear();
            self.holders.push(c.clone());
            self.ties = 1;
        } else if self.value.as_ref() == Some(&c.value) {
            self.ties += 1;
            if self.holders.len() < MAX_HOLDERS {
                self.holders.push(c.clone());
            }
        }
    }
}

/// Density records over inputs of minimum degree at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeThreeReport {
    pub scanned: usize,
    pub min: Record,
    pub max: Record,
    /// Inputs with density at most 1/2.
    pub findings: Vec<Candidate>,
}

impl Default for DegreeThreeReport {
    fn default() -> Self {
        DegreeThreeReport {
            scanned: 0,
            min: Record::new(Direction::Min),
            max: Record::new(Direction::Max),
            findings: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub objective: Objective,
    pub direction: Direction,
    pub scanned: usize,
    /// Disconnected inputs.
    pub skipped: usize,
    pub record: Record,
    pub min_degree3: DegreeThreeReport,
}

impl SearchReport {
    pub fn new(objective: Objective, direction: Direction) -> Self {
        SearchReport {
            objective,
            direction,
            scanned: 0,
            skipped: 0,
            record: Record::new(direction),
            min_degree3: DegreeThreeReport::default(),
        }
    }

    /// Folds in one connected graph and its statistics.
    pub fn observe(&mut self, graph_index: usize, label: Option<String>, g: &Graph, s: &ConnStats) {
        self.scanned += 1;
        let mut c = Candidate {
            graph_index,
            label,
            graph6: encode_graph6(g),
            n: g.order(),
            value: self.objective.value(s).clone(),
        };
        self.record.offer(&c);
        if g.min_degree() >= 3 {
            c.value = s.density.clone();
            let r = &mut self.min_degree3;
            r.scanned += 1;
            r.min.offer(&c);
            r.max.offer(&c);
            let half = BigRational::new(One::one(), 2u32.into());
            if c.value <= half {
                r.findings.push(c);
            }
        }
    }

    pub fn has_findings(&self) -> bool {
        !self.min_degree3.findings.is_empty()
    }
}

/// Scans `graphs`, computing statistics on `workers` threads.
///
/// Items are `(label, graph)` pairs; the label names the graph in the
/// report, e.g. a family spec. The first input error or budget overrun
/// aborts the scan.
pub fn search<I>(
    graphs: I,
    objective: Objective,
    direction: Direction,
    budget_limit: u64,
    workers: usize,
) -> Result<SearchReport>
where
    I: IntoIterator<Item = Result<(Option<String>, Graph)>>,
{
    let scored = ordered_map(graphs, workers, |item: Result<(Option<String>, Graph)>| {
        let (label, g) = item?;
        if !g.is_connected() {
            return Ok((label, g, None));
        }
        let s = stats(&g, &Budget::new(budget_limit))?;
        Ok((label, g, Some(s)))
    })?;
    let mut report = SearchReport::new(objective, direction);
    for (index, item) in scored.enumerate() {
        let (label, g, s): (Option<String>, Graph, Option<ConnStats>) = item?;
        match s {
            Some(s) => report.observe(index, label, &g, &s),
            None => report.skipped += 1,
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_graph6;

    fn path(k: usize) -> Graph {
        Graph::from_edges(k, (1..k).map(|i| (i - 1, i))).unwrap()
    }

    fn run(
        gs: Vec<Graph>,
        objective: Objective,
        direction: Direction,
        workers: usize,
    ) -> SearchReport {
        search(
            gs.into_iter().map(|g| Ok((None, g))),
            objective,
            direction,
            u64::MAX,
            workers,
        )
        .unwrap()
    }

    #[test]
    fn minimum_density_among_small_graphs() {
        let k3 = parse_graph6(b"Bw").unwrap();
        let disconnected = parse_graph6(b"C?").unwrap();
        let r = run(
            vec![k3, path(3), disconnected],
            Objective::D,
            Direction::Min,
            1,
        );
        assert_eq!((r.scanned, r.skipped), (2, 1));
        assert_eq!(r.record.value.as_ref().unwrap().to_string(), "5/9");
        assert_eq!(r.record.holders[0].graph6, "Bg");
        assert_eq!(r.record.holders[0].graph_index, 1);
    }

    #[test]
    fn ties_are_counted_and_capped() {
        let gs: Vec<Graph> = (0..MAX_HOLDERS + 4).map(|_| path(4)).collect();
        let r = run(gs, Objective::A, Direction::Max, 3);
        assert_eq!(r.record.ties, MAX_HOLDERS + 4);
        assert_eq!(r.record.holders.len(), MAX_HOLDERS);
        assert_eq!(r.record.value.as_ref().unwrap().to_string(), "2");
        let idx: Vec<usize> = r.record.holders.iter().map(|c| c.graph_index).collect();
        assert_eq!(idx, (0..MAX_HOLDERS).collect::<Vec<_>>());
    }

    #[test]
    fn degree_three_report_uses_density() {
        // K4 is cubic: N = 15, S = 32, D = 32/60 = 8/15 > 1/2.
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = run(vec![k4, path(5)], Objective::A, Direction::Min, 1);
        assert_eq!(r.min_degree3.scanned, 1);
        assert_eq!(
            r.min_degree3.max.value.as_ref().unwrap().to_string(),
            "8/15"
        );
        assert!(!r.has_findings());
    }

    #[test]
    fn input_errors_abort() {
        let items: Vec<Result<(Option<String>, Graph)>> =
            vec![Ok((None, path(3))), Err(Error::InvalidParams("x".into()))];
        assert!(search(items, Objective::A, Direction::Min, u64::MAX, 2).is_err());
    }
}
