//! Registry of checkable statements and the runner that applies them to
//! graph streams.
//!
//! Every statement turns one graph into zero or more [`CheckResult`]s, one
//! per parameter (a root vertex, a rooted set, ...). Statements of kind
//! [`StatementKind::Conjecture`] are report-only: a violated instance is
//! recorded as [`Status::Finding`] and never counts as a failure.

mod checks;
mod cograph;
mod mining;
mod roots;

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::blocks::{block_cut_tree, classify_block_cut_tree, BlockCutTree, NearTreeClass};
use crate::budget::Budget;
use crate::engine::{stats, ConnStats};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::pipeline::ordered_map;

pub use cograph::{has_induced_p4, is_cograph};
pub use mining::{mine_exceptions_twice, Exception, MiningMode, MiningReport};
pub use roots::{find_root_vertex, NotFoundReason, RootSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Finding,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
            Status::Finding => "finding",
        }
    }
}

/// Outcome of one statement on one graph and parameter.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub statement: String,
    pub graph_index: Option<usize>,
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
    pub status: Status,
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for CheckResult {
    fn eq(&self, other: &Self) -> bool {
        self.statement == other.statement
            && self.graph_index == other.graph_index
            && self.graph6 == other.graph6
            && self.param == other.param
            && self.status == other.status
            && self.witness == other.witness
    }
}

impl CheckResult {
    /// A result not yet tied to a stream position.
    pub fn standalone(
        statement: &str,
        param: Option<String>,
        status: Status,
        witness: Option<Value>,
    ) -> Self {
        CheckResult {
            statement: statement.to_string(),
            graph_index: None,
            graph6: None,
            param,
            status,
            witness,
            elapsed: Duration::ZERO,
        }
    }

    pub fn not_applicable(statement: &str, reason: impl Into<String>) -> Self {
        let witness = serde_json::json!({ "reason": reason.into() });
        CheckResult::standalone(statement, None, Status::NotApplicable, Some(witness))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementKind {
    Theorem,
    /// Report-only; violations become findings.
    Conjecture,
    /// Deliberately false check used to exercise failure reporting. Only
    /// selectable by name.
    Fixture,
}

pub type Checker = fn(&GraphContext<'_>, &Budget) -> Result<Vec<CheckResult>>;

#[derive(Clone)]
pub struct Statement {
    pub id: &'static str,
    pub kind: StatementKind,
    pub summary: &'static str,
    pub check: Checker,
}

impl std::fmt::Debug for Statement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Statement")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

impl Statement {
    /// Runs the checker, downgrading budget overruns to `not_applicable`
    /// and conjecture failures to findings.
    pub fn run(&self, ctx: &GraphContext<'_>, budget: &Budget) -> Vec<CheckResult> {
        let start = Instant::now();
        let mut out = match (self.check)(ctx, budget) {
            Ok(results) => results,
            Err(e) => vec![CheckResult::not_applicable(self.id, e.to_string())],
        };
        let elapsed = start.elapsed();
        for r in &mut out {
            if self.kind == StatementKind::Conjecture && r.status == Status::Fail {
                r.status = Status::Finding;
            }
            r.elapsed = elapsed;
        }
        out
    }
}

/// The closed set of statements known to the runner, sorted by id.
#[derive(Clone, Debug)]
pub struct StatementRegistry {
    statements: Vec<Statement>,
}

impl StatementRegistry {
    pub fn standard() -> Self {
        let mut statements = checks::all();
        statements.sort_by_key(|s| s.id);
        StatementRegistry { statements }
    }

    pub fn list(&self) -> &[Statement] {
        &self.statements
    }

    pub fn get(&self, id: &str) -> Option<&Statement> {
        self.statements.iter().find(|s| s.id == id)
    }

    /// Resolves a selection; `"all"` stands for every non-fixture statement.
    /// The result is deduplicated and sorted by id.
    pub fn select<S: AsRef<str>>(&self, ids: &[S]) -> Result<Vec<&Statement>> {
        let mut out: Vec<&Statement> = Vec::new();
        for id in ids {
            let id = id.as_ref().trim();
            if id == "all" {
                out.extend(
                    self.statements
                        .iter()
                        .filter(|s| s.kind != StatementKind::Fixture),
                );
            } else {
                out.push(
                    self.get(id)
                        .ok_or_else(|| Error::UnknownStatement(id.to_string()))?,
                );
            }
        }
        out.sort_by_key(|s| s.id);
        out.dedup_by_key(|s| s.id);
        Ok(out)
    }
}

/// One graph plus lazily computed quantities shared between statements.
pub struct GraphContext<'a> {
    pub graph: &'a Graph,
    connected: bool,
    budget: Budget,
    stats: OnceCell<Result<ConnStats>>,
    tree: OnceCell<Result<BlockCutTree>>,
}

impl<'a> GraphContext<'a> {
    pub fn new(graph: &'a Graph, budget_limit: u64) -> Self {
        GraphContext {
            graph,
            connected: graph.is_connected(),
            budget: Budget::new(budget_limit),
            stats: OnceCell::new(),
            tree: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn stats(&self) -> Result<&ConnStats> {
        self.stats
            .get_or_init(|| stats(self.graph, &self.budget))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn block_cut_tree(&self) -> Result<&BlockCutTree> {
        self.tree
            .get_or_init(|| block_cut_tree(self.graph))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn near_tree_class(&self) -> Result<NearTreeClass> {
        self.block_cut_tree().map(classify_block_cut_tree)
    }
}

/// Applies the statements to one graph, in statement-id order.
pub fn check_graph(
    index: usize,
    graph: &Graph,
    statements: &[&Statement],
    budget_limit: u64,
) -> Vec<CheckResult> {
    let ctx = GraphContext::new(graph, budget_limit);
    let graph6 = encode_graph6(graph);
    let mut out = Vec::new();
    for st in statements {
        let results = if ctx.is_connected() {
            st.run(&ctx, &Budget::new(budget_limit))
        } else {
            vec![CheckResult::not_applicable(st.id, "graph is disconnected")]
        };
        for mut r in results {
            r.graph_index = Some(index);
            r.graph6 = Some(graph6.clone());
            out.push(r);
        }
    }
    out
}

/// Runs the selected statements over a stream of graphs.
///
/// Results are ordered by input index, then statement id, then parameter,
/// regardless of the worker count.
pub fn run_statement_suite<I, S>(
    graphs: I,
    statement_ids: &[S],
    budget_limit: u64,
    workers: usize,
) -> Result<Vec<CheckResult>>
where
    I: IntoIterator<Item = Graph>,
    S: AsRef<str>,
{
    let registry = StatementRegistry::standard();
    let selected = registry.select(statement_ids)?;
    let work = graphs.into_iter().enumerate();
    let per_graph = ordered_map(work, workers, |(i, g): (usize, Graph)| {
        check_graph(i, &g, &selected, budget_limit)
    })?;
    Ok(per_graph.flatten().collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub finding: usize,
}

impl StatusCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Finding => self.finding += 1,
        }
    }
}

/// Aggregate over a suite run.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteSummary {
    pub graphs: usize,
    pub results: usize,
    #[serde(flatten)]
    pub totals: StatusCounts,
    pub by_statement: BTreeMap<String, StatusCounts>,
    /// Slowest single (graph, statement) evaluation per statement, in
    /// milliseconds; only collected when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_runtime_ms: Option<BTreeMap<String, f64>>,
}

impl SuiteSummary {
    pub fn new(with_timings: bool) -> Self {
        SuiteSummary {
            max_runtime_ms: with_timings.then(BTreeMap::new),
            ..Default::default()
        }
    }

    pub fn record_graph(&mut self) {
        self.graphs += 1;
    }

    pub fn record(&mut self, r: &CheckResult) {
        self.results += 1;
        self.totals.add(r.status);
        self.by_statement
            .entry(r.statement.clone())
            .or_default()
            .add(r.status);
        if let Some(times) = &mut self.max_runtime_ms {
            let ms = r.elapsed.as_secs_f64() * 1e3;
            let slot = times.entry(r.statement.clone()).or_insert(0.0);
            *slot = slot.max(ms);
        }
    }

    pub fn has_failures(&self) -> bool {
        self.totals.fail > 0
    }
}
