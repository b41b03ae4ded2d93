use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::{Duration, Instant};

use connset_core::io::encode_graph6;
use connset_core::pipeline::ordered_map;
use connset_core::search::{Candidate, Direction, Objective, SearchReport};
use connset_core::theorems::{check_graph, CheckResult, StatementRegistry, SuiteSummary};
use connset_core::{
    classify_near_tree, stats, stats_by_components, vertex_profile, Budget, ConnStats,
};
use serde::Serialize;

use crate::args::{DirectionArg, InputArgs, ObjectiveArg, OutputFormat, RunArgs};
use crate::input::{self, Failure, Item, EXIT_FAILED};

type Out = Box<dyn Write>;

fn open_out(run: &RunArgs) -> Result<Out, Failure> {
    Ok(match &run.out {
        Some(path) => {
            let f = File::create(path)
                .map_err(|e| Failure::new(input::EXIT_PARSE, format!("{}: {e}", path.display())))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn json_line<T: Serialize>(out: &mut Out, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)
        .map_err(|e| Failure::new(input::EXIT_PARSE, e.to_string()))?;
    out.write_all(b"\n")?;
    Ok(())
}

#[derive(Serialize)]
struct SummaryLine<'a, T> {
    summary: &'a T,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    results: &'a [CheckResult],
    summary: &'a SuiteSummary,
}

fn csv_row<I, T>(out: &mut Out, fields: I) -> Result<(), Failure>
where
    I: IntoIterator<Item = T>,
    T: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(fields)
        .map_err(|e| Failure::new(input::EXIT_PARSE, e.to_string()))?;
    w.flush()?;
    Ok(())
}

/// One `compute` output object.
#[derive(Serialize)]
struct ComputeRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    n: usize,
    #[serde(rename = "N")]
    count: String,
    #[serde(rename = "S")]
    total: String,
    #[serde(rename = "A")]
    average: String,
    #[serde(rename = "D")]
    density: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex_profile: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    near_tree_class: Option<&'static str>,
}

const COMPUTE_COLUMNS: [&str; 9] = [
    "index",
    "graph6",
    "family",
    "n",
    "N",
    "S",
    "A",
    "D",
    "near_tree_class",
];

fn compute_row(
    item: &Item,
    budget: u64,
    profile: bool,
    classify: bool,
) -> Result<ComputeRow, Failure> {
    let g = &item.graph;
    let at = |e| Failure::at(item.index, e);
    let s: ConnStats = stats_by_components(g, &Budget::new(budget)).map_err(at)?;
    let connected = g.is_connected();
    let vertex_profile = match profile && connected {
        true => Some(
            vertex_profile(g, &Budget::new(budget))
                .map_err(at)?
                .iter()
                .map(ToString::to_string)
                .collect(),
        ),
        false => None,
    };
    let near_tree_class = match classify && connected {
        true => Some(classify_near_tree(g).map_err(at)?.as_str()),
        false => None,
    };
    Ok(ComputeRow {
        family: item.label.clone(),
        n: s.n,
        count: s.count.to_string(),
        total: s.total_size.to_string(),
        average: s.average.to_string(),
        density: s.density.to_string(),
        vertex_profile,
        near_tree_class,
    })
}

pub fn compute(
    input: &InputArgs,
    run: &RunArgs,
    profile: bool,
    classify: bool,
) -> Result<(), Failure> {
    let stream = input::open(input)?;
    let budget = run.budget;
    let rows = ordered_map(
        stream,
        run.workers as usize,
        |item: Result<Item, Failure>| {
            let item = item?;
            let row = compute_row(&item, budget, profile, classify)?;
            Ok::<_, Failure>((item.index, encode_graph6(&item.graph), row))
        },
    )?;
    let mut out = open_out(run)?;
    let format = run.output_format.unwrap_or(OutputFormat::Jsonl);
    let mut outcome = Ok(());
    match format {
        OutputFormat::Jsonl => {
            for r in rows {
                match r {
                    Ok((_, _, row)) => json_line(&mut out, &row)?,
                    Err(f) => {
                        outcome = Err(f);
                        break;
                    }
                }
            }
        }
        OutputFormat::Json => {
            let mut all = Vec::new();
            for r in rows {
                match r {
                    Ok((_, _, row)) => all.push(row),
                    Err(f) => {
                        outcome = Err(f);
                        break;
                    }
                }
            }
            json_line(&mut out, &all)?;
        }
        OutputFormat::Csv => {
            csv_row(&mut out, COMPUTE_COLUMNS)?;
            for r in rows {
                match r {
                    Ok((index, graph6, row)) => csv_row(
                        &mut out,
                        [
                            index.to_string(),
                            graph6,
                            row.family.unwrap_or_default(),
                            row.n.to_string(),
                            row.count,
                            row.total,
                            row.average,
                            row.density,
                            row.near_tree_class.unwrap_or_default().to_string(),
                        ],
                    )?,
                    Err(f) => {
                        outcome = Err(f);
                        break;
                    }
                }
            }
        }
    }
    out.flush()?;
    outcome
}

#[derive(Serialize)]
struct StatementInfo {
    id: &'static str,
    kind: connset_core::theorems::StatementKind,
    summary: &'static str,
}

pub fn list_statements(run: &RunArgs) -> Result<(), Failure> {
    let mut out = open_out(run)?;
    for s in StatementRegistry::standard().list() {
        json_line(
            &mut out,
            &StatementInfo {
                id: s.id,
                kind: s.kind,
                summary: s.summary,
            },
        )?;
    }
    out.flush()?;
    Ok(())
}

const VERIFY_COLUMNS: [&str; 6] = [
    "graph_index",
    "graph6",
    "statement",
    "param",
    "status",
    "witness",
];

pub fn verify(
    input: &InputArgs,
    run: &RunArgs,
    statements: &[String],
    timings: bool,
) -> Result<(), Failure> {
    let registry = StatementRegistry::standard();
    let selected = registry.select(statements)?;
    let stream = input::open(input)?;
    let budget = run.budget;
    let per_graph = ordered_map(
        stream,
        run.workers as usize,
        |item: Result<Item, Failure>| {
            let item = item?;
            Ok::<_, Failure>(check_graph(item.index, &item.graph, &selected, budget))
        },
    )?;

    let mut out = open_out(run)?;
    let format = run.output_format.unwrap_or(OutputFormat::Jsonl);
    let mut summary = SuiteSummary::new(timings);
    let mut collected: Vec<CheckResult> = Vec::new();
    if format == OutputFormat::Csv {
        csv_row(&mut out, VERIFY_COLUMNS)?;
    }
    let mut outcome = Ok(());
    for batch in per_graph {
        let batch = match batch {
            Ok(b) => b,
            Err(f) => {
                outcome = Err(f);
                break;
            }
        };
        summary.record_graph();
        for r in batch {
            summary.record(&r);
            match format {
                OutputFormat::Jsonl => json_line(&mut out, &r)?,
                OutputFormat::Json => collected.push(r),
                OutputFormat::Csv => {
                    let witness = r
                        .witness
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_default();
                    csv_row(
                        &mut out,
                        [
                            r.graph_index.map(|i| i.to_string()).unwrap_or_default(),
                            r.graph6.clone().unwrap_or_default(),
                            r.statement.clone(),
                            r.param.clone().unwrap_or_default(),
                            r.status.as_str().to_string(),
                            witness,
                        ],
                    )?;
                }
            }
        }
    }
    match format {
        OutputFormat::Jsonl => json_line(&mut out, &SummaryLine { summary: &summary })?,
        OutputFormat::Json => json_line(
            &mut out,
            &VerifyReport {
                results: &collected,
                summary: &summary,
            },
        )?,
        OutputFormat::Csv => {
            eprintln!(
                "{} graphs, {} results: {} pass, {} fail, {} not applicable, {} findings",
                summary.graphs,
                summary.results,
                summary.totals.pass,
                summary.totals.fail,
                summary.totals.not_applicable,
                summary.totals.finding
            );
        }
    }
    out.flush()?;
    outcome?;
    if summary.has_failures() {
        return Err(Failure::new(
            EXIT_FAILED,
            format!("{} check(s) failed", summary.totals.fail),
        ));
    }
    Ok(())
}

const SEARCH_COLUMNS: [&str; 6] = ["kind", "graph_index", "label", "graph6", "n", "value"];

pub fn search(
    input: &InputArgs,
    run: &RunArgs,
    objective: ObjectiveArg,
    direction: DirectionArg,
) -> Result<(), Failure> {
    let objective = match objective {
        ObjectiveArg::A => Objective::A,
        ObjectiveArg::D => Objective::D,
    };
    let direction = match direction {
        DirectionArg::Min => Direction::Min,
        DirectionArg::Max => Direction::Max,
    };
    let stream = input::open(input)?;
    let budget = run.budget;
    let scored = ordered_map(
        stream,
        run.workers as usize,
        |item: Result<Item, Failure>| {
            let item = item?;
            if !item.graph.is_connected() {
                return Ok((item, None));
            }
            let s =
                stats(&item.graph, &Budget::new(budget)).map_err(|e| Failure::at(item.index, e))?;
            Ok::<_, Failure>((item, Some(s)))
        },
    )?;
    let mut report = SearchReport::new(objective, direction);
    for r in scored {
        let (item, s) = r?;
        match s {
            Some(s) => report.observe(item.index, item.label, &item.graph, &s),
            None => report.skipped += 1,
        }
    }
    for f in &report.min_degree3.findings {
        eprintln!(
            "FINDING: graph {} ({}) has minimum degree >= 3 and D = {}",
            f.graph_index, f.graph6, f.value
        );
    }

    let mut out = open_out(run)?;
    match run.output_format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json | OutputFormat::Jsonl => json_line(&mut out, &report)?,
        OutputFormat::Csv => {
            csv_row(&mut out, SEARCH_COLUMNS)?;
            let d3 = &report.min_degree3;
            let groups: [(&str, &[Candidate]); 4] = [
                ("record", &report.record.holders),
                ("min_degree3_min", &d3.min.holders),
                ("min_degree3_max", &d3.max.holders),
                ("finding", &d3.findings),
            ];
            for (kind, cs) in groups {
                for c in cs {
                    csv_row(
                        &mut out,
                        [
                            kind.to_string(),
                            c.graph_index.to_string(),
                            c.label.clone().unwrap_or_default(),
                            c.graph6.clone(),
                            c.n.to_string(),
                            c.value.to_string(),
                        ],
                    )?;
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    index: usize,
    graph6: String,
    n: usize,
    #[serde(rename = "N")]
    count: String,
    ms: f64,
}

#[derive(Serialize)]
struct BenchSummary {
    graphs: usize,
    workers: u64,
    wall_ms: f64,
    compute_ms: f64,
    max_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    slowest: Option<usize>,
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn bench(input: &InputArgs, run: &RunArgs) -> Result<(), Failure> {
    let started = Instant::now();
    let stream = input::open(input)?;
    let budget = run.budget;
    let timed = ordered_map(
        stream,
        run.workers as usize,
        |item: Result<Item, Failure>| {
            let item = item?;
            let t = Instant::now();
            let s = stats_by_components(&item.graph, &Budget::new(budget))
                .map_err(|e| Failure::at(item.index, e))?;
            let elapsed = t.elapsed();
            Ok::<_, Failure>(BenchRow {
                index: item.index,
                graph6: encode_graph6(&item.graph),
                n: s.n,
                count: s.count.to_string(),
                ms: ms(elapsed),
            })
        },
    )?;
    let format = run.output_format.unwrap_or(OutputFormat::Json);
    let mut out = open_out(run)?;
    let mut summary = BenchSummary {
        graphs: 0,
        workers: run.workers,
        wall_ms: 0.0,
        compute_ms: 0.0,
        max_ms: 0.0,
        slowest: None,
    };
    if format == OutputFormat::Csv {
        csv_row(&mut out, ["index", "graph6", "n", "N", "ms"])?;
    }
    for row in timed {
        let row = row?;
        summary.graphs += 1;
        summary.compute_ms += row.ms;
        if summary.slowest.is_none() || row.ms > summary.max_ms {
            summary.max_ms = row.ms;
            summary.slowest = Some(row.index);
        }
        match format {
            OutputFormat::Csv => csv_row(
                &mut out,
                [
                    row.index.to_string(),
                    row.graph6,
                    row.n.to_string(),
                    row.count,
                    format!("{:.3}", row.ms),
                ],
            )?,
            OutputFormat::Jsonl => json_line(&mut out, &row)?,
            OutputFormat::Json => {}
        }
    }
    summary.wall_ms = ms(started.elapsed());
    match format {
        OutputFormat::Csv => eprintln!(
            "{} graphs in {:.1} ms (compute {:.1} ms, slowest {:.3} ms)",
            summary.graphs, summary.wall_ms, summary.compute_ms, summary.max_ms
        ),
        OutputFormat::Jsonl => json_line(&mut out, &SummaryLine { summary: &summary })?,
        OutputFormat::Json => json_line(&mut out, &summary)?,
    }
    out.flush()?;
    Ok(())
}
