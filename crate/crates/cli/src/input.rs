use std::fs::File;
use std::io::{self, BufRead, BufReader};

use connset_core::generators::{generate, FamilySpec, FamilyTemplate};
use connset_core::io::{Format, GraphReader};
use connset_core::{Error, Graph};

use crate::args::{InputArgs, InputFormat};

/// One input graph with its position in the stream.
#[derive(Clone, Debug)]
pub struct Item {
    pub index: usize,
    /// Family spec for generated graphs.
    pub label: Option<String>,
    pub graph: Graph,
}

/// A fatal condition: what to print and which exit code to use.
#[derive(Clone, Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_UNKNOWN_STATEMENT: u8 = 4;

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    /// Error raised while processing the graph at `index`.
    pub fn at(index: usize, e: Error) -> Self {
        let f = Failure::from(e);
        Failure {
            message: format!("graph {index}: {}", f.message),
            ..f
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::UnknownStatement(_) => EXIT_UNKNOWN_STATEMENT,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_PARSE, e.to_string())
    }
}

pub type Stream = Box<dyn Iterator<Item = Result<Item, Failure>>>;

fn reader(path: &str) -> Result<Box<dyn BufRead>, Failure> {
    if path == "-" {
        Ok(Box::new(io::stdin().lock()))
    } else {
        let f = File::open(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{path}: {e}")))?;
        Ok(Box::new(BufReader::new(f)))
    }
}

/// Opens the graph stream described by the input flags.
pub fn open(args: &InputArgs) -> Result<Stream, Failure> {
    let format = if args.family.is_empty() {
        args.format
    } else {
        InputFormat::Family
    };
    match format {
        InputFormat::Graph6 | InputFormat::Edges => {
            let fmt = if format == InputFormat::Graph6 {
                Format::Graph6
            } else {
                Format::EdgeList
            };
            let records = GraphReader::new(reader(&args.input)?, fmt);
            Ok(Box::new(records.map(|r| match r {
                Ok(rec) => Ok(Item {
                    index: rec.index,
                    label: None,
                    graph: rec.graph,
                }),
                Err(e) => Err(Failure::new(EXIT_PARSE, e.to_string())),
            })))
        }
        InputFormat::Family => {
            let sources: Vec<(Option<usize>, String)> = if args.family.is_empty() {
                let mut out = Vec::new();
                for (i, line) in reader(&args.input)?.lines().enumerate() {
                    let line = line?;
                    if !line.trim().is_empty() {
                        out.push((Some(i + 1), line.trim().to_string()));
                    }
                }
                out
            } else {
                args.family.iter().map(|f| (None, f.clone())).collect()
            };
            let mut specs: Vec<FamilySpec> = Vec::new();
            for (line, text) in sources {
                let located = |e: Error| match line {
                    Some(l) => Failure::new(EXIT_PARSE, format!("line {l}: {e}")),
                    None => Failure::new(EXIT_PARSE, format!("{text}: {e}")),
                };
                let template = FamilyTemplate::parse(&text).map_err(located)?;
                for spec in template.expand() {
                    specs.push(spec.map_err(located)?);
                }
            }
            Ok(Box::new(specs.into_iter().enumerate().map(
                |(index, spec)| {
                    let graph = generate(&spec)
                        .map_err(|e| Failure::new(EXIT_PARSE, format!("{spec}: {e}")))?;
                    Ok(Item {
                        index,
                        label: Some(spec.to_string()),
                        graph,
                    })
                },
            )))
        }
    }
}
