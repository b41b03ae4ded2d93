//! graph6 and edge-list codecs, plus a line-oriented graph reader.
//!
//! graph6 layout: an optional `>>graph6<<` header, a size field (one byte
//! `n + 63` for `n <= 62`, otherwise `126` followed by three bytes carrying
//! `n` in 18 bits, six bits per byte, big-endian), then the upper triangle
//! `x(i, j)`, `i < j`, listed column by column (`j = 1..n`, `i = 0..j`),
//! packed big-endian into six-bit groups, zero padded, each group plus 63.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &[u8] = b">>graph6<<";
const BIAS: u8 = 63;

/// Decodes a single graph6 record. A trailing line break is tolerated.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let offset = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let mut bytes = &text[offset..];
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::ByteOutOfRange {
                offset: offset + i,
                byte: b,
            });
        }
    }

    let (n, body) = match bytes {
        [] => return Err(Error::TruncatedInput),
        [126, 126, ..] => {
            return Err(Error::Malformed(
                "orders of 2^18 or more are not supported".into(),
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::TruncatedInput);
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - BIAS), rest),
    };
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(Error::TruncatedInput);
    }
    if body.len() > needed {
        return Err(Error::TrailingGarbage(body.len() - needed));
    }

    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 record without header or line break.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format: the order on the first line, then one
/// `u v` pair per line. Blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let first = lines
        .next()
        .ok_or_else(|| Error::Malformed("empty input".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Malformed(format!("bad vertex count `{first}`")))?;
    let mut g = Graph::new(n)?;
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => g.add_edge(u, v)?,
            _ => return Err(Error::Malformed(format!("bad edge line `{line}`"))),
        }
    }
    Ok(g)
}

/// Input encodings understood by [`GraphReader`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// One graph6 record per line.
    Graph6,
    /// Edge lists separated by blank lines.
    EdgeList,
}

/// A graph read from a stream, tagged with the 0-based index of the graph
/// and the 1-based line where its record starts.
#[derive(Clone, Debug)]
pub struct Record {
    pub index: usize,
    pub line: usize,
    pub graph: Graph,
}

/// Error wrapper carrying the line number of the offending record.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {source}")]
pub struct LineError {
    pub line: usize,
    pub source: Error,
}

/// Lazily decodes a stream of graphs.
pub struct GraphReader<R> {
    input: R,
    format: Format,
    line: usize,
    index: usize,
    buf: String,
    done: bool,
}

impl<R: BufRead> GraphReader<R> {
    pub fn new(input: R, format: Format) -> Self {
        GraphReader {
            input,
            format,
            line: 0,
            index: 0,
            buf: String::new(),
            done: false,
        }
    }

    fn next_line(&mut self) -> Option<std::io::Result<String>> {
        self.buf.clear();
        match self.input.read_line(&mut self.buf) {
            Ok(0) => None,
            Ok(_) => {
                self.line += 1;
                Some(Ok(self.buf.trim_end_matches(['\n', '\r']).to_string()))
            }
            Err(e) => Some(Err(e)),
        }
    }

    fn read_graph6(&mut self) -> Option<Result<Record, LineError>> {
        loop {
            let line = match self.next_line()? {
                Ok(l) => l,
                Err(e) => return Some(Err(self.io_error(e))),
            };
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.as_bytes() == HEADER {
                continue;
            }
            let parsed = parse_graph6(trimmed.as_bytes())
                .map(|graph| Record {
                    index: self.index,
                    line: self.line,
                    graph,
                })
                .map_err(|source| LineError {
                    line: self.line,
                    source,
                });
            self.index += 1;
            return Some(parsed);
        }
    }

    fn read_edge_list(&mut self) -> Option<Result<Record, LineError>> {
        let mut chunk = String::new();
        let mut start = 0;
        loop {
            match self.next_line() {
                None => break,
                Some(Err(e)) => return Some(Err(self.io_error(e))),
                Some(Ok(l)) if l.trim().is_empty() => {
                    if !chunk.is_empty() {
                        break;
                    }
                }
                Some(Ok(l)) => {
                    if chunk.is_empty() {
                        start = self.line;
                    }
                    chunk.push_str(&l);
                    chunk.push('\n');
                }
            }
        }
        if chunk.is_empty() {
            return None;
        }
        let parsed = parse_edge_list(&chunk)
            .map(|graph| Record {
                index: self.index,
                line: start,
                graph,
            })
            .map_err(|source| LineError {
                line: start,
                source,
            });
        self.index += 1;
        Some(parsed)
    }

    fn io_error(&mut self, e: std::io::Error) -> LineError {
        self.done = true;
        LineError {
            line: self.line + 1,
            source: Error::Malformed(e.to_string()),
        }
    }
}

impl<R: BufRead> Iterator for GraphReader<R> {
    type Item = Result<Record, LineError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match self.format {
            Format::Graph6 => self.read_graph6(),
            Format::EdgeList => self.read_edge_list(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_graph() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn triangle_and_path() {
        let k3 = parse_graph6(b"Bw").unwrap();
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let p3 = parse_graph6(b"Bg\n").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_graph6(b">>graph6<<Bw").unwrap(), k3);
        assert_eq!(encode_graph6(&k3), "Bw");
        assert_eq!(encode_graph6(&p3), "Bg");
    }

    #[test]
    fn format_violations() {
        assert_eq!(
            parse_graph6(b"B2"),
            Err(Error::ByteOutOfRange {
                offset: 1,
                byte: 50
            })
        );
        assert_eq!(parse_graph6(b"D"), Err(Error::TruncatedInput));
        assert_eq!(parse_graph6(b"BwA"), Err(Error::TrailingGarbage(1)));
        assert_eq!(parse_graph6(b""), Err(Error::TruncatedInput));
        assert_eq!(parse_graph6(b"~?"), Err(Error::TruncatedInput));
        assert!(parse_graph6(b"?").is_err());
    }

    #[test]
    fn long_size_field() {
        let n = 100;
        let g = Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
        let s = encode_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_lists() {
        let p3 = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(p3, parse_graph6(b"Bg").unwrap());
        assert_eq!(parse_edge_list("1").unwrap().order(), 1);
        assert_eq!(parse_edge_list("2\n0 0"), Err(Error::SelfLoop(0)));
        assert_eq!(
            parse_edge_list("2\n0 1\n1 0"),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            parse_edge_list("2\n0 2"),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert!(matches!(
            parse_edge_list("2\n0 x"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Malformed(_))));
    }

    #[test]
    fn reader_reports_line_numbers() {
        let input = ">>graph6<<\nBw\n\nBg\nB2\n";
        let out: Vec<_> = GraphReader::new(input.as_bytes(), Format::Graph6).collect();
        assert_eq!(out.len(), 3);
        let first = out[0].as_ref().unwrap();
        assert_eq!((first.index, first.line), (0, 2));
        assert_eq!(out[1].as_ref().unwrap().line, 4);
        assert_eq!(out[2].as_ref().unwrap_err().line, 5);
    }

    #[test]
    fn reader_edge_list_blocks() {
        let input = "3\n0 1\n1 2\n\n\n2\n0 1\n";
        let out: Vec<_> = GraphReader::new(input.as_bytes(), Format::EdgeList)
            .map(Result::unwrap)
            .collect();
        assert_eq!(out.len(), 2);
        assert_eq!(out[1].line, 6);
        assert_eq!(out[1].graph.size(), 1);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=30).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let text = encode_graph6(&g);
            prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
        }
    }
}
