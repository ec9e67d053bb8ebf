//! The plain-text graph format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines)
//! r v1 v2 .. (optional roots line)
//! ```
//!
//! Tokens are separated by ASCII whitespace; blank lines and lines starting
//! with `#` are skipped anywhere.

use std::collections::BTreeSet;
use std::fmt::Write;

use forestep::{Graph, RootedGraph};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub roots: Option<Vec<usize>>,
}

impl GraphFile {
    pub fn rooted(&self) -> Option<RootedGraph> {
        let roots = self.roots.clone()?;
        Some(RootedGraph::new(self.graph.clone(), roots).expect("roots were checked while parsing"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line 'n m'")]
    MissingHeader,
    #[error("expected {expected} fields, found {found}")]
    FieldCount { expected: &'static str, found: usize },
    #[error("'{0}' is not a non-negative integer")]
    NotANumber(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("header announces {expected} edges, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("root {0} listed twice")]
    DuplicateRoot(usize),
    #[error("roots line must start with 'r'")]
    BadRootsLine,
    #[error("unexpected content after the roots line")]
    TrailingContent,
}

/// A parse failure at a 1-based line number (0 when the input ended early).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn number(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError { line, kind: ParseErrorKind::NotANumber(tok.to_string()) })
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line, kind| ParseError { line, kind };

    let (hl, header) = lines.next().ok_or(err(0, ParseErrorKind::MissingHeader))?;
    let fields: Vec<&str> = header.split_ascii_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(hl, ParseErrorKind::FieldCount { expected: "2", found: fields.len() }));
    }
    let n = number(fields[0], hl)?;
    let m = number(fields[1], hl)?;

    let mut graph = Graph::new(n);
    let mut last_line = hl;
    for found in 0..m {
        let (ln, line) = lines.next().ok_or(err(last_line, ParseErrorKind::MissingEdges { expected: m, found }))?;
        last_line = ln;
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        if fields.first() == Some(&"r") {
            return Err(err(ln, ParseErrorKind::MissingEdges { expected: m, found }));
        }
        if fields.len() != 2 {
            return Err(err(ln, ParseErrorKind::FieldCount { expected: "2", found: fields.len() }));
        }
        let (u, v) = (number(fields[0], ln)?, number(fields[1], ln)?);
        for x in [u, v] {
            if x >= n {
                return Err(err(ln, ParseErrorKind::OutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(err(ln, ParseErrorKind::SelfLoop(u)));
        }
        if !graph.add_edge(u, v).expect("checked range") {
            return Err(err(ln, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
        }
    }

    let mut roots = None;
    if let Some((ln, line)) = lines.next() {
        let mut fields = line.split_ascii_whitespace();
        if fields.next() != Some("r") {
            return Err(err(ln, ParseErrorKind::BadRootsLine));
        }
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for tok in fields {
            let v = number(tok, ln)?;
            if v >= n {
                return Err(err(ln, ParseErrorKind::OutOfRange { vertex: v, n }));
            }
            if !seen.insert(v) {
                return Err(err(ln, ParseErrorKind::DuplicateRoot(v)));
            }
            list.push(v);
        }
        roots = Some(list);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, ParseErrorKind::TrailingContent));
    }
    Ok(GraphFile { graph, roots })
}

/// Inverse of [`parse_graph_file`], edges in increasing order.
pub fn write_graph_file(g: &Graph, roots: Option<&[usize]>) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    if let Some(r) = roots {
        out.push('r');
        for v in r {
            write!(out, " {v}").expect("writing to a string");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> ParseErrorKind {
        parse_graph_file(text).unwrap_err().kind
    }

    #[test]
    fn reads_comments_roots_and_no_trailing_newline() {
        let f = parse_graph_file("# a path\n4 3\n0 1\n1 2\n\n2 3\nr 0 3").unwrap();
        assert_eq!(f.graph, Graph::path(4));
        assert_eq!(f.roots, Some(vec![0, 3]));
        assert_eq!(parse_graph_file("3 0\n").unwrap().graph, Graph::new(3));
    }

    #[test]
    fn distinct_diagnostics() {
        assert_eq!(kind("3 2\n0 1\n1 0\n"), ParseErrorKind::DuplicateEdge(0, 1));
        assert_eq!(kind("3 1\n2 2\n"), ParseErrorKind::SelfLoop(2));
        assert_eq!(kind("3 1\n0 3\n"), ParseErrorKind::OutOfRange { vertex: 3, n: 3 });
        assert_eq!(kind("3 2\n0 1\n"), ParseErrorKind::MissingEdges { expected: 2, found: 1 });
        assert_eq!(kind("3 1\n0 x\n"), ParseErrorKind::NotANumber("x".into()));
        assert_eq!(kind("3 0\nr 1 1\n"), ParseErrorKind::DuplicateRoot(1));
        assert_eq!(kind("3 0\nq 1\n"), ParseErrorKind::BadRootsLine);
        assert_eq!(kind("3 0\nr 1\n0 1\n"), ParseErrorKind::TrailingContent);
        assert_eq!(kind("# nothing\n"), ParseErrorKind::MissingHeader);
    }

    #[test]
    fn line_numbers_count_comments() {
        let e = parse_graph_file("# header next\n3 2\n0 1\n# skip\n1 1\n").unwrap_err();
        assert_eq!(e.line, 5);
        assert_eq!(e.to_string(), "line 5: self-loop at vertex 1");
    }

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5);
        let text = write_graph_file(&g, Some(&[2, 0]));
        let f = parse_graph_file(&text).unwrap();
        assert_eq!(f.graph, g);
        assert_eq!(f.roots, Some(vec![2, 0]));
    }
}
