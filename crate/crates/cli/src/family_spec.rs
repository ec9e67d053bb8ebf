//! Family specifications on the command line.
//!
//! A family is a comma-separated list of members. A member is a named graph,
//! optionally prefixed by a number of disjoint copies, or `@path` for a graph
//! file:
//!
//! | name  | graph                        |
//! |-------|------------------------------|
//! | `K4`  | complete graph on 4 vertices |
//! | `P4`  | path on 4 vertices           |
//! | `C5`  | cycle on 5 vertices          |
//! | `S3`  | star with 3 leaves           |
//! | `E2`  | 2 isolated vertices          |
//! | `2K2` | two disjoint edges           |

use std::path::Path;

use forestep::Graph;
use thiserror::Error;

use crate::graph_file::{parse_graph_file, ParseError};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("empty family")]
    Empty,
    #[error("cannot read member '{name}': {message}")]
    Unknown { name: String, message: String },
    #[error("member file {path}: {source}")]
    File { path: String, source: ParseError },
    #[error("member file {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// A parsed member with the text it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub name: String,
    pub graph: Graph,
}

/// Parses `spec`; `@path` members are read relative to `base`.
pub fn parse_family(spec: &str, base: &Path) -> Result<Vec<Member>, SpecError> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let graph = if let Some(path) = item.strip_prefix('@') {
            let full = base.join(path);
            let text = std::fs::read_to_string(&full).map_err(|source| SpecError::Io { path: path.into(), source })?;
            parse_graph_file(&text).map_err(|source| SpecError::File { path: path.into(), source })?.graph
        } else {
            named(item)?
        };
        out.push(Member { name: item.to_string(), graph });
    }
    if out.is_empty() {
        return Err(SpecError::Empty);
    }
    Ok(out)
}

fn named(item: &str) -> Result<Graph, SpecError> {
    let unknown = |message: &str| SpecError::Unknown { name: item.to_string(), message: message.to_string() };
    let split = item.find(|c: char| !c.is_ascii_digit()).ok_or_else(|| unknown("missing graph name"))?;
    let copies = if split == 0 { 1 } else { item[..split].parse::<usize>().map_err(|_| unknown("bad copy count"))? };
    if copies == 0 {
        return Err(unknown("copy count must be positive"));
    }
    let rest = &item[split..];
    let mut chars = rest.chars();
    let letter = chars.next().expect("split found a non-digit");
    let size: usize = chars.as_str().parse().map_err(|_| unknown("expected a size after the letter"))?;
    let base = match letter {
        'K' if size >= 1 => Graph::complete(size),
        'P' if size >= 1 => Graph::path(size),
        'C' if size >= 3 => Graph::cycle(size),
        'S' => Graph::star(size),
        'E' if size >= 1 => Graph::new(size),
        'K' | 'P' | 'E' => return Err(unknown("size must be at least 1")),
        'C' => return Err(unknown("cycles need at least 3 vertices")),
        _ => return Err(unknown("unknown graph letter, expected one of K P C S E")),
    };
    Ok(base.repeat(copies))
}
