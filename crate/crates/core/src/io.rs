//! Graph and phase file formats.
//!
//! Edge-list text: a header line `n m` followed by `m` lines `u v`
//! (0-based, whitespace separated); `#` starts a comment. The JSON mirror
//! is `{"n": .., "edges": [[u, v], ..]}`. Phase files are
//! `{"edges": [{"u": .., "v": .., "theta": ..}, ..]}` with `u < v` and
//! `theta` in radians for the orientation `u -> v`.

use std::fmt::Write as _;
use std::path::Path;

use crate::chiral::PhaseAssignment;
use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph, GraphBuild};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| parse_err(line, format!("expected an integer, found {tok:?}"))))
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<GraphBuild> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = match numbers(hl, header)?[..] {
        [n, m] => (n, m),
        _ => return Err(parse_err(hl, "header must be `n m`")),
    };
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        match numbers(ln, l)?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(parse_err(ln, "edge line must be `u v`")),
        }
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    build_graph(n, edges)
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    Ok(serde_json::from_str(text)?)
}

/// Parses either format, choosing JSON when the first non-blank character
/// is `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text).map(|b| b.graph)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_phases(text: &str) -> Result<PhaseAssignment> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_phases(path: &Path) -> Result<PhaseAssignment> {
    parse_phases(&read(path)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| parse_err(0, format!("{}: {e}", path.display())))
}
