//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex ids. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use thiserror::Error;
use zdbox_core::ZdGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("{0}")]
    Graph(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax { line, msg: msg.into() }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let tok = it.next().ok_or_else(|| syntax(line, format!("expected {what}")))?;
        tok.parse().map_err(|_| syntax(line, format!("`{tok}` is not a nonnegative integer")))
    };
    let a = next("two integers")?;
    let b = next("a second integer")?;
    if let Some(extra) = it.next() {
        return Err(syntax(line, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<ZdGraph, EdgeListError> {
    let mut header = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (a, b) = two_numbers(line, content)?;
        let Some((n, m)) = header else {
            header = Some((a, b));
            continue;
        };
        if a >= n || b >= n {
            return Err(syntax(line, format!("vertex id out of range 0..{n}")));
        }
        if a == b {
            return Err(syntax(line, format!("self-loop at {a}")));
        }
        if edges.len() == m {
            return Err(syntax(line, format!("more than the declared {m} edges")));
        }
        edges.push((a, b));
    }
    let (n, m) = header.ok_or(EdgeListError::MissingHeader)?;
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount { declared: m, found: edges.len() });
    }
    ZdGraph::from_edges(n, &edges).map_err(|e| EdgeListError::Graph(e.to_string()))
}

/// Inverse of [`parse`] for graphs with vertices `0..n`.
pub fn emit(g: &ZdGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
