//! Text formats for graphs and digraphs.
//!
//! Two formats are supported:
//! - edge-list text: a header line `n m` followed by `m` lines `u v`
//!   (0-based). Blank lines and `#` comments are ignored.
//! - JSON: `{"n": .., "edges": [[u, v], ..]}` for graphs and
//!   `{"n": .., "arcs": [[u, v], ..]}` for digraphs, edges sorted
//!   lexicographically so rendering is deterministic.

use thiserror::Error;

use crate::graph::{Digraph, Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: expected {expected}, got `{text}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        text: String,
    },
    #[error("header promised {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Strips comments, yielding `(line_number, payload)` for non-blank lines.
fn payload_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let stripped = line.split('#').next().unwrap_or("").trim();
        (!stripped.is_empty()).then_some((i + 1, stripped))
    })
}

fn parse_pair(
    line: usize,
    text: &str,
    expected: &'static str,
) -> Result<(usize, usize), ParseError> {
    let malformed = || ParseError::Malformed {
        line,
        expected,
        text: text.to_string(),
    };
    let mut parts = text.split_whitespace();
    let a = parts.next().ok_or_else(malformed)?;
    let b = parts.next().ok_or_else(malformed)?;
    if parts.next().is_some() {
        return Err(malformed());
    }
    Ok((
        a.parse().map_err(|_| malformed())?,
        b.parse().map_err(|_| malformed())?,
    ))
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = payload_lines(text);
    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(line, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        edges.push(parse_pair(line, text, "edge `u v`")?);
    }
    if edges.len() != m {
        return Err(ParseError::WrongEdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges)?)
}

/// Renders the edge-list text format, edges in sorted order.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph_json(text: &str) -> Result<Graph, ParseError> {
    Ok(serde_json::from_str(text)?)
}

pub fn render_graph_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization cannot fail")
}

pub fn parse_digraph_json(text: &str) -> Result<Digraph, ParseError> {
    Ok(serde_json::from_str(text)?)
}

pub fn render_digraph_json(d: &Digraph) -> String {
    serde_json::to_string(d).expect("digraph serialization cannot fail")
}

/// Parses either supported graph format, sniffing JSON by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}
