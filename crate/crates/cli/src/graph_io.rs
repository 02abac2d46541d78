//! Graph files: a line-based text format and a JSON format.
//!
//! ```text
//! # comment
//! vertices 3
//! edge 1 2 2
//! edge 2 3      # weight defaults to 1
//! ```
//!
//! JSON: `{"vertices": 3, "edges": [[1, 2, 2], [2, 3, 1]]}`.

use std::fs;
use std::path::Path;

use nil_core::wgraph::{GraphError, WeightedGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON graph: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: usize,
    edges: Vec<Vec<i64>>,
}

/// JSON if the first non-blank character is `{`, text otherwise.
pub fn detect_format(input: &str) -> GraphFormat {
    if input.trim_start().starts_with('{') {
        GraphFormat::Json
    } else {
        GraphFormat::Text
    }
}

pub fn read_graph_file(path: &Path) -> Result<WeightedGraph, ParseError> {
    let input = fs::read_to_string(path).map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse_graph(&input)
}

pub fn parse_graph(input: &str) -> Result<WeightedGraph, ParseError> {
    match detect_format(input) {
        GraphFormat::Text => parse_text(input),
        GraphFormat::Json => parse_json(input),
    }
}

fn build(n: usize, edges: Vec<(i64, i64, i64)>) -> Result<WeightedGraph, ParseError> {
    let mut checked = Vec::with_capacity(edges.len());
    for (u, v, w) in edges {
        let vertex = |x: i64| -> Result<usize, ParseError> {
            usize::try_from(x)
                .ok()
                .filter(|&x| x >= 1)
                .ok_or(ParseError::Graph(GraphError::VertexOutOfRange { vertex: x.max(0) as usize, n }))
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        if w < 1 {
            return Err(GraphError::NonPositiveWeight { u: u.min(v), v: u.max(v), weight: w }.into());
        }
        checked.push((u, v, w as u64));
    }
    Ok(WeightedGraph::new(n, checked)?)
}

fn number(tok: &str, line: usize, what: &str) -> Result<i64, ParseError> {
    tok.parse().map_err(|_| ParseError::Syntax { line, message: format!("{what} must be an integer, got `{tok}`") })
}

pub fn parse_text(input: &str) -> Result<WeightedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["vertices", count] => {
                if n.is_some() {
                    return Err(ParseError::Syntax { line, message: "repeated `vertices` line".into() });
                }
                let count = number(count, line, "vertex count")?;
                n = Some(usize::try_from(count).map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("vertex count must be nonnegative, got {count}"),
                })?);
            }
            ["edge", rest @ ..] if rest.len() == 2 || rest.len() == 3 => {
                if n.is_none() {
                    return Err(ParseError::Syntax { line, message: "`edge` before the `vertices` line".into() });
                }
                let u = number(rest[0], line, "vertex")?;
                let v = number(rest[1], line, "vertex")?;
                let w = rest.get(2).map(|t| number(t, line, "weight")).transpose()?.unwrap_or(1);
                edges.push((u, v, w));
            }
            ["edge", ..] => {
                return Err(ParseError::Syntax { line, message: "expected `edge <u> <v> [w]`".into() });
            }
            [other, ..] => {
                return Err(ParseError::Syntax { line, message: format!("unknown directive `{other}`") });
            }
        }
    }
    let n = n.ok_or(ParseError::Syntax { line: last_line.max(1), message: "missing `vertices <n>` line".into() })?;
    build(n, edges)
}

pub fn parse_json(input: &str) -> Result<WeightedGraph, ParseError> {
    let raw: JsonGraph = serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (i, e) in raw.edges.iter().enumerate() {
        match e.as_slice() {
            [u, v] => edges.push((*u, *v, 1)),
            [u, v, w] => edges.push((*u, *v, *w)),
            _ => return Err(ParseError::Json(format!("edge {i} must be [u, v] or [u, v, w]"))),
        }
    }
    build(raw.vertices, edges)
}

pub fn to_text(g: &WeightedGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("edge {} {} {}\n", e.u, e.v, e.weight));
    }
    out
}

pub fn to_json(g: &WeightedGraph) -> String {
    let doc = serde_json::json!({
        "vertices": g.vertex_count(),
        "edges": g.edges().iter().map(|e| [e.u as u64, e.v as u64, e.weight]).collect::<Vec<_>>(),
    });
    doc.to_string()
}

pub fn serialize(g: &WeightedGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Text => to_text(g),
        GraphFormat::Json => to_json(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_examples() {
        let g = parse_graph("vertices 3\nedge 1 2 2\nedge 2 3 3").unwrap();
        assert_eq!(g, WeightedGraph::new(3, [(1, 2, 2), (2, 3, 3)]).unwrap());
        let g = parse_graph("# path\n\nvertices 2   # two\nedge 1 2\n").unwrap();
        assert_eq!(g.weight(1, 2), Some(1));
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = parse_graph("edge 1 2 2").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }), "{err}");
        let err = parse_graph("vertices 3\nedge 1 x").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
        let err = parse_graph("vertices 3\nnode 1").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        assert!(matches!(parse_graph("").unwrap_err(), ParseError::Syntax { line: 1, .. }));
    }

    #[test]
    fn validation_errors_pass_through() {
        let err = parse_graph("vertices 2\nedge 1 1").unwrap_err();
        assert!(matches!(err, ParseError::Graph(GraphError::SelfLoop { vertex: 1 })));
        let err = parse_graph("vertices 2\nedge 1 2 -3").unwrap_err();
        assert!(matches!(err, ParseError::Graph(GraphError::NonPositiveWeight { weight: -3, .. })));
        let err = parse_graph("vertices 2\nedge 1 5").unwrap_err();
        assert!(matches!(err, ParseError::Graph(GraphError::VertexOutOfRange { vertex: 5, n: 2 })));
    }

    #[test]
    fn json_examples() {
        let g = parse_graph(r#"{"vertices": 3, "edges": [[1, 2, 2], [2, 3]]}"#).unwrap();
        assert_eq!(g, WeightedGraph::new(3, [(1, 2, 2), (2, 3, 1)]).unwrap());
        assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
        assert!(matches!(parse_graph(r#"{"vertices": 3, "edges": [[1]]}"#), Err(ParseError::Json(_))));
        assert!(matches!(parse_graph(r#"{"vertices": 3}"#), Err(ParseError::Json(_))));
    }
}
