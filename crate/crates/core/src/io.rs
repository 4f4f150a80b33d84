//! Text formats for graphs.
//!
//! * Edge list: one `u v` pair of 0-based ids per line, optionally preceded by
//!   an `n m` header. `#` starts a comment. A first line is read as a header
//!   only when it is consistent with the rest of the file: `n >= 1`, exactly
//!   `m` lines follow and every id is below `n`. Otherwise it is an edge.
//! * DIMACS edge format: `p edge n m`, then `e u v` lines with 1-based ids;
//!   `c` lines are comments.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::Graph;

fn parse_id(token: &str, line: usize) -> Result<usize, GraphError> {
    token.parse::<usize>().map_err(|_| GraphError::Parse {
        line,
        message: format!("expected a non-negative integer, found `{token}`"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(GraphError::Parse {
                line,
                message: format!("expected two integers, found `{content}`"),
            });
        };
        pairs.push((line, parse_id(a, line)?, parse_id(b, line)?));
    }

    let header = match pairs.first() {
        Some(&(_, n, m)) if n >= 1 && m == pairs.len() - 1 => {
            let rest_in_range = pairs[1..].iter().all(|&(_, u, v)| u < n && v < n);
            rest_in_range.then_some(n)
        }
        _ => None,
    };
    let (n, edges) = match header {
        Some(n) => (n, &pairs[1..]),
        None => {
            let n = pairs
                .iter()
                .map(|&(_, u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0);
            (n, &pairs[..])
        }
    };
    Graph::from_edges(n, edges.iter().map(|&(_, u, v)| (u, v)))
}

/// Canonical edge-list text: an `n m` header (omitted for the empty graph)
/// followed by the edges sorted by `(u, v)` with `u < v`.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if g.vertex_count() > 0 {
        let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(GraphError::DuplicateHeader { line });
                }
                let format = tokens.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(GraphError::Parse {
                        line,
                        message: "expected `p edge <n> <m>`".into(),
                    });
                }
                let n = parse_id(tokens.next().unwrap_or(""), line)?;
                let m = parse_id(tokens.next().unwrap_or(""), line)?;
                if tokens.next().is_some() {
                    return Err(GraphError::Parse {
                        line,
                        message: "trailing tokens after `p edge <n> <m>`".into(),
                    });
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(GraphError::MissingHeader);
                };
                let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(GraphError::Parse {
                        line,
                        message: "expected `e <u> <v>`".into(),
                    });
                };
                let (u, v) = (parse_id(a, line)?, parse_id(b, line)?);
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(GraphError::Parse {
                            line,
                            message: format!("vertex id {id} out of range 1..={n}"),
                        });
                    }
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(GraphError::Parse {
                    line,
                    message: format!("unknown line type `{other}`"),
                })
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let (n, m) = header.ok_or(GraphError::MissingHeader)?;
    if m != edges.len() {
        return Err(GraphError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses either format, choosing DIMACS when the first meaningful line is a
/// `p` or `c` line.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("p") | Some("c") => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}
