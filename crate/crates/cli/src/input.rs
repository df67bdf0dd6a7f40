//! Graph file ingestion: edge-list text and a DOT subset.
//!
//! Edge list: one edge per line, `i j [m]`, 1-indexed vertices, optional
//! multiplicity `m >= 1` (default 1), `#` comments. DOT subset: a
//! `graph ... {` header, undirected `i -- j` lines, and a closing `}`.
//! The sink defaults to the largest vertex index unless overridden.

use parkres_core::Multigraph;

use crate::InputError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    /// 1-based weighted edges.
    pub edges: Vec<(usize, usize, u32)>,
    /// Largest vertex index seen.
    pub vertex_count: usize,
}

/// Parses an edge-list or DOT-subset file.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, InputError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("graph") || l.starts_with("strict graph") => parse_dot(text),
        _ => parse_edge_list(text),
    }
}

fn parse_edge_list(text: &str) -> Result<ParsedGraph, InputError> {
    let mut edges = Vec::new();
    let mut vertex_count = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(InputError(format!(
                "line {line_no}: expected \"i j [m]\", got {fields:?}"
            )));
        }
        let parse = |s: &str, what: &str| -> Result<usize, InputError> {
            s.parse::<usize>().map_err(|_| {
                InputError(format!("line {line_no}: {what} `{s}` is not a positive integer"))
            })
        };
        let u = parse(fields[0], "vertex")?;
        let v = parse(fields[1], "vertex")?;
        let m = if fields.len() == 3 {
            parse(fields[2], "multiplicity")? as u32
        } else {
            1
        };
        if u == 0 || v == 0 {
            return Err(InputError(format!("line {line_no}: vertices are 1-indexed")));
        }
        if m == 0 {
            return Err(InputError(format!("line {line_no}: multiplicity must be >= 1")));
        }
        vertex_count = vertex_count.max(u).max(v);
        edges.push((u, v, m));
    }
    if edges.is_empty() {
        return Err(InputError("no edges found".into()));
    }
    Ok(ParsedGraph {
        edges,
        vertex_count,
    })
}

fn parse_dot(text: &str) -> Result<ParsedGraph, InputError> {
    let mut edges = Vec::new();
    let mut vertex_count = 0usize;
    let mut in_body = false;
    let mut closed = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split("//").next().unwrap_or("").trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !in_body {
            if (line.starts_with("graph") || line.starts_with("strict graph"))
                && line.ends_with('{')
            {
                in_body = true;
                continue;
            }
            return Err(InputError(format!(
                "line {line_no}: expected `graph <name> {{`"
            )));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        if closed {
            return Err(InputError(format!("line {line_no}: content after `}}`")));
        }
        let stmt = line.trim_end_matches(';').trim();
        let parts: Vec<&str> = stmt.split("--").map(str::trim).collect();
        if parts.len() != 2 {
            return Err(InputError(format!(
                "line {line_no}: only undirected `i -- j` edges are supported"
            )));
        }
        let parse = |s: &str| -> Result<usize, InputError> {
            s.parse::<usize>()
                .map_err(|_| InputError(format!("line {line_no}: vertex `{s}` is not an integer")))
        };
        let u = parse(parts[0])?;
        let v = parse(parts[1])?;
        if u == 0 || v == 0 {
            return Err(InputError(format!("line {line_no}: vertices are 1-indexed")));
        }
        vertex_count = vertex_count.max(u).max(v);
        edges.push((u, v, 1));
    }
    if !closed {
        return Err(InputError("unterminated DOT graph: missing `}`".into()));
    }
    if edges.is_empty() {
        return Err(InputError("no edges found".into()));
    }
    Ok(ParsedGraph {
        edges,
        vertex_count,
    })
}

/// Builds the multigraph (0-based) with an optional 1-based sink override.
pub fn build_graph(parsed: &ParsedGraph, sink: Option<usize>) -> Result<Multigraph, InputError> {
    let edges: Vec<(usize, usize, u32)> = parsed
        .edges
        .iter()
        .map(|&(u, v, m)| (u - 1, v - 1, m))
        .collect();
    let graph = Multigraph::from_weighted_edges(parsed.vertex_count, &edges)
        .map_err(|e| InputError(format!("{e}")))?;
    match sink {
        None => Ok(graph),
        Some(s) => {
            if s == 0 || s > parsed.vertex_count {
                return Err(InputError(format!(
                    "sink {s} out of range 1..={}",
                    parsed.vertex_count
                )));
            }
            graph.with_sink(s - 1).map_err(|e| InputError(format!("{e}")))
        }
    }
}
