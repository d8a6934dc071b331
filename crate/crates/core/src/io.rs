//! DIMACS and plain edge-list text formats.
//!
//! DIMACS: `p edge N M` header, `e u v` edge lines with 1-based ids,
//! `c ...` comments. EDGELIST: a first line holding `N`, then one `u v` pair
//! per line with 0-based ids. Emission sorts edges ascending with `u < v`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

/// Guesses the format from the first meaningful line: DIMACS files open with
/// a `c` comment or the `p` header, edge lists with a bare vertex count.
pub fn sniff_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|line| !line.is_empty());
    match first.and_then(|line| line.split_whitespace().next()) {
        Some("p") | Some("c") | Some("e") => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Parses with the format picked by [`sniff_format`].
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    parse_graph(text, sniff_format(text))
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.n_vertices(), g.n_edges()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        GraphFormat::EdgeList => {
            writeln!(out, "{}", g.n_vertices()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_count(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("invalid {what} `{token}`")))
}

fn add_edge(
    edges: &mut Vec<(usize, usize)>,
    n: usize,
    u: usize,
    v: usize,
    line: usize,
) -> Result<()> {
    if u >= n || v >= n {
        return Err(parse_error(
            line,
            format!("edge endpoint out of range for {n} vertices"),
        ));
    }
    if u == v {
        return Err(parse_error(line, format!("self-loop on vertex {u}")));
    }
    edges.push((u, v));
    Ok(())
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = 0;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_error(line_no, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_error(
                            line_no,
                            format!("expected `p edge`, found {other:?}"),
                        ))
                    }
                }
                let n = parse_count(tokens.next(), line_no, "vertex count")?;
                let m = parse_count(tokens.next(), line_no, "edge count")?;
                if tokens.next().is_some() {
                    return Err(parse_error(line_no, "trailing tokens on problem line"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) =
                    header.ok_or_else(|| parse_error(line_no, "edge before problem line"))?;
                let u = parse_count(tokens.next(), line_no, "endpoint")?;
                let v = parse_count(tokens.next(), line_no, "endpoint")?;
                if tokens.next().is_some() {
                    return Err(parse_error(line_no, "trailing tokens on edge line"));
                }
                if u == 0 || v == 0 {
                    return Err(parse_error(line_no, "DIMACS ids are 1-based"));
                }
                add_edge(&mut edges, n, u - 1, v - 1, line_no)?;
                edge_lines += 1;
            }
            Some(other) => {
                return Err(parse_error(line_no, format!("unknown line type `{other}`")))
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_error(last_line.max(1), "missing problem line"))?;
    if edge_lines != m {
        return Err(parse_error(
            last_line.max(1),
            format!("problem line declares {m} edges but {edge_lines} were listed"),
        ));
    }
    Graph::new(n, edges)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match n {
            None => {
                n = Some(parse_count(tokens.next(), line_no, "vertex count")?);
                if tokens.next().is_some() {
                    return Err(parse_error(line_no, "first line must hold only the vertex count"));
                }
            }
            Some(count) => {
                let u = parse_count(tokens.next(), line_no, "endpoint")?;
                let v = parse_count(tokens.next(), line_no, "endpoint")?;
                if tokens.next().is_some() {
                    return Err(parse_error(line_no, "expected exactly two ids"));
                }
                add_edge(&mut edges, count, u, v, line_no)?;
            }
        }
    }
    let n = n.ok_or_else(|| parse_error(last_line.max(1), "missing vertex count"))?;
    Graph::new(n, edges)
}
