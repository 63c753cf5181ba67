//! DIMACS-style instance files with optional list lines.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>
//! l <v> <colors>
//! ```
//!
//! Vertices are 1-indexed in files and 0-indexed in memory; vertex `v` is
//! written as `v + 1`. A vertex without an `l` line has the full list.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::lists::ListAssignment;
use crate::palette::ColorSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("header declares {declared} edges, file has {found}")]
    EdgeCount { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WriteError {
    #[error("vertex {0} has an empty list")]
    EmptyList(usize),
    #[error("expected {expected} lists, got {got}")]
    ListMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub lists: ListAssignment,
}

impl Instance {
    pub fn with_full_lists(graph: Graph) -> Self {
        let lists = ListAssignment::full(graph.n());
        Instance { graph, lists }
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lists: Vec<Option<ColorSet>> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| ParseError::Line { line, msg };
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let Some(&kind) = tokens.first() else {
            continue;
        };
        if kind == "c" {
            continue;
        }
        let vertex = |tok: &str, n: usize| -> Result<usize, ParseError> {
            match tok.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                Ok(v) => Err(err(format!("vertex {v} outside 1..={n}"))),
                Err(_) => Err(err(format!("bad vertex `{tok}`"))),
            }
        };
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(err("second `p` line".into()));
                }
                let [_, "edge", n, m] = tokens[..] else {
                    return Err(err("expected `p edge <n> <m>`".into()));
                };
                let n = n
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{n}`")))?;
                let m = m
                    .parse()
                    .map_err(|_| err(format!("bad edge count `{m}`")))?;
                header = Some((n, m));
                lists = vec![None; n];
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("`e` before `p`".into()))?;
                let [_, u, v] = tokens[..] else {
                    return Err(err("expected `e <u> <v>`".into()));
                };
                let (u, v) = (vertex(u, n)?, vertex(v, n)?);
                if u == v {
                    return Err(err(format!("self-loop at {}", u + 1)));
                }
                edges.push((u, v));
            }
            "l" => {
                let (n, _) = header.ok_or_else(|| err("`l` before `p`".into()))?;
                let [_, v, colors] = tokens[..] else {
                    return Err(err("expected `l <v> <colors>`".into()));
                };
                let v = vertex(v, n)?;
                let set = ColorSet::parse(colors)
                    .filter(|s| !s.is_empty())
                    .ok_or_else(|| err(format!("bad color list `{colors}`")))?;
                if lists[v].replace(set).is_some() {
                    return Err(err(format!("second list for vertex {}", v + 1)));
                }
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }

    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    let graph = Graph::new(n, edges).expect("endpoints checked while parsing");
    let lists = ListAssignment::from_lists(
        lists
            .into_iter()
            .map(|l| l.unwrap_or(ColorSet::FULL))
            .collect(),
    );
    Ok(Instance { graph, lists })
}

/// Canonical form: header, edges ascending, then lists other than the full
/// one. Comments are not preserved.
pub fn write_instance(inst: &Instance) -> Result<String, WriteError> {
    let g = &inst.graph;
    if inst.lists.len() != g.n() {
        return Err(WriteError::ListMismatch {
            expected: g.n(),
            got: inst.lists.len(),
        });
    }
    if let Some(v) = (0..g.n()).find(|&v| inst.lists.get(v).is_empty()) {
        return Err(WriteError::EmptyList(v));
    }
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    for v in 0..g.n() {
        let l = inst.lists.get(v);
        if l != ColorSet::FULL {
            writeln!(out, "l {} {}", v + 1, l).unwrap();
        }
    }
    Ok(out)
}
