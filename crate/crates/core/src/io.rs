//! Edge-list and JSON graph files.
//!
//! Edge-list: a header line `n m`, then `m` lines `u v`. Anything after `#`
//! on a line is a comment; blank lines are skipped. JSON: `{"n": 5, "edges": [[0, 1], ...]}`.
//! Vertices are 0-based unless `one_based` is set.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "txt" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::Domain(format!("unknown graph format '{other}'"))),
        }
    }
}

impl GraphFormat {
    /// Guesses the format from the first non-blank character.
    pub fn sniff(text: &str) -> GraphFormat {
        match text.trim_start().chars().next() {
            Some('{') => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn read_graph(text: &str, format: GraphFormat, one_based: bool) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text, one_based),
        GraphFormat::Json => parse_json(text, one_based),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat, one_based: bool) -> String {
    let shift = usize::from(one_based);
    match format {
        GraphFormat::EdgeList => {
            let mut out = format!("{} {}\n", g.order(), g.size());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{} {}", u + shift, v + shift);
            }
            out
        }
        GraphFormat::Json => {
            let doc = JsonGraph {
                n: g.order(),
                edges: g.edges().map(|(u, v)| [u + shift, v + shift]).collect(),
            };
            let mut s = serde_json::to_string(&doc).expect("graph serializes");
            s.push('\n');
            s
        }
    }
}

fn to_index(raw: usize, one_based: bool, order: usize, line: usize) -> Result<usize> {
    if one_based {
        raw.checked_sub(1).ok_or(Error::Parse {
            line,
            message: "vertex 0 in one-based input".into(),
        })
    } else if raw >= order {
        Err(Error::VertexOutOfRange { vertex: raw, order })
    } else {
        Ok(raw)
    }
}

fn parse_edge_list(text: &str, one_based: bool) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let nums = parse_pair(header, header_line, "header must be 'n m'")?;
    let (order, declared) = nums;
    if order == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut edges = BTreeSet::new();
    let mut count = 0usize;
    for (line, body) in lines {
        let (a, b) = parse_pair(body, line, "edge line must be 'u v'")?;
        let u = to_index(a, one_based, order, line)?;
        let v = to_index(b, one_based, order, line)?;
        if u >= order || v >= order {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                order,
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !edges.insert(edge(u, v)) {
            log::warn!("line {line}: duplicate edge {{{u}, {v}}} ignored");
        }
        count += 1;
    }
    if count != declared {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {declared} edges, found {count}"),
        });
    }
    Ok(Graph::from_edge_set(order, edges))
}

fn parse_pair(body: &str, line: usize, what: &str) -> Result<(usize, usize)> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("{what}, got {} token(s)", tokens.len()),
        });
    }
    let parse = |t: &str| {
        t.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: '{t}'"),
        })
    };
    Ok((parse(tokens[0])?, parse(tokens[1])?))
}

fn parse_json(text: &str, one_based: bool) -> Result<Graph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if doc.n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut edges = BTreeSet::new();
    for (i, [a, b]) in doc.edges.into_iter().enumerate() {
        let u = to_index(a, one_based, doc.n, i + 1)?;
        let v = to_index(b, one_based, doc.n, i + 1)?;
        if u >= doc.n || v >= doc.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                order: doc.n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !edges.insert(edge(u, v)) {
            log::warn!("edge #{}: duplicate edge {{{u}, {v}}} ignored", i + 1);
        }
    }
    Ok(Graph::from_edge_set(doc.n, edges))
}
