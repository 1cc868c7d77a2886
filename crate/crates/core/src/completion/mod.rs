//! Chromatic completion: pseudo completion graphs, the exact ζ solver,
//! witness completion edges and the complement upper bound.

mod search;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coloring::{bad_edges, chromatic_number, enumerate_chromatic_partitions, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_BITSET_ORDER};

/// Default largest order the solver accepts without an override.
pub const DEFAULT_MAX_ORDER: usize = 24;

/// Largest order accepted by [`zeta_exhaustive`].
pub const EXHAUSTIVE_MAX_ORDER: usize = 10;

/// Size and time guards for [`zeta`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub timeout: Option<Duration>,
    /// Threads for the value search; the result does not depend on it.
    pub workers: usize,
    /// Collect every optimal canonical colouring instead of only the least.
    pub collect_all: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            timeout: None,
            workers: 1,
            collect_all: false,
        }
    }
}

impl Limits {
    /// Raises the order guard to the largest size the solver can represent.
    pub fn forced(mut self) -> Self {
        self.max_order = MAX_BITSET_ORDER;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    pub fn collecting_all(mut self) -> Self {
        self.collect_all = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionResult {
    pub zeta: u64,
    /// False only when the search timed out; `zeta` is then a lower bound.
    pub exact: bool,
    pub chi: usize,
    /// Least canonical colouring attaining `zeta`.
    pub witness: Colouring,
    pub completion_edges: Vec<Edge>,
    /// ε(H(φ)) for the witness.
    pub pseudo_size: u64,
    /// Nodes visited by the deterministic witness pass.
    pub explored: u64,
    /// Every optimal canonical colouring, when requested through [`Limits::collect_all`].
    pub optima: Vec<Colouring>,
}

#[derive(Serialize)]
struct CompletionJson<'a> {
    zeta: u64,
    exact: bool,
    classes: Vec<Vec<usize>>,
    completion_edges: Vec<[usize; 2]>,
    explored: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    optima: Vec<&'a Colouring>,
}

impl Serialize for CompletionResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CompletionJson {
            zeta: self.zeta,
            exact: self.exact,
            classes: self.witness.classes(),
            completion_edges: self.completion_edges.iter().map(|&(u, v)| [u, v]).collect(),
            explored: self.explored,
            optima: self.optima.iter().collect(),
        }
        .serialize(serializer)
    }
}

/// `Σ_{i<j} θᵢθⱼ − ε`. Negative values are returned as-is.
pub fn pseudo_completion_edge_gain(theta: &[u64], eps: u64) -> i64 {
    let total: u64 = theta.iter().sum();
    let squares: u64 = theta.iter().map(|t| t * t).sum();
    ((total * total - squares) / 2) as i64 - eps as i64
}

/// Complete multipartite graph whose parts are the colour classes.
pub fn pseudo_completion_graph(col: &Colouring) -> Graph {
    let n = col.order();
    let pairs = (0..n).flat_map(|u| {
        ((u + 1)..n)
            .filter(move |&v| col.colour(u) != col.colour(v))
            .map(move |v| (u, v))
    });
    Graph::new(n, pairs.collect::<Vec<_>>()).expect("colouring has at least one vertex")
}

fn check_chromatic(g: &Graph, col: &Colouring) -> Result<()> {
    let bad = bad_edges(g, col)?;
    if !bad.is_empty() {
        return Err(Error::ImproperColouring(bad.len()));
    }
    let chi = chromatic_number(g)?;
    if col.class_count() != chi {
        return Err(Error::WrongClassCount {
            expected: chi,
            found: col.class_count(),
        });
    }
    Ok(())
}

/// Cross-class pairs that are not already edges, in lexicographic order.
pub fn completion_edges(g: &Graph, col: &Colouring) -> Result<Vec<Edge>> {
    check_chromatic(g, col)?;
    Ok(cross_class_non_edges(g, col))
}

fn cross_class_non_edges(g: &Graph, col: &Colouring) -> Vec<Edge> {
    let n = g.order();
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| col.colour(u) != col.colour(v) && !g.has_edge(u, v))
        .collect()
}

/// `g` plus its completion edges under `col`.
pub fn completion_graph(g: &Graph, col: &Colouring) -> Result<Graph> {
    let extra = completion_edges(g, col)?;
    g.with_edges(extra)
}

/// ε(Ḡ), an upper bound on ζ(G) that is attained only by complete graphs.
pub fn upper_bound_complement(g: &Graph) -> u64 {
    (g.max_size() - g.size()) as u64
}

/// Exact chromatic completion number with the least canonical witness.
pub fn zeta(g: &Graph, limits: &Limits) -> Result<CompletionResult> {
    let limit = limits.max_order.min(MAX_BITSET_ORDER);
    if g.order() > limit {
        return Err(Error::GuardExceeded {
            order: g.order(),
            limit,
        });
    }
    let deadline = limits.timeout.map(|t| Instant::now() + t);
    let adj = g.adjacency_masks()?;
    let chi = chromatic_number(g)?;
    let outcome = search::Search::new(&adj, chi, deadline)
        .run(limits.workers.max(1), limits.collect_all)
        .ok_or(Error::Timeout)?;

    let optima: Vec<Colouring> = outcome
        .witnesses
        .iter()
        .map(|a| Colouring::from_assignment(a))
        .collect();
    let witness = optima[0].clone();
    let n = g.order() as u64;
    let pseudo_size = (n * n - outcome.best) / 2;
    let completion_edges = cross_class_non_edges(g, &witness);
    debug_assert_eq!(pseudo_size - g.size() as u64, completion_edges.len() as u64);
    Ok(CompletionResult {
        zeta: pseudo_size - g.size() as u64,
        exact: outcome.exact,
        chi,
        witness,
        completion_edges,
        pseudo_size,
        explored: outcome.explored,
        optima: if limits.collect_all { optima } else { Vec::new() },
    })
}

/// Maximum gain over the full stream of chromatic partitions, no pruning.
pub fn zeta_exhaustive(g: &Graph) -> Result<u64> {
    if g.order() > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::GuardExceeded {
            order: g.order(),
            limit: EXHAUSTIVE_MAX_ORDER,
        });
    }
    let eps = g.size() as u64;
    let best = enumerate_chromatic_partitions(g)?
        .map(|col| pseudo_completion_edge_gain(&col.theta(), eps))
        .max()
        .expect("every graph has a chromatic partition");
    Ok(best as u64)
}
