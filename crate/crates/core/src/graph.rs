//! Finite simple undirected graphs on the vertex set `0..n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::PartitionSpec;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Largest order the bitset-based algorithms (colouring, completion search) accept.
pub const MAX_BITSET_ORDER: usize = 64;

/// Normalizes an unordered pair so that `u < v`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple graph. Edge orientation is irrelevant and duplicates collapse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<Edge>,
    neighbours: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `order` vertices. Reversed and repeated pairs are merged.
    pub fn new<I>(order: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.insert(edge(u, v));
        }
        Ok(Self::from_edge_set(order, edges))
    }

    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        Self::new(order, std::iter::empty())
    }

    pub(crate) fn from_edge_set(order: usize, edges: BTreeSet<Edge>) -> Self {
        let mut neighbours = vec![Vec::new(); order];
        for &(u, v) in &edges {
            neighbours[u].push(v);
            neighbours[v].push(u);
        }
        for list in &mut neighbours {
            list.sort_unstable();
        }
        Self {
            order,
            edges,
            neighbours,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&edge(u, v))
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.neighbours
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
    }

    pub fn min_degree(&self) -> usize {
        self.neighbours.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.neighbours.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `n(n-1)/2` for the order of this graph.
    pub fn max_size(&self) -> usize {
        self.order * (self.order - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 0..self.order {
            for v in (u + 1)..self.order {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Graph::from_edge_set(self.order, edges)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.max_size()
    }

    /// Returns a new graph with the extra edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        Graph::new(self.order, self.edges().chain(extra))
    }

    /// `K_1 + G`: appends one vertex adjacent to every existing vertex.
    pub fn join_vertex(&self) -> Graph {
        let hub = self.order;
        let mut edges = self.edges.clone();
        edges.extend((0..hub).map(|v| (v, hub)));
        Graph::from_edge_set(self.order + 1, edges)
    }

    /// Part sizes (ascending) when the graph is complete multipartite.
    ///
    /// Vertices are grouped by closed non-neighbourhood; the graph is complete
    /// multipartite exactly when non-adjacency is an equivalence relation.
    pub fn complete_multipartite_parts(&self) -> Option<PartitionSpec> {
        let closed_non_nbhd = |v: usize| -> BTreeSet<usize> {
            (0..self.order)
                .filter(|&u| u == v || !self.has_edge(u, v))
                .collect()
        };
        let classes: Vec<BTreeSet<usize>> = (0..self.order).map(closed_non_nbhd).collect();
        let mut seen = vec![false; self.order];
        let mut parts = Vec::new();
        for v in 0..self.order {
            if seen[v] {
                continue;
            }
            for &u in &classes[v] {
                if classes[u] != classes[v] {
                    return None;
                }
                seen[u] = true;
            }
            parts.push(classes[v].len() as u64);
        }
        PartitionSpec::new(parts).ok()
    }

    /// Adjacency rows as bitmasks; only available up to [`MAX_BITSET_ORDER`] vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.order > MAX_BITSET_ORDER {
            return Err(Error::GuardExceeded {
                order: self.order,
                limit: MAX_BITSET_ORDER,
            });
        }
        Ok(self
            .neighbours
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &u| m | (1u64 << u)))
            .collect())
    }
}
