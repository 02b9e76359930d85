//! Simple undirected graphs over dense vertex ids.

mod cuts;
mod io;
pub mod named;
mod structure;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cuts::{connected_components, find_edge_cuts};
pub use io::{parse_edge_list, write_edge_list};
pub use structure::{girth, independence_number, structure_report, StructureReport, INDEPENDENCE_LIMIT};

/// Simple undirected graph. Neighbor lists are kept sorted and mirrored by an
/// adjacency matrix.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "EdgeListRepr", try_from = "EdgeListRepr")]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr { n: g.n, edges: g.edges() }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;
    fn try_from(r: EdgeListRepr) -> Result<Self> {
        Graph::from_edges(r.n, &r.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n], matrix: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Loops, duplicates and out-of-range endpoints are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={}", self.n)));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("parallel edge ({u},{v})")));
        }
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return false;
        }
        self.matrix[u * self.n + v] = false;
        self.matrix[v * self.n + u] = false;
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True if every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("edges of a simple graph");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift).expect("edges of a simple graph");
        }
        g
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }
}

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceOracle {
    n: usize,
    dist: Vec<u32>,
}

pub const UNREACHABLE: u32 = u32::MAX;

impl DistanceOracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        for s in 0..n {
            for (t, d) in g.bfs(s).into_iter().enumerate() {
                if let Some(d) = d {
                    dist[s * n + t] = d;
                }
            }
        }
        DistanceOracle { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance, `None` if the vertices lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw distance with [`UNREACHABLE`] for disconnected pairs.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn within(&self, u: usize, v: usize, d: u32) -> bool {
        self.dist[u * self.n + v] <= d
    }

    /// Largest finite distance (0 for graphs with fewer than two vertices).
    pub fn max_finite(&self) -> u32 {
        self.dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }
}

pub fn distance_oracle(g: &Graph) -> DistanceOracle {
    DistanceOracle::new(g)
}

/// Graph with `{u, v}` an edge iff `1 <= dist(u, v) <= d`.
pub fn power_graph(g: &Graph, d: u32) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidGraph("power must be at least 1".into()));
    }
    let oracle = DistanceOracle::new(g);
    let n = g.n();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if oracle.within(u, v, d) {
                out.add_edge(u, v)?;
            }
        }
    }
    Ok(out)
}
