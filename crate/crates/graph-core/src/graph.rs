use std::collections::HashSet;

use crate::{Density, Edge, EdgeStream, GraphError, Update, VertexId};

/// Simple undirected graph over a fixed vertex set [0, n) with a duplicate-free
/// edge set and a per-vertex degree index.
#[derive(Clone, Debug)]
pub struct SimpleGraph {
    n: u32,
    edges: HashSet<Edge>,
    degrees: Vec<u32>,
}

impl SimpleGraph {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        SimpleGraph { n, edges: HashSet::new(), degrees: vec![0; n as usize] }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: u32, edges: I) -> Self {
        let mut g = SimpleGraph::new(n);
        for e in edges {
            g.insert_edge(e);
        }
        g
    }

    /// Replays every insert of a stream into the simple graph.
    pub fn from_stream(stream: &EdgeStream) -> Self {
        let mut g = SimpleGraph::new(stream.n());
        for upd in stream.iter() {
            if let Update::Insert(e) = upd {
                g.insert_edge(*e);
            }
        }
        g
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: VertexId) -> u32 {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    /// Inserts an edge; returns false if it was already present.
    /// Panics if an endpoint is out of range.
    pub fn insert_edge(&mut self, e: Edge) -> bool {
        assert!(e.v() < self.n, "edge endpoint {} out of range for n={}", e.v(), self.n);
        let fresh = self.edges.insert(e);
        if fresh {
            self.degrees[e.u() as usize] += 1;
            self.degrees[e.v() as usize] += 1;
        }
        fresh
    }

    /// Removes an edge; returns false if it was absent.
    pub fn remove_edge(&mut self, e: &Edge) -> bool {
        let present = self.edges.remove(e);
        if present {
            self.degrees[e.u() as usize] -= 1;
            self.degrees[e.v() as usize] -= 1;
        }
        present
    }

    /// Adjacency lists, built on demand.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.n as usize];
        for e in &self.edges {
            adj[e.u() as usize].push(e.v());
            adj[e.v() as usize].push(e.u());
        }
        adj
    }

    /// Recounts degrees from the edge set (consistency check for tests).
    pub fn recount_degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n as usize];
        for e in &self.edges {
            deg[e.u() as usize] += 1;
            deg[e.v() as usize] += 1;
        }
        deg
    }
}

/// Exact density of the subgraph induced by `subset`.
pub fn induced_density(g: &SimpleGraph, subset: &[VertexId]) -> Result<Density, GraphError> {
    if subset.is_empty() {
        return Err(GraphError::EmptySubset);
    }
    let mut member = vec![false; g.n() as usize];
    for &v in subset {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { id: v, n: g.n() });
        }
        member[v as usize] = true;
    }
    let size = member.iter().filter(|&&m| m).count() as i64;
    let mut inside = 0i64;
    for e in g.edges() {
        if member[e.u() as usize] && member[e.v() as usize] {
            inside += 1;
        }
    }
    Ok(Density::new(inside, size))
}

/// Duplicate-free union of a graph with an overlay edge set on the same
/// vertex range.
pub fn union_overlay(g: &SimpleGraph, overlay: &[Edge]) -> SimpleGraph {
    let mut out = g.clone();
    for e in overlay {
        out.insert_edge(*e);
    }
    out
}
