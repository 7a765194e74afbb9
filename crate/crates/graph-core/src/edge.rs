use crate::GraphError;

pub type VertexId = u32;

/// Canonical undirected edge with `u < v`. No self-loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Canonicalizes endpoint order. Rejects self-loops.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(if a < b { Edge { u: a, v: b } } else { Edge { u: b, v: a } })
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

/// Canonical edge constructor with a range check against the vertex count.
pub fn canonical_edge(a: VertexId, b: VertexId, n: u32) -> Result<Edge, GraphError> {
    for id in [a, b] {
        if id >= n {
            return Err(GraphError::VertexOutOfRange { id, n });
        }
    }
    Edge::new(a, b)
}

/// One stream element: an edge insertion or an empty update.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Update {
    Insert(Edge),
    Noop,
}

/// Insertion-only update sequence over a fixed vertex set [0, n).
///
/// Repeated insertions of the same edge are permitted; the graph of interest
/// is always the simple graph of all inserted edges.
#[derive(Clone, Debug)]
pub struct EdgeStream {
    n: u32,
    updates: Vec<Update>,
}

impl EdgeStream {
    /// Builds a stream, enforcing the length bound T <= n^cbar.
    pub fn new(n: u32, updates: Vec<Update>, cbar: f64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let bound = (n as f64).powf(cbar).floor() as u64;
        if updates.len() as u64 > bound {
            return Err(GraphError::StreamTooLong { len: updates.len(), bound });
        }
        for upd in &updates {
            if let Update::Insert(e) = upd {
                if e.v() >= n {
                    return Err(GraphError::VertexOutOfRange { id: e.v(), n });
                }
            }
        }
        Ok(EdgeStream { n, updates })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.updates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.updates.is_empty()
    }

    pub fn updates(&self) -> &[Update] {
        &self.updates
    }

    pub fn iter(&self) -> impl Iterator<Item = &Update> {
        self.updates.iter()
    }
}
