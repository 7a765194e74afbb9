//! Graph, edge, and stream primitives shared by the streaming densest-subgraph
//! stack: canonical undirected edges, insertion-only update streams, simple
//! graphs with degree tracking, exact rational densities, and the circulant
//! regular-graph builder used for densification.

mod density;
mod edge;
mod graph;
pub mod io;
mod regular;

pub use density::Density;
pub use edge::{canonical_edge, Edge, EdgeStream, Update, VertexId};
pub use graph::{induced_density, union_overlay, SimpleGraph};
pub use regular::{build_regular_graph, RegularOverlay};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("self-loop {0} rejected")]
    SelfLoop(VertexId),
    #[error("vertex id {id} out of range for n={n}")]
    VertexOutOfRange { id: VertexId, n: u32 },
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("stream length {len} exceeds n^cbar = {bound}")]
    StreamTooLong { len: usize, bound: u64 },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("stream parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
