use crate::{Edge, GraphError};

/// Result of building the densification overlay: the edge set of a 2k-regular
/// circulant graph, plus metadata recording whether the requested degree
/// parameter had to be clamped to fit the vertex count.
#[derive(Clone, Debug)]
pub struct RegularOverlay {
    pub edges: Vec<Edge>,
    /// Effective degree parameter k actually used (overlay is 2k-regular).
    pub effective_kappa: u32,
    /// True when the requested kappa was clamped to floor((n-1)/2).
    pub clamped: bool,
}

/// Builds an n-vertex 2k-regular circulant graph: vertex i is adjacent to
/// (i +/- j) mod n for j = 1..=k.
///
/// When n <= 2k the request is infeasible; k is clamped to floor((n-1)/2)
/// (for even n this yields a (n-2)-regular graph, the densest circulant
/// without duplicate offsets) and the clamp is flagged in the result.
pub fn build_regular_graph(n: u32, kappa: u32) -> Result<RegularOverlay, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let max_kappa = (n.saturating_sub(1)) / 2;
    let (k, clamped) = if kappa > max_kappa { (max_kappa, true) } else { (kappa, false) };

    let mut edges = Vec::with_capacity((n as usize) * (k as usize));
    for j in 1..=k {
        for i in 0..n {
            let a = i;
            let b = (i + j) % n;
            edges.push(Edge::new(a, b).expect("offset < n/2 never yields a self-loop"));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(RegularOverlay { edges, effective_kappa: k, clamped })
}
