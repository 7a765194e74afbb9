use std::cmp::Reverse;
use std::collections::BinaryHeap;

use graph_core::{Density, SimpleGraph, VertexId};

use crate::DensestResult;

/// Repeated minimum-degree removal; returns the densest prefix of the
/// ordering. Guaranteed within a factor 2 of the true maximum density.
/// Ties pick the lowest vertex id, so the result is deterministic.
pub fn charikar_peel(g: &SimpleGraph) -> DensestResult {
    let n = g.n() as usize;
    if g.edge_count() == 0 {
        return DensestResult { density: Density::zero(), witness: vec![0] };
    }

    let adj = g.adjacency();
    let mut deg: Vec<i64> = g.degrees().iter().map(|&d| d as i64).collect();
    let mut alive = vec![true; n];
    let mut heap: BinaryHeap<Reverse<(i64, VertexId)>> =
        (0..n).map(|v| Reverse((deg[v], v as VertexId))).collect();

    let mut edges_left = g.edge_count() as i64;
    let mut verts_left = n as i64;
    let mut best = Density::new(edges_left, verts_left);
    let mut best_removed = 0usize;
    let mut removal_order = Vec::with_capacity(n);

    while verts_left > 1 {
        let v = loop {
            let Reverse((d, v)) = heap.pop().expect("heap tracks all alive vertices");
            if alive[v as usize] && deg[v as usize] == d {
                break v;
            }
        };
        alive[v as usize] = false;
        edges_left -= deg[v as usize];
        verts_left -= 1;
        removal_order.push(v);
        for &u in &adj[v as usize] {
            if alive[u as usize] {
                deg[u as usize] -= 1;
                heap.push(Reverse((deg[u as usize], u)));
            }
        }
        let d = Density::new(edges_left, verts_left);
        if d > best {
            best = d;
            best_removed = removal_order.len();
        }
    }

    let removed: std::collections::HashSet<VertexId> =
        removal_order[..best_removed].iter().copied().collect();
    let witness: Vec<VertexId> =
        (0..g.n()).filter(|v| !removed.contains(v)).collect();
    DensestResult { density: best, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::canonical_edge;

    #[test]
    fn clique_stays_intact() {
        let mut g = SimpleGraph::new(4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                g.insert_edge(canonical_edge(u, v, 4).unwrap());
            }
        }
        let r = charikar_peel(&g);
        assert_eq!(r.density, Density::new(3, 2));
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn star_graph() {
        // center 0 with 5 leaves; max density is 5/6 and peeling finds it
        let mut g = SimpleGraph::new(6);
        for v in 1..6 {
            g.insert_edge(canonical_edge(0, v, 6).unwrap());
        }
        let r = charikar_peel(&g);
        assert_eq!(r.density, Density::new(5, 6));
        assert!(r.density.cmp_ratio(5, 12) == std::cmp::Ordering::Greater);
    }

    #[test]
    fn edgeless() {
        let g = SimpleGraph::new(3);
        let r = charikar_peel(&g);
        assert_eq!(r.density, Density::zero());
    }
}
