use graph_core::{Density, SimpleGraph, VertexId};

use crate::{DensestResult, OracleError};

/// Exhaustive densest subgraph over all 2^n - 1 nonempty subsets.
///
/// Ties are broken by smallest subset size, then lexicographic vertex order.
/// Guarded to n <= 20.
pub fn brute_force_densest(g: &SimpleGraph) -> Result<DensestResult, OracleError> {
    let n = g.n();
    if n > 20 {
        return Err(OracleError::TooLarge(n));
    }
    // adjacency bitmasks
    let mut adj = vec![0u32; n as usize];
    for e in g.edges() {
        adj[e.u() as usize] |= 1 << e.v();
        adj[e.v() as usize] |= 1 << e.u();
    }

    let mut best_mask = 1u32;
    let mut best = Density::zero();
    for mask in 1u32..(1 << n) {
        let mut edges = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            edges += (adj[v as usize] & mask).count_ones();
        }
        let d = Density::new((edges / 2) as i64, mask.count_ones() as i64);
        if d > best || (d == best && tie_break_prefers(mask, best_mask)) {
            best = d;
            best_mask = mask;
        }
    }

    let witness = vertices_of(best_mask);
    Ok(DensestResult { density: best, witness })
}

fn vertices_of(mask: u32) -> Vec<VertexId> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

fn tie_break_prefers(candidate: u32, incumbent: u32) -> bool {
    let (cs, is) = (candidate.count_ones(), incumbent.count_ones());
    if cs != is {
        return cs < is;
    }
    vertices_of(candidate) < vertices_of(incumbent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::canonical_edge;

    #[test]
    fn triangle() {
        let mut g = SimpleGraph::new(3);
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            g.insert_edge(canonical_edge(a, b, 3).unwrap());
        }
        let r = brute_force_densest(&g).unwrap();
        assert_eq!(r.density, Density::new(1, 1));
        assert_eq!(r.witness, vec![0, 1, 2]);
    }

    #[test]
    fn single_edge() {
        let mut g = SimpleGraph::new(2);
        g.insert_edge(canonical_edge(0, 1, 2).unwrap());
        let r = brute_force_densest(&g).unwrap();
        assert_eq!(r.density, Density::new(1, 2));
    }

    #[test]
    fn four_cycle() {
        let mut g = SimpleGraph::new(4);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            g.insert_edge(canonical_edge(a, b, 4).unwrap());
        }
        let r = brute_force_densest(&g).unwrap();
        assert_eq!(r.density, Density::new(1, 1));
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn tie_break_smallest_then_lex() {
        // two disjoint edges: {0,1} and {2,3} both achieve 1/2, as does the
        // union at 2/4; smallest size then lex picks {0,1}
        let mut g = SimpleGraph::new(4);
        g.insert_edge(canonical_edge(0, 1, 4).unwrap());
        g.insert_edge(canonical_edge(2, 3, 4).unwrap());
        let r = brute_force_densest(&g).unwrap();
        assert_eq!(r.density, Density::new(1, 2));
        assert_eq!(r.witness, vec![0, 1]);
    }

    #[test]
    fn guard() {
        let g = SimpleGraph::new(21);
        assert_eq!(brute_force_densest(&g).unwrap_err(), OracleError::TooLarge(21));
    }
}
