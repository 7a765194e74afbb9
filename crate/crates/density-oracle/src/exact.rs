use graph_core::{induced_density, Density, SimpleGraph, VertexId};

use crate::maxflow::Dinic;

/// Exact maximum density together with a vertex subset attaining it.
#[derive(Clone, Debug)]
pub struct DensestResult {
    pub density: Density,
    pub witness: Vec<VertexId>,
}

/// Exact densest subgraph via repeated min-cut tests on the classical flow
/// network (source -> v at capacity m, v -> sink at capacity m + 2g - deg(v),
/// one unit-pair per edge, all scaled by the guess denominator so capacities
/// stay integral).
///
/// A guess g is tested with one max-flow: the cut falls short of m*n exactly
/// when some subset has density above g, and the residual source side is such
/// a subset. Guesses walk up through achieved densities, so every iteration
/// is snapped to an exact rational and the final flow certifies optimality.
///
/// Edgeless graphs return density 0 with a single-vertex witness.
pub fn exact_densest(g: &SimpleGraph) -> DensestResult {
    exact_densest_with_hint(g, None)
}

/// Same as [`exact_densest`], seeded with a candidate subset (typically the
/// previous step's witness) so unchanged graphs resolve in a single cut test.
pub fn exact_densest_with_hint(g: &SimpleGraph, hint: Option<&[VertexId]>) -> DensestResult {
    let n = g.n() as i64;
    let m = g.edge_count() as i64;
    if m == 0 {
        return DensestResult { density: Density::zero(), witness: vec![0] };
    }
    // Complete graph: the whole vertex set is densest.
    if m == n * (n - 1) / 2 {
        return DensestResult {
            density: Density::new(m, n),
            witness: (0..g.n()).collect(),
        };
    }

    let mut best_witness: Vec<VertexId> = (0..g.n()).collect();
    let mut best = Density::new(m, n);
    if let Some(h) = hint {
        if !h.is_empty() && h.iter().all(|&v| v < g.n()) {
            let mut cand = h.to_vec();
            cand.sort_unstable();
            cand.dedup();
            if let Ok(d) = induced_density(g, &cand) {
                if d > best {
                    best = d;
                    best_witness = cand;
                }
            }
        }
    }

    while let Some((d, s)) = denser_than(g, best) {
        debug_assert!(d > best);
        best = d;
        best_witness = s;
    }
    best_witness.sort_unstable();
    debug_assert_eq!(induced_density(g, &best_witness).unwrap(), best);
    DensestResult { density: best, witness: best_witness }
}

/// One cut test: returns a subset strictly denser than `guess`, or None if no
/// such subset exists.
fn denser_than(g: &SimpleGraph, guess: Density) -> Option<(Density, Vec<VertexId>)> {
    let n = g.n() as i64;
    let m = g.edge_count() as i64;
    let a = guess.numerator();
    let b = guess.denominator();

    // nodes: 0 = source, 1..=n vertices, n+1 = sink
    let source = 0usize;
    let sink = (n + 1) as usize;
    let mut net = Dinic::new((n + 2) as usize);
    for v in 0..g.n() {
        net.add_arc(source, (v + 1) as usize, m * b);
        let cap_to_sink = m * b + 2 * a - g.degree(v) as i64 * b;
        debug_assert!(cap_to_sink >= 0);
        net.add_arc((v + 1) as usize, sink, cap_to_sink);
    }
    for e in g.edges() {
        net.add_undirected((e.u() + 1) as usize, (e.v() + 1) as usize, b);
    }

    let flow = net.max_flow(source, sink);
    let full = m * n * b;
    debug_assert!(flow <= full);
    if flow >= full {
        return None;
    }
    let reach = net.residual_reachable(source);
    let subset: Vec<VertexId> =
        (0..g.n()).filter(|&v| reach[(v + 1) as usize]).collect();
    debug_assert!(!subset.is_empty());
    let d = induced_density(g, &subset).expect("cut side is nonempty and in range");
    Some((d, subset))
}
