use density_oracle::{brute_force_densest, charikar_peel, exact_densest};
use graph_core::{canonical_edge, induced_density, SimpleGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: u32, p: f64, rng: &mut ChaCha8Rng) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                g.insert_edge(canonical_edge(u, v, n).unwrap());
            }
        }
    }
    g
}

#[test]
fn exact_matches_brute_force_on_seeded_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..60 {
        let n = 2 + (trial % 11) as u32; // 2..=12
        let p = [0.0, 0.15, 0.3, 0.5, 0.8, 1.0][trial % 6];
        let g = random_graph(n, p, &mut rng);
        let exact = exact_densest(&g);
        let brute = brute_force_densest(&g).unwrap();
        assert_eq!(
            exact.density, brute.density,
            "trial {trial}: n={n} p={p} exact={} brute={}",
            exact.density, brute.density
        );
        // both witnesses attain the density
        if g.edge_count() > 0 {
            assert_eq!(induced_density(&g, &exact.witness).unwrap(), exact.density);
            assert_eq!(induced_density(&g, &brute.witness).unwrap(), brute.density);
        }
    }
}

#[test]
fn exact_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = random_graph(30, 0.2, &mut rng);
    let a = exact_densest(&g);
    let b = exact_densest(&g);
    assert_eq!(a.density, b.density);
    assert_eq!(a.witness, b.witness);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn peel_is_within_factor_two(seed in 0u64..500, n in 2u32..14, p in 0.05f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        let exact = exact_densest(&g);
        let peel = charikar_peel(&g);
        // peel >= exact / 2, compared exactly via cross-multiplication
        let lhs = peel.density.numerator() as i128 * 2 * exact.density.denominator() as i128;
        let rhs = exact.density.numerator() as i128 * peel.density.denominator() as i128;
        prop_assert!(lhs >= rhs);
        prop_assert!(peel.density <= exact.density);
    }

    #[test]
    fn adding_an_edge_never_decreases_density(seed in 0u64..500, n in 3u32..12, p in 0.0f64..0.7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = random_graph(n, p, &mut rng);
        let before = exact_densest(&g).density;
        let (a, b) = {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n);
            while b == a {
                b = rng.gen_range(0..n);
            }
            (a, b)
        };
        g.insert_edge(canonical_edge(a, b, n).unwrap());
        let after = exact_densest(&g).density;
        prop_assert!(after >= before);
    }
}
