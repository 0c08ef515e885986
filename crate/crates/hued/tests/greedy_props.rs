mod common;

use proptest::prelude::*;

use hued::{
    exact_chi_r, gnp_seeded, greedy_palette_bound, greedy_r_hued, is_r_hued, ExactOptions,
    Graph, GreedyOptions, OrderPolicy,
};

fn arb_gnp() -> impl Strategy<Value = Graph> {
    (2usize..=60, 0u64..1_000_000, 1u32..=9)
        .prop_map(|(n, seed, p10)| gnp_seeded(n, f64::from(p10) / 10.0, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_output_is_r_hued_within_bound(
        g in arb_gnp(),
        r in 1usize..=6,
        random_order in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let opts = GreedyOptions {
            order: if random_order { OrderPolicy::Random } else { OrderPolicy::Index },
            seed,
            check_steps: true,
            ..GreedyOptions::default()
        };
        let run = greedy_r_hued(&g, r, &opts).unwrap();
        let r_eff = r.min(g.max_degree());
        prop_assert!(is_r_hued(&g, &run.coloring, r_eff).unwrap());
        prop_assert!(is_r_hued(&g, &run.coloring, r).unwrap());
        prop_assert!(run.coloring.colors_used() <= greedy_palette_bound(r, g.max_degree()));
    }
}

#[test]
fn exact_agrees_with_naive_oracle_on_all_tiny_graphs() {
    // Every labeled graph on up to 5 vertices, including disconnected ones.
    let opts = ExactOptions::default();
    for n in 0..=5usize {
        let bits = n * n.saturating_sub(1) / 2;
        for mask in 0u32..(1 << bits) {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> idx & 1 == 1 {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            for r in 1..=3 {
                let exact = exact_chi_r(&g, r, &opts).unwrap();
                assert!(!exact.timed_out);
                assert_eq!(
                    exact.chi_r,
                    common::naive_chi_r(&g, r),
                    "n={n} mask={mask} r={r}"
                );
            }
        }
    }
}

#[test]
fn exact_agrees_with_naive_oracle_on_random_graphs_up_to_9() {
    let opts = ExactOptions::default();
    for i in 0..40u64 {
        let n = 6 + (i % 4) as usize; // 6..=9
        let p = 0.15 + 0.6 * ((i % 5) as f64) / 4.0;
        let g = gnp_seeded(n, p, 1000 + i);
        for r in 1..=3 {
            let exact = exact_chi_r(&g, r, &opts).unwrap();
            assert_eq!(exact.chi_r, common::naive_chi_r(&g, r), "instance {i} r={r}");
        }
    }
}

#[test]
fn r_at_max_degree_matches_square_graph_chromatic_number() {
    for i in 0..12u64 {
        let g = gnp_seeded(7 + (i % 3) as usize, 0.35, 2000 + i);
        let delta = g.max_degree();
        if delta == 0 {
            continue;
        }
        let opts = ExactOptions::default();
        let hued_delta = exact_chi_r(&g, delta, &opts).unwrap().chi_r;
        let square_chromatic = exact_chi_r(&g.square(), 1, &opts).unwrap().chi_r;
        assert_eq!(hued_delta, square_chromatic, "instance {i}");
    }
}

#[test]
fn greedy_dominates_exact_on_small_instances() {
    let opts = ExactOptions::default();
    for i in 0..30u64 {
        let g = gnp_seeded(8, 0.3, 3000 + i);
        for r in 1..=4 {
            let exact = exact_chi_r(&g, r, &opts).unwrap();
            let greedy = greedy_r_hued(&g, r, &GreedyOptions::default()).unwrap();
            assert!(greedy.coloring.colors_used() >= exact.chi_r);
        }
    }
}
