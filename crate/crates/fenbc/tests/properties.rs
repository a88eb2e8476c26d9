//! Randomized invariants over generated inputs.

use proptest::prelude::*;

use fenbc::brandes::brandes_weighted;
use fenbc::cycle::{cycle_bc, CycleInstance};
use fenbc::generate::{cycle, tree_plus_k};
use fenbc::graph::{degree_partition, feedback_edge_number, Graph, WeightedGraph};
use fenbc::oracle::max_rel_err;
use fenbc::pipeline::{compute_bc, SolverChoice};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cycle_solver_matches_baseline(pend in prop::collection::vec(1u64..9, 3..80)) {
        let got = cycle_bc(&CycleInstance::new(pend.clone()).unwrap());
        let wg = WeightedGraph::new(cycle(pend.len()).unwrap(), pend);
        let want = brandes_weighted(&wg);
        prop_assert!(max_rel_err(&got, &want) <= 1e-12);
    }

    #[test]
    fn pipeline_matches_baseline_on_tree_plus_k(n in 4usize..60, k in 0usize..8, seed in any::<u64>()) {
        let max_extra = n * (n - 1) / 2 - (n - 1);
        let g = tree_plus_k(n, k.min(max_extra), seed).unwrap();
        let fen = compute_bc(&g, SolverChoice::Fen).unwrap();
        let brandes = compute_bc(&g, SolverChoice::Brandes).unwrap();
        prop_assert!(max_rel_err(&fen, &brandes) <= 1e-9);
    }

    #[test]
    fn degree_partition_covers_positive_degrees(n in 1usize..50, k in 0usize..6, seed in any::<u64>()) {
        let max_extra = n * (n - 1) / 2 - n.saturating_sub(1);
        let g = tree_plus_k(n, k.min(max_extra), seed).unwrap();
        let p = degree_partition(&g);
        let mut all: Vec<usize> = [&p.deg1[..], &p.deg2[..], &p.deg3plus[..]].concat();
        all.sort_unstable();
        all.dedup();
        let expect: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 1).collect();
        prop_assert_eq!(all, expect);
    }

    #[test]
    fn zero_feedback_iff_forest(seed in any::<u64>(), n in 2usize..40, extra in 0usize..4) {
        let max_extra = n * (n - 1) / 2 - (n - 1);
        let g = tree_plus_k(n, extra.min(max_extra), seed).unwrap();
        let (k, set) = feedback_edge_number(&g);
        prop_assert_eq!(k, set.len());
        prop_assert_eq!(k == 0, is_forest(&g));
        // removing the reported set leaves a forest
        let remaining: Vec<(usize, usize)> =
            g.edges().filter(|e| !set.contains(e)).collect();
        let pruned = Graph::from_edges(n, remaining);
        prop_assert!(is_forest(&pruned));
    }
}

fn is_forest(g: &Graph) -> bool {
    let comps = fenbc::graph::connected_components(g);
    g.edge_count() + comps.len() == g.vertex_count()
}
