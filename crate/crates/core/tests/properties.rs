//! Properties that cross module boundaries: blowups, homomorphisms,
//! approximation witnesses, lifting and rounding of halves, and the oracle.

use std::sync::Arc;

use proptest::prelude::*;
use sparse_halves::approximation::check_eps_approximation;
use sparse_halves::fd::{make_fd, make_petersen};
use sparse_halves::graph::{blowup, induced_edge_count, is_triangle_free, perturb, Graph, VertexSet};
use sparse_halves::halves::{best_sparse_half_fd, FdWeighting};
use sparse_halves::homomorphism::{is_strong_homomorphism, Homomorphism};
use sparse_halves::oracle::min_half_edges;
use sparse_halves::rational::{int, rat};
use sparse_halves::weighted::{edge_mass, is_sparse_half, lift_half, pushforward, round_half_to_set, WeightFunction};

fn template(which: usize) -> Graph {
    match which {
        0 => make_fd(2).unwrap(),
        1 => make_fd(3).unwrap(),
        _ => make_petersen(),
    }
}

/// A template together with one positive part size per vertex.
fn template_and_sizes(max_part: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (0usize..3).prop_flat_map(move |w| {
        let h = template(w);
        let k = h.n();
        (Just(h), proptest::collection::vec(1..=max_part, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn blowup_projection_is_a_strong_homomorphism((h, sizes) in template_and_sizes(4)) {
        let (g, part) = blowup(&h, &sizes).unwrap();
        prop_assert!(is_triangle_free(&g));
        let n = g.n();
        let g = Arc::new(g);
        let phi = Homomorphism::new(g.clone(), h.clone(), part.assignment().to_vec()).unwrap();
        prop_assert!(is_strong_homomorphism(&phi));
        prop_assert_eq!(phi.fiber_sizes(), sizes.clone());
        let pushed = pushforward(&WeightFunction::uniform(g.clone()).unwrap(), &phi).unwrap();
        for (t, &s) in sizes.iter().enumerate() {
            prop_assert_eq!(pushed.weight(t), &rat(s as i64, n as i64));
        }
        let witness = check_eps_approximation(&g, &h, &part).unwrap();
        prop_assert!(witness.diff_edges.is_empty());
    }

    #[test]
    fn approximation_witness_records_removed_edges(
        (h, sizes) in template_and_sizes(3),
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..6),
    ) {
        let (g, part) = blowup(&h, &sizes).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut removed: Vec<(usize, usize)> = picks.iter().map(|i| edges[i.index(edges.len())]).collect();
        removed.sort_unstable();
        removed.dedup();
        let thinned = perturb(&g, &[], &removed).unwrap();
        prop_assert!(thinned.triangle_free);
        let witness = check_eps_approximation(&thinned.graph, &h, &part).unwrap();
        prop_assert_eq!(&witness.diff_edges, &removed);
        let n = g.n();
        prop_assert!(witness.eps_achieved >= rat(removed.len() as i64, (n * n) as i64));
        let back = witness.reconstruct();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), thinned.graph.edges().collect::<Vec<_>>());
    }

    /// A sparse half of the pushed-forward F_d weighting lifts to a sparse
    /// half of the blowup, and rounding it gives an n/2-set no better than
    /// the oracle optimum.
    #[test]
    fn lifted_fd_halves_round_to_sparse_sets(d in 2usize..=4, raw in proptest::collection::vec(1usize..=3, 14)) {
        let h = Arc::new(make_fd(d).unwrap());
        let sizes = &raw[..h.n()];
        let (g, part) = blowup(&h, sizes).unwrap();
        let n = g.n();
        let g = Arc::new(g);
        let wf = Arc::new(WeightFunction::uniform(g.clone()).unwrap());
        let phi = Homomorphism::new(g.clone(), h.clone(), part.assignment().to_vec()).unwrap();
        let pushed = Arc::new(pushforward(&wf, &phi).unwrap());
        // Part sizes that break the degree hypothesis are rejected up front.
        let base = FdWeighting::from_weight_function(pushed).and_then(|fw| best_sparse_half_fd(&fw));
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        let lifted = lift_half(&base, &phi, &wf).unwrap();
        prop_assert_eq!(edge_mass(&lifted), edge_mass(&base));
        prop_assert!(is_sparse_half(&lifted));
        let set = round_half_to_set(&lifted).unwrap();
        prop_assert_eq!(set.len(), n / 2);
        let e = induced_edge_count(&g, &set);
        prop_assert!(int(50 * e as i64) <= int((n * n) as i64));
        if n <= 30 {
            let (_, best) = min_half_edges(&g).unwrap();
            prop_assert!(best <= e);
        }
    }

    #[test]
    fn oracle_value_is_label_invariant((h, sizes) in template_and_sizes(2), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let (g, _) = blowup(&h, &sizes).unwrap();
        prop_assume!(g.n() <= 24);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let relabeled = g.relabel(&perm).unwrap();
        let (set, best) = min_half_edges(&g).unwrap();
        let (set2, best2) = min_half_edges(&relabeled).unwrap();
        prop_assert_eq!(best, best2);
        prop_assert_eq!(induced_edge_count(&g, &set), best);
        prop_assert_eq!(induced_edge_count(&relabeled, &set2), best);
        prop_assert_eq!(set.len(), g.n() / 2);
        let _: &VertexSet = &set;
    }
}
