//! Property-based invariants across the probability core, the simplex
//! parameterization, filtering, and serialization.

use proptest::prelude::*;

use infomax::chase::ChaseState;
use infomax::filter::{batch_posterior, LikelihoodModel};
use infomax::log::format_float;
use infomax::prob::{
    entropy, marginal, mi_variation, mutual_information, ConditionalTable, FiniteDistribution,
};
use infomax::simplex;

fn distribution(k: usize) -> impl Strategy<Value = FiniteDistribution> {
    proptest::collection::vec(0.05f64..1.0, k)
        .prop_map(|w| FiniteDistribution::from_weights(&w).unwrap())
}

fn table(nx: usize, ny: usize) -> impl Strategy<Value = ConditionalTable> {
    proptest::collection::vec(proptest::collection::vec(0.05f64..1.0, ny), nx).prop_map(|rows| {
        ConditionalTable::new(
            rows.iter()
                .map(|r| FiniteDistribution::from_weights(r).unwrap())
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn entropy_nonnegative_and_bounded(d in (2usize..6).prop_flat_map(distribution)) {
        let h = entropy(&d);
        prop_assert!(h >= -1e-15);
        prop_assert!(h <= (d.len() as f64).ln() + 1e-12);
    }

    #[test]
    fn entropy_permutation_invariant(d in (2usize..6).prop_flat_map(distribution), seed in 0u64..1000) {
        let mut probs = d.probs().to_vec();
        // deterministic pseudo-shuffle driven by the seed
        let k = probs.len();
        for i in 0..k {
            probs.swap(i, (seed as usize + i * 7) % k);
        }
        let shuffled = FiniteDistribution::new(probs).unwrap();
        prop_assert!((entropy(&d) - entropy(&shuffled)).abs() < 1e-12);
    }

    #[test]
    fn point_mass_has_zero_entropy(k in 1usize..8, at_frac in 0.0f64..1.0) {
        let at = ((k as f64 * at_frac) as usize).min(k - 1);
        prop_assert_eq!(entropy(&FiniteDistribution::point_mass(k, at)), 0.0);
    }

    #[test]
    fn mi_nonnegative_and_bounded_by_entropies(
        (px, pyx) in (2usize..5, 2usize..5).prop_flat_map(|(nx, ny)| (distribution(nx), table(nx, ny)))
    ) {
        let mi = mutual_information(&px, &pyx).unwrap();
        let py = marginal(&px, &pyx).unwrap();
        prop_assert!(mi >= -1e-12);
        prop_assert!(mi <= entropy(&px) + 1e-12);
        prop_assert!(mi <= entropy(&py) + 1e-12);
    }

    #[test]
    fn mi_zero_for_input_independent_code(
        (px, row) in (2usize..5, 2usize..5).prop_flat_map(|(nx, ny)| (distribution(nx), distribution(ny)))
    ) {
        let rows = vec![row.probs().to_vec(); px.len()];
        let pyx = ConditionalTable::from_rows(rows).unwrap();
        prop_assert!(mutual_information(&px, &pyx).unwrap().abs() < 1e-12);
    }

    #[test]
    fn marginal_is_normalized(
        (px, pyx) in (2usize..5, 2usize..5).prop_flat_map(|(nx, ny)| (distribution(nx), table(nx, ny)))
    ) {
        let py = marginal(&px, &pyx).unwrap();
        let sum: f64 = py.probs().iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn variation_is_linear_in_the_perturbation(
        (px, pyx) in (2usize..4, 2usize..4).prop_flat_map(|(nx, ny)| (distribution(nx), table(nx, ny))),
        scale in 0.1f64..3.0,
        seed in 0u64..1000,
    ) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let dp = infomax::testutil::random_perturbation(&mut rng, px.len(), pyx.n_outcomes(), 1e-4);
        let v1 = mi_variation(&px, &pyx, &dp).unwrap();
        let v2 = mi_variation(&px, &pyx, &dp.scale(scale)).unwrap();
        prop_assert!((v2 - scale * v1).abs() <= 1e-12 * (1.0 + v1.abs() * scale));
    }

    #[test]
    fn softmax_lands_on_the_simplex(scores in proptest::collection::vec(-30.0f64..30.0, 1..8)) {
        let p = simplex::softmax(&scores);
        let sum: f64 = p.iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
        prop_assert!(p.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn score_round_trip_recovers_probabilities(d in (2usize..6).prop_flat_map(distribution)) {
        let scores = simplex::scores_from_probs(d.probs());
        let back = simplex::softmax(&scores);
        for (a, b) in d.probs().iter().zip(&back) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn chase_updates_stay_stochastic(
        nx in 1usize..4, ny in 1usize..4, seed in 0u64..100, steps in 1u64..50
    ) {
        use rand::{Rng, SeedableRng};
        let mut state = ChaseState::new(nx, ny, seed);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..steps {
            let x = rng.random_range(0..nx);
            state.q_step(x, 0.5);
            state.p_step(x, 0.05);
        }
        let code = state.code();
        for row in code.rows() {
            let sum: f64 = row.probs().iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-9);
        }
        let q: f64 = state.aux().probs().iter().sum();
        prop_assert!((q - 1.0).abs() < 1e-9);
    }

    #[test]
    fn posterior_is_normalized_and_order_free(
        (prior, lik_rows) in (2usize..5, 2usize..5).prop_flat_map(|(ny, nx)| {
            (distribution(ny), table(ny, nx))
        }),
        xs in proptest::collection::vec(0usize..2, 0..12),
    ) {
        let lik = LikelihoodModel::new(lik_rows);
        let post = batch_posterior(&prior, &lik, &xs).unwrap();
        let sum: f64 = post.probs().iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
        let mut rev = xs.clone();
        rev.reverse();
        let post_rev = batch_posterior(&prior, &lik, &rev).unwrap();
        prop_assert_eq!(post.probs(), post_rev.probs());
    }

    #[test]
    fn csv_floats_round_trip_exactly(bits in any::<u64>()) {
        let v = f64::from_bits(bits);
        prop_assume!(v.is_finite());
        let printed = format_float(v);
        let back: f64 = printed.parse().unwrap();
        prop_assert_eq!(v.to_bits(), back.to_bits(), "{}", printed);
    }

    #[test]
    fn chase_config_round_trips(
        ny in 1usize..6, eta_p in 0.001f64..0.2, steps in 0u64..10_000, seed in any::<u64>()
    ) {
        let cfg = infomax::config::ChaseRunConfig {
            nx: 3,
            px: None,
            ny,
            eta_p,
            eta_q: eta_p * 10.0,
            steps,
            seed,
            log_every: 1000,
        };
        let text = infomax::config::canonical_json(&cfg);
        let back: infomax::config::ChaseRunConfig = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&cfg, &back);
        prop_assert_eq!(text, infomax::config::canonical_json(&back));
    }
}
