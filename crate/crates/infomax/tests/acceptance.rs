//! End-to-end acceptance suite. Each test covers one numbered criterion and
//! prints a `criterion N (...): PASS` line; tolerances are pinned inline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use infomax::chase::{self, ChaseConfig};
use infomax::env::{build_factorized_env, EnvironmentSpec, EventStream};
use infomax::filter::{
    batch_posterior, factorized_filter_update, factorized_vs_joint_gap, filter_update,
    FactorizedLikelihood, FactorizedPosterior, LikelihoodModel, PosteriorState,
};
use infomax::meanfield::{self, MeanfieldConfig};
use infomax::prob::{
    capacity_oracle, mi_variation, mutual_information, ConditionalTable, FiniteDistribution,
};
use infomax::spiking::{self, SpikingNetwork, SpikingNetworkConfig, SpikingTrainConfig};
use infomax::testutil::{
    best_factorized_mi_grid, central_difference_mi, random_instance, random_perturbation,
};

#[test]
fn criterion_01_variation_formula_suite() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for trial in 0..100 {
        let nx = rng.random_range(2..=5);
        let ny = rng.random_range(2..=5);
        let (px, table) = random_instance(&mut rng, nx, ny);
        let dp = random_perturbation(&mut rng, nx, ny, 1e-6);
        let analytic = mi_variation(&px, &table, &dp).unwrap();
        let numeric = central_difference_mi(&px, &table, &dp);
        let err = (analytic - numeric).abs();
        assert!(
            err <= 1e-4 * analytic.abs() || err <= 1e-10,
            "trial {trial}: analytic {analytic} vs numeric {numeric}"
        );
    }
    assert!(start.elapsed().as_secs_f64() < 10.0, "runtime budget");
    println!("criterion 1 (variation formula vs finite differences): PASS");
}

#[test]
fn criterion_02_chase_convergence() {
    let start = std::time::Instant::now();

    // frozen 4x4 code: the auxiliary reaches max-gap < 0.01 within 1e5 steps
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let (px, table) = random_instance(&mut rng, 4, 4);
    let gap = chase::frozen_code_best_gap(&px, &table, 0.05, 100_000, 202).unwrap();
    assert!(gap < 0.01, "frozen-code best max-gap {gap}");

    // full run on 3x3 uniform input reaches >= 0.9 x channel capacity
    let px = FiniteDistribution::uniform(3);
    let cfg = ChaseConfig {
        ny: 3,
        seed: 7,
        ..ChaseConfig::default()
    };
    let log = chase::run_chase(&px, &cfg).unwrap();
    let mi = log.last("mi_nats").unwrap();
    let (cap, _) = capacity_oracle(&px, 3).unwrap();
    assert!(mi >= 0.9 * cap, "final MI {mi} vs capacity {cap}");

    assert!(start.elapsed().as_secs_f64() < 30.0, "runtime budget");
    println!("criterion 2 (chase convergence, {mi:.4} of capacity {cap:.4}): PASS");
}

#[test]
fn criterion_03_meanfield_decomposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for n in 1..=3usize {
        for _ in 0..20 {
            let (px, code, per_neuron) = meanfield::random_factorized_instance(&mut rng, n, 3);
            let dp = meanfield::composite_perturbation(&code, &per_neuron);
            let joint = mi_variation(&px, &code.joint_table().unwrap(), &dp).unwrap();
            let summed: f64 = (0..n)
                .map(|i| meanfield::factorized_variation(&px, &code, i, &per_neuron[i]).unwrap())
                .sum();
            assert!(
                (joint - summed).abs() <= 1e-10,
                "n={n}: joint {joint} vs per-neuron sum {summed}"
            );
        }
    }
    println!("criterion 3 (per-neuron variation decomposition): PASS");
}

#[test]
fn criterion_04_distributed_optimization() {
    let start = std::time::Instant::now();
    let px = FiniteDistribution::uniform(4);
    let target = best_factorized_mi_grid(&px, 2, 1e-2);
    let cfg = MeanfieldConfig {
        steps: 500_000,
        seed: 4,
        ..MeanfieldConfig::default()
    };
    let log = meanfield::run_meanfield(&px, 2, &cfg).unwrap();
    let mi = log.last("mi_nats").unwrap();
    assert!(
        mi >= target - 0.05,
        "final MI {mi} vs grid optimum {target}"
    );
    assert!(start.elapsed().as_secs_f64() < 120.0, "runtime budget");
    println!("criterion 4 (distributed optimization, {mi:.4} vs grid {target:.4}): PASS");
}

#[test]
fn criterion_05_filter_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);

    // recursive vs batch to 1e-12 at T = 200
    let (prior, lik) = infomax::filter::random_filter_instance(&mut rng, 5, 4);
    let xs: Vec<usize> = (0..200).map(|_| rng.random_range(0..4)).collect();
    let mut state = PosteriorState::from_prior(&prior);
    for &x in &xs {
        state = filter_update(&state, &lik, x).unwrap();
    }
    let recursive = state.belief();
    let batch = batch_posterior(&prior, &lik, &xs).unwrap();
    for (a, b) in recursive.probs().iter().zip(batch.probs()) {
        assert!((a - b).abs() <= 1e-12, "recursive {a} vs batch {b}");
    }

    // permutation invariance bit-exact over all 720 orderings of T = 6
    let base = [0usize, 3, 1, 1, 2, 0];
    let reference = batch_posterior(&prior, &lik, &base).unwrap();
    permutations(&base, &mut |perm| {
        let p = batch_posterior(&prior, &lik, perm).unwrap();
        assert_eq!(p.probs(), reference.probs(), "ordering {perm:?}");
    });

    println!("criterion 5 (recursive = batch, exchangeable): PASS");
}

/// Calls `f` on every permutation of `items` (Heap's algorithm).
fn permutations(items: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn heap(a: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            let copy = a.to_vec();
            f(&copy);
            return;
        }
        for i in 0..k {
            heap(a, k - 1, f);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a = items.to_vec();
    let n = a.len();
    heap(&mut a, n, f);
}

#[test]
fn criterion_06_factorized_filtering() {
    for n in 1..=3usize {
        for seed in 0..5u64 {
            let spec = build_factorized_env(n, 16, 600 + seed).unwrap();
            let gap = factorized_vs_joint_gap(&spec, 16, seed).unwrap();
            assert!(gap <= 1e-10, "n={n} seed={seed}: marginal gap {gap}");
        }
    }
    println!("criterion 6 (factorized filter = joint marginals): PASS");
}

fn small_net(seed: u64) -> SpikingNetwork {
    SpikingNetwork::new(SpikingNetworkConfig {
        n: 1,
        nx: 1,
        dt: 1e-3,
        r_min: 0.5,
        r_max: 100.0,
        prior_rate: 20.0,
        gamma: 0.99,
        eta_alpha: 0.0,
        eta_w: 0.0,
        spike_gated: false,
        seed,
    })
    .unwrap()
}

#[test]
fn criterion_07_spiking_statistics() {
    // constant rate 20 Hz: spike counts inside the 3-sigma binomial band
    let mut net = small_net(700);
    net.set_log_alpha(0, vec![0.0]);
    let p = 20.0 * 1e-3;
    let trials: u64 = 1_000_000;
    let mut spikes = 0u64;
    for _ in 0..trials {
        let rec = net.step(0, false);
        assert!(rec.probs[0] >= 0.5e-3 && rec.probs[0] <= 0.1, "rate bounds");
        spikes += rec.spikes[0] as u64;
    }
    let emp = spikes as f64 / trials as f64;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    assert!((emp - p).abs() <= 3.0 * sigma, "empirical {emp} vs {p}");

    // adversarial ratios: bounds hold after every squash
    let mut net = SpikingNetwork::new(SpikingNetworkConfig {
        n: 2,
        nx: 2,
        dt: 1e-3,
        r_min: 0.5,
        r_max: 100.0,
        prior_rate: 5.0,
        gamma: 0.99,
        eta_alpha: 0.1,
        eta_w: 50_000.0,
        spike_gated: false,
        seed: 701,
    })
    .unwrap();
    net.set_log_alpha(0, vec![3.0, -3.0]);
    net.set_log_alpha(1, vec![-3.0, 3.0]);
    let mut rng = ChaCha8Rng::seed_from_u64(702);
    for _ in 0..20_000 {
        let rec = net.step(rng.random_range(0..2), true);
        for &p in &rec.probs {
            assert!((0.5e-3..=0.1 + 1e-15).contains(&p), "post-squash p = {p}");
        }
    }
    println!("criterion 7 (spiking statistics in 3-sigma band, bounds hold): PASS");
}

#[test]
fn criterion_08_small_p_bayes_consistency() {
    // gamma = 1, clamps inactive, |log alpha| small: the spiking update is
    // the factorized filter up to the odds-vs-probability difference, which
    // is bounded by T * p_max in log space.
    let t_len = 20usize;
    let p_max = 0.01;
    let n = 3usize;
    let nx = 4usize;
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let log_alphas: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..nx).map(|_| 0.03 * (rng.random::<f64>() - 0.5) * 2.0).collect())
        .collect();

    let mut net = SpikingNetwork::new(SpikingNetworkConfig {
        n,
        nx,
        dt: 1e-3,
        r_min: 0.01,
        r_max: 10.0, // ceiling p = r_max * dt = p_max
        prior_rate: 5.0,
        gamma: 1.0,
        eta_alpha: 0.0,
        eta_w: 0.0,
        spike_gated: false,
        seed: 808,
    })
    .unwrap();
    for (i, la) in log_alphas.iter().enumerate() {
        net.set_log_alpha(i, la.clone());
    }

    let prior_p = 5.0 * 1e-3;
    let mut posterior = FactorizedPosterior::from_prior(&vec![prior_p; n]).unwrap();
    let g: Vec<[Vec<f64>; 2]> = log_alphas
        .iter()
        .map(|la| {
            [
                vec![1.0 / nx as f64; nx],
                la.iter().map(|a| a.exp() / nx as f64).collect(),
            ]
        })
        .collect();
    let lik = FactorizedLikelihood::new(g);

    net.reset_event();
    let mut worst = 0.0f64;
    for _ in 0..t_len {
        let x = rng.random_range(0..nx);
        let rec = net.step(x, false);
        posterior = factorized_filter_update(&posterior, &lik, x).unwrap();
        for (i, &m) in posterior.marginals().iter().enumerate() {
            worst = worst.max((rec.probs[i].ln() - m.ln()).abs());
        }
    }
    let bound = t_len as f64 * p_max;
    assert!(worst <= bound, "log-probability gap {worst} vs bound {bound}");
    println!("criterion 8 (small-p Bayes consistency, gap {worst:.4} <= {bound}): PASS");
}

#[test]
fn criterion_09_spike_gated_unbiasedness() {
    // same scenario, two gates: exact (previous probability) vs spike-gated
    // (previous spike bit). The spike bit is an unbiased one-sample estimate
    // of the probability, so the mean updates must agree within Monte Carlo
    // error.
    let steps: u64 = 1_000_000;
    let p_prev = 0.02;
    let eta = 0.05;
    let log_ratio = 0.5; // ln(p_now / q), held fixed
    let mut rng = ChaCha8Rng::seed_from_u64(909);

    let exact_total = steps as f64 * eta * p_prev * log_ratio;
    let mut gated_total = 0.0;
    for _ in 0..steps {
        let spike = f64::from(rng.random::<f64>() < p_prev);
        gated_total += eta * spike * log_ratio;
    }
    let sigma = eta * log_ratio * (p_prev * (1.0 - p_prev) * steps as f64).sqrt();
    let diff = (gated_total - exact_total).abs();
    assert!(diff <= 3.0 * sigma, "sum gap {diff} vs 3-sigma {}", 3.0 * sigma);

    // and through the real update rule on a neuron
    let mut a = small_net(909);
    let mut b = small_net(909);
    a.set_log_alpha(0, vec![0.0]);
    b.set_log_alpha(0, vec![0.0]);
    let mut gated_sum = 0.0;
    let mut exact_sum = 0.0;
    for _ in 0..steps {
        let spike = f64::from(rng.random::<f64>() < p_prev);
        // identical (p_now, q) observations, different gates
        let before_a = a.neuron(0).log_alpha[0];
        let mut na = a.neuron(0).clone();
        na.alpha_learn(0, p_prev, 0.03, 0.02, eta);
        exact_sum += na.log_alpha[0] - before_a;
        let before_b = b.neuron(0).log_alpha[0];
        let mut nb = b.neuron(0).clone();
        nb.alpha_learn(0, spike, 0.03, 0.02, eta);
        gated_sum += nb.log_alpha[0] - before_b;
    }
    let c = eta * (0.03f64 / 0.02).ln();
    let sigma2 = c * (p_prev * (1.0 - p_prev) * steps as f64).sqrt();
    assert!(
        (gated_sum - exact_sum).abs() <= 3.0 * sigma2,
        "rule-level gap {} vs {}",
        (gated_sum - exact_sum).abs(),
        3.0 * sigma2
    );
    println!("criterion 9 (spike-gated updates unbiased): PASS");
}

/// 2-latent / 4-stimulus world for the end-to-end criterion.
fn two_latent_world() -> EnvironmentSpec {
    EnvironmentSpec {
        latent_prior: FiniteDistribution::new(vec![0.5, 0.5]).unwrap(),
        emission: ConditionalTable::from_rows(vec![
            vec![0.45, 0.45, 0.05, 0.05],
            vec![0.05, 0.05, 0.45, 0.45],
        ])
        .unwrap(),
        event_len: 20,
        persistence: 0.0,
        factorized: None,
    }
}

fn end_to_end_cfg(seed: u64) -> SpikingNetworkConfig {
    SpikingNetworkConfig {
        n: 2,
        nx: 4,
        dt: 1e-3,
        r_min: 0.5,
        r_max: 100.0,
        prior_rate: 5.0,
        gamma: 0.95,
        eta_alpha: 0.01,
        eta_w: 50_000.0,
        spike_gated: false,
        seed,
    }
}

#[test]
fn criterion_10_end_to_end_learning() {
    let start = std::time::Instant::now();
    let spec = two_latent_world();
    let eval_events = 4000;
    let eval_seed = 1010;

    // plug-in MI of the untouched network
    let mut init_net = SpikingNetwork::new(end_to_end_cfg(10)).unwrap();
    let init_mi = spiking::evaluate_mi(&mut init_net, &spec, eval_events, eval_seed);

    // trained network
    let mut net = SpikingNetwork::new(end_to_end_cfg(10)).unwrap();
    let train_cfg = SpikingTrainConfig {
        events: 12_000,
        log_every: 4_000,
        env_seed: 11,
    };
    spiking::train(&mut net, &spec, &train_cfg).unwrap();
    let trained_mi = spiking::evaluate_mi(&mut net, &spec, eval_events, eval_seed);

    // reference: likelihood ratios set from the true emission table
    let mut reference = SpikingNetwork::new(end_to_end_cfg(10)).unwrap();
    let true_ratios: Vec<f64> = (0..4)
        .map(|x| (spec.emission.row(1).prob(x) / spec.emission.row(0).prob(x)).ln())
        .collect();
    reference.set_log_alpha(0, true_ratios.clone());
    reference.set_log_alpha(1, true_ratios.iter().map(|r| -r).collect());
    let reference_mi = spiking::evaluate_mi(&mut reference, &spec, eval_events, eval_seed);

    assert!(
        trained_mi - init_mi >= 0.1,
        "improvement {} (init {init_mi}, trained {trained_mi})",
        trained_mi - init_mi
    );
    assert!(
        trained_mi >= 0.6 * reference_mi,
        "trained {trained_mi} vs reference {reference_mi}"
    );
    assert!(start.elapsed().as_secs_f64() < 300.0, "runtime budget");
    println!(
        "criterion 10 (end-to-end: init {init_mi:.4}, trained {trained_mi:.4}, reference {reference_mi:.4}): PASS"
    );
}

#[test]
fn criterion_11_reproducibility() {
    // chase
    let px = FiniteDistribution::uniform(3);
    let cfg = ChaseConfig {
        steps: 5000,
        seed: 11,
        ..ChaseConfig::default()
    };
    let a = chase::run_chase(&px, &cfg).unwrap().to_csv_string();
    let b = chase::run_chase(&px, &cfg).unwrap().to_csv_string();
    assert_eq!(a, b, "chase CSV not byte-identical");

    // mean-field
    let mcfg = MeanfieldConfig {
        steps: 5000,
        seed: 11,
        ..MeanfieldConfig::default()
    };
    let a = meanfield::run_meanfield(&px, 2, &mcfg).unwrap().to_csv_string();
    let b = meanfield::run_meanfield(&px, 2, &mcfg).unwrap().to_csv_string();
    assert_eq!(a, b, "mean-field CSV not byte-identical");

    // spiking training on a sampled environment
    let spec = build_factorized_env(2, 10, 11).unwrap();
    let tcfg = SpikingTrainConfig {
        events: 500,
        log_every: 100,
        env_seed: 12,
    };
    let run = || {
        let mut net = SpikingNetwork::new(end_to_end_cfg(11)).unwrap();
        spiking::train(&mut net, &spec, &tcfg).unwrap().to_csv_string()
    };
    assert_eq!(run(), run(), "spiking CSV not byte-identical");

    // event streams
    let mut s1 = EventStream::new(&spec, 13);
    let mut s2 = EventStream::new(&spec, 13);
    for _ in 0..50 {
        assert_eq!(s1.next_event(), s2.next_event());
    }
    println!("criterion 11 (byte-identical reproducibility): PASS");
}
