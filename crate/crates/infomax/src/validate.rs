//! Self-contained invariant suite behind the `validate` subcommand.
//!
//! Each check is a pure function from a seed to pass/fail, mirroring the
//! proofs the library leans on: the variation formula against finite
//! differences, the chase fixed point, the per-neuron decomposition of the
//! joint variation, filter equivalence and exchangeability, the factorized
//! posterior identity, and spiking rate statistics. The same checks back the
//! test suite; the subcommand exists so a packaged binary can re-verify the
//! numerics on the machine it runs on.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::prob::{capacity_oracle, mutual_information, EPS};
use crate::testutil::{central_difference_mi, random_instance, random_perturbation};
use crate::{chase, env, filter, meanfield, spiking};

/// One named check: returns `Ok(())` or a description of the violation.
pub struct Check {
    pub name: &'static str,
    pub run: fn(u64) -> Result<()>,
}

/// Everything `validate` runs, in order.
pub const CHECKS: &[Check] = &[
    Check {
        name: "variation-matches-finite-differences",
        run: check_variation,
    },
    Check {
        name: "chase-expected-fixed-point",
        run: check_chase_fixed_point,
    },
    Check {
        name: "chase-tracks-marginal",
        run: check_chase_tracking,
    },
    Check {
        name: "meanfield-variation-decomposition",
        run: check_meanfield_decomposition,
    },
    Check {
        name: "filter-recursive-equals-batch",
        run: check_filter_batch,
    },
    Check {
        name: "filter-order-invariance",
        run: check_filter_exchangeability,
    },
    Check {
        name: "factorized-posterior-marginals",
        run: check_factorized_filter,
    },
    Check {
        name: "capacity-oracle-bounds",
        run: check_capacity_bounds,
    },
    Check {
        name: "spiking-rate-bounds",
        run: check_spiking_bounds,
    },
];

fn fail(name: &str, detail: String) -> Error {
    Error::Config(format!("invariant check '{name}' failed: {detail}"))
}

fn check_variation(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let nx = rand::Rng::random_range(&mut rng, 2..=5);
        let ny = rand::Rng::random_range(&mut rng, 2..=5);
        let (px, table) = random_instance(&mut rng, nx, ny);
        let dp = random_perturbation(&mut rng, nx, ny, 1e-6);
        let analytic = crate::prob::mi_variation(&px, &table, &dp)?;
        let numeric = central_difference_mi(&px, &table, &dp);
        let err = (analytic - numeric).abs();
        if err > 1e-4 * analytic.abs().max(1.0) && err > 1e-8 {
            return Err(fail(
                "variation-matches-finite-differences",
                format!("analytic {analytic} vs numeric {numeric}"),
            ));
        }
    }
    Ok(())
}

fn check_chase_fixed_point(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (px, table) = random_instance(&mut rng, 3, 4);
    let marginal = crate::prob::marginal(&px, &table)?;
    let rows: Vec<Vec<f64>> = table.rows().iter().map(|r| r.probs().to_vec()).collect();
    let state = chase::ChaseState::from_probabilities(&rows, marginal.probs());
    // at q = E_x p(y|x), the expected auxiliary step vanishes
    let mut expected = vec![0.0; marginal.len()];
    for (x, pxv) in px.probs().iter().enumerate() {
        let dir = state.q_direction(x);
        for (e, d) in expected.iter_mut().zip(&dir) {
            *e += pxv * d;
        }
    }
    let max = expected.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if max > 1e-9 {
        return Err(fail(
            "chase-expected-fixed-point",
            format!("residual {max}"),
        ));
    }
    Ok(())
}

fn check_chase_tracking(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5bd1);
    let (px, table) = random_instance(&mut rng, 4, 4);
    let gap = chase::frozen_code_best_gap(&px, &table, 0.05, 100_000, seed)?;
    if gap >= 0.01 {
        return Err(fail("chase-tracks-marginal", format!("best gap {gap}")));
    }
    Ok(())
}

fn check_meanfield_decomposition(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 1..=3usize {
        let (px, code, per_neuron) = meanfield::random_factorized_instance(&mut rng, n, 3);
        let joint_dp = meanfield::composite_perturbation(&code, &per_neuron);
        let joint = crate::prob::mi_variation(&px, &code.joint_table()?, &joint_dp)?;
        let mut summed = 0.0;
        for (i, dp_i) in per_neuron.iter().enumerate() {
            summed += meanfield::factorized_variation(&px, &code, i, dp_i)?;
        }
        if (joint - summed).abs() > 1e-10 {
            return Err(fail(
                "meanfield-variation-decomposition",
                format!("n={n}: joint {joint} vs sum {summed}"),
            ));
        }
    }
    Ok(())
}

fn check_filter_batch(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (prior, likelihood) = filter::random_filter_instance(&mut rng, 4, 3);
    let ys: Vec<usize> = (0..200)
        .map(|_| rand::Rng::random_range(&mut rng, 0..3))
        .collect();
    let mut state = filter::PosteriorState::from_prior(&prior);
    for &y in &ys {
        state = filter::filter_update(&state, &likelihood, y)?;
    }
    let batch = filter::batch_posterior(&prior, &likelihood, &ys)?;
    let recursive = state.belief();
    for (a, b) in recursive.probs().iter().zip(batch.probs()) {
        if (a - b).abs() > 1e-12 {
            return Err(fail(
                "filter-recursive-equals-batch",
                format!("{a} vs {b}"),
            ));
        }
    }
    Ok(())
}

fn check_filter_exchangeability(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (prior, likelihood) = filter::random_filter_instance(&mut rng, 3, 3);
    let ys = [0usize, 2, 1, 1, 0];
    let reference = filter::batch_posterior(&prior, &likelihood, &ys)?;
    let mut perm = ys;
    perm.reverse();
    perm.swap(0, 2);
    let other = filter::batch_posterior(&prior, &likelihood, &perm)?;
    for (a, b) in reference.probs().iter().zip(other.probs()) {
        if (a - b).abs() > 1e-12 {
            return Err(fail("filter-order-invariance", format!("{a} vs {b}")));
        }
    }
    Ok(())
}

fn check_factorized_filter(seed: u64) -> Result<()> {
    for n in 1..=3usize {
        let spec = env::build_factorized_env(n, 12, seed.wrapping_add(n as u64))?;
        let gap = filter::factorized_vs_joint_gap(&spec, 12, seed)?;
        if gap > 1e-10 {
            return Err(fail(
                "factorized-posterior-marginals",
                format!("n={n}: marginal gap {gap}"),
            ));
        }
    }
    Ok(())
}

fn check_capacity_bounds(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (px, table) = random_instance(&mut rng, 3, 3);
    let observed = mutual_information(&px, &table)?;
    let (cap, argmax) = capacity_oracle(&px, 3)?;
    let at_argmax = mutual_information(&px, &argmax)?;
    if cap < observed - 1e-9 {
        return Err(fail(
            "capacity-oracle-bounds",
            format!("capacity {cap} below a feasible MI {observed}"),
        ));
    }
    let h = crate::prob::entropy(&px);
    if cap > h + 1e-9 || (cap - at_argmax).abs() > 1e-9 {
        return Err(fail(
            "capacity-oracle-bounds",
            format!("capacity {cap}, H(x) {h}, at argmax {at_argmax}"),
        ));
    }
    Ok(())
}

fn check_spiking_bounds(seed: u64) -> Result<()> {
    let cfg = spiking::SpikingNetworkConfig {
        n: 2,
        nx: 3,
        dt: 1e-3,
        r_min: 0.5,
        r_max: 100.0,
        prior_rate: 5.0,
        gamma: 0.99,
        eta_alpha: 0.05,
        eta_w: 5.0,
        spike_gated: false,
        seed,
    };
    let mut net = spiking::SpikingNetwork::new(cfg.clone())?;
    net.set_log_alpha(0, vec![2.0, -2.0, 0.0]);
    net.set_log_alpha(1, vec![-2.0, 2.0, 0.0]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let x = rand::Rng::random_range(&mut rng, 0..3);
        let rec = net.step(x, true);
        for &p in &rec.probs {
            if p < cfg.r_min * cfg.dt - EPS || p > cfg.r_max * cfg.dt + EPS {
                return Err(fail("spiking-rate-bounds", format!("p = {p}")));
            }
        }
    }
    Ok(())
}

/// Runs every check, printing one line per check; errors after the full
/// pass if any failed.
pub fn run_all(seed: u64) -> Result<()> {
    let mut failures = Vec::new();
    for check in CHECKS {
        match (check.run)(seed) {
            Ok(()) => println!("ok      {}", check.name),
            Err(e) => {
                println!("FAILED  {}: {e}", check.name);
                failures.push(check.name);
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::Config(format!(
            "{} invariant check(s) failed: {}",
            failures.len(),
            failures.join(", ")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        run_all(12345).unwrap();
    }
}
