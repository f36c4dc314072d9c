//! Recursive Bayesian filtering over an exchangeable stimulus stream.
//!
//! Within one perceptual event the latent is static and the likelihood is
//! time-invariant, so the posterior after `T` stimuli is the prior times a
//! product of per-stimulus likelihood factors -- in any order. Products run
//! in log space; a naive probability-space product underflows for `T` beyond
//! a few dozen.
//!
//! ```
//! use infomax::filter::{batch_posterior, filter_update, LikelihoodModel, PosteriorState};
//! use infomax::prob::{ConditionalTable, FiniteDistribution};
//!
//! let prior = FiniteDistribution::uniform(2);
//! let rows = vec![vec![0.8, 0.2], vec![0.2, 0.8]];
//! let lik = LikelihoodModel::new(ConditionalTable::from_rows(rows).unwrap());
//! let xs = [0, 0, 1, 0];
//!
//! // one stimulus at a time...
//! let mut state = PosteriorState::from_prior(&prior);
//! for &x in &xs {
//!     state = filter_update(&state, &lik, x).unwrap();
//! }
//! // ...lands on the all-at-once posterior
//! let batch = batch_posterior(&prior, &lik, &xs).unwrap();
//! for (a, b) in state.belief().probs().iter().zip(batch.probs()) {
//!     assert!((a - b).abs() < 1e-12);
//! }
//! ```

use crate::error::{Error, Result};
use crate::prob::{ConditionalTable, FiniteDistribution, EPS};

/// Posterior over the code alphabet at time `t`.
#[derive(Debug, Clone)]
pub struct PosteriorState {
    log_belief: Vec<f64>,
    t: usize,
}

impl PosteriorState {
    pub fn from_prior(prior: &FiniteDistribution) -> Self {
        Self {
            log_belief: prior
                .probs()
                .iter()
                .map(|&p| if p > 0.0 { p.ln() } else { f64::NEG_INFINITY })
                .collect(),
            t: 0,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Normalized belief.
    pub fn belief(&self) -> FiniteDistribution {
        FiniteDistribution::new(normalize_log(&self.log_belief)).expect("normalized")
    }
}

/// Time-invariant likelihood `p(x_1 = . | y)`: one row per code symbol,
/// each a distribution over stimuli.
#[derive(Debug, Clone)]
pub struct LikelihoodModel {
    table: ConditionalTable,
}

impl LikelihoodModel {
    pub fn new(table: ConditionalTable) -> Self {
        Self { table }
    }

    pub fn table(&self) -> &ConditionalTable {
        &self.table
    }

    pub fn n_states(&self) -> usize {
        self.table.n_conditions()
    }

    pub fn n_stimuli(&self) -> usize {
        self.table.n_outcomes()
    }
}

fn normalize_log(log_w: &[f64]) -> Vec<f64> {
    let max = log_w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = log_w.iter().map(|l| (l - max).exp()).collect();
    let sum: f64 = w.iter().sum();
    w.iter().map(|v| v / sum).collect()
}

/// One Bayes update: `belief(y) <- belief(y) * p(x_t|y)`, renormalized.
pub fn filter_update(
    state: &PosteriorState,
    lik: &LikelihoodModel,
    x_t: usize,
) -> Result<PosteriorState> {
    let log_belief: Vec<f64> = state
        .log_belief
        .iter()
        .enumerate()
        .map(|(y, &l)| {
            let p = lik.table.row(y).prob(x_t);
            if p > 0.0 { l + p.ln() } else { f64::NEG_INFINITY }
        })
        .collect();
    let max = log_belief.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return Err(Error::ZeroMass);
    }
    // shift so repeated updates cannot drift out of range
    Ok(PosteriorState {
        log_belief: log_belief.iter().map(|l| l - max).collect(),
        t: state.t + 1,
    })
}

/// Batch posterior: normalization of `p(y) * prod_t p(x_t|y)`, in log space.
///
/// The product over time is reduced to per-symbol counts first, so the
/// result is bit-for-bit invariant under permutations of `xs` — the
/// computational face of exchangeability.
pub fn batch_posterior(
    prior: &FiniteDistribution,
    lik: &LikelihoodModel,
    xs: &[usize],
) -> Result<FiniteDistribution> {
    let mut counts = vec![0u64; lik.n_stimuli()];
    for &x in xs {
        counts[x] += 1;
    }
    let log_w: Vec<f64> = prior
        .probs()
        .iter()
        .enumerate()
        .map(|(y, &pr)| {
            if pr <= 0.0 {
                return f64::NEG_INFINITY;
            }
            let mut l = pr.ln();
            for (x, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let p = lik.table.row(y).prob(x);
                l += if p > 0.0 { c as f64 * p.ln() } else { f64::NEG_INFINITY };
            }
            l
        })
        .collect();
    if !log_w.iter().any(|l| l.is_finite()) {
        return Err(Error::ZeroMass);
    }
    FiniteDistribution::new(normalize_log(&log_w))
}

/// Per-neuron posterior under a factorized likelihood: independent Bernoulli
/// beliefs `p(y_i = 1 | x_{1:t})`, updated by likelihood-ratio odds.
#[derive(Debug, Clone)]
pub struct FactorizedPosterior {
    /// Log-odds of `y_i = 1` per neuron.
    log_odds: Vec<f64>,
    t: usize,
}

impl FactorizedPosterior {
    pub fn from_prior(prior_p1: &[f64]) -> Result<Self> {
        if prior_p1.iter().any(|p| !(*p > 0.0 && *p < 1.0)) {
            return Err(Error::InvalidDistribution(
                "per-neuron priors must be interior".into(),
            ));
        }
        Ok(Self {
            log_odds: prior_p1.iter().map(|p| (p / (1.0 - p)).ln()).collect(),
            t: 0,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n_neurons(&self) -> usize {
        self.log_odds.len()
    }

    /// `p(y_i = 1 | x_{1:t})` per neuron.
    pub fn marginals(&self) -> Vec<f64> {
        self.log_odds.iter().map(|l| 1.0 / (1.0 + (-l).exp())).collect()
    }

    /// Product-of-marginals joint over `{0,1}^n`, bit `i` carrying `y_i`.
    pub fn joint(&self) -> FiniteDistribution {
        let n = self.log_odds.len();
        let marg = self.marginals();
        let mut probs = vec![1.0; 1 << n];
        for (m, p) in probs.iter_mut().enumerate() {
            for (i, &theta) in marg.iter().enumerate() {
                *p *= if (m >> i) & 1 == 1 { theta } else { 1.0 - theta };
            }
        }
        FiniteDistribution::from_weights(&probs).expect("positive mass")
    }
}

/// Per-neuron factorized likelihood: `g[i][y_i][x] = p(x_1 = x | y_i)`.
#[derive(Debug, Clone)]
pub struct FactorizedLikelihood {
    g: Vec<[Vec<f64>; 2]>,
}

impl FactorizedLikelihood {
    pub fn new(g: Vec<[Vec<f64>; 2]>) -> Self {
        Self { g }
    }

    pub fn n_neurons(&self) -> usize {
        self.g.len()
    }

    /// Likelihood ratio `alpha_i(x) = p(x_1 = x | y_i = 1) / p(x_1 = x | y_i = 0)`.
    pub fn alpha(&self, i: usize, x: usize) -> Result<f64> {
        let denom = self.g[i][0][x];
        if denom < EPS {
            return Err(Error::InvalidDistribution(format!(
                "zero denominator likelihood p(x={x}|y_{i}=0)"
            )));
        }
        Ok(self.g[i][1][x] / denom)
    }
}

/// One factorized Bayes update: per-neuron posterior odds multiply by
/// `alpha_i(x_t)`.
pub fn factorized_filter_update(
    state: &FactorizedPosterior,
    lik: &FactorizedLikelihood,
    x_t: usize,
) -> Result<FactorizedPosterior> {
    let mut log_odds = state.log_odds.clone();
    for (i, l) in log_odds.iter_mut().enumerate() {
        *l += lik.alpha(i, x_t)?.ln();
    }
    Ok(FactorizedPosterior {
        log_odds,
        t: state.t + 1,
    })
}

/// Seeded random filtering problem: prior over `n_states` and a strictly
/// positive likelihood table `p(x|y)`.
pub fn random_filter_instance<R: rand::Rng>(
    rng: &mut R,
    n_states: usize,
    n_stimuli: usize,
) -> (FiniteDistribution, LikelihoodModel) {
    let prior = crate::testutil::random_distribution(rng, n_states);
    let rows = (0..n_states)
        .map(|_| crate::testutil::random_distribution(rng, n_stimuli))
        .collect();
    (
        prior,
        LikelihoodModel::new(crate::prob::ConditionalTable::new(rows).expect("stochastic rows")),
    )
}

/// Runs the joint and the per-neuron recursions side by side on one sampled
/// event from a factorized world and returns the largest absolute difference
/// between the factorized marginals and the joint-posterior marginals seen
/// at any step.
pub fn factorized_vs_joint_gap(
    spec: &crate::env::EnvironmentSpec,
    t_max: usize,
    seed: u64,
) -> Result<f64> {
    use rand::SeedableRng;
    let fac = spec
        .factorized
        .as_ref()
        .ok_or_else(|| Error::Config("environment lacks a factorized emission".into()))?;
    let lik = LikelihoodModel::new(spec.emission.clone());
    let flik = fac.likelihood();
    let mut joint = PosteriorState::from_prior(&spec.latent_prior);
    let mut per_neuron = FactorizedPosterior::from_prior(&fac.prior_p1)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let (_, xs) = crate::env::sample_event(spec, &mut rng);
    let mut worst = 0.0f64;
    for &x in xs.iter().take(t_max) {
        joint = filter_update(&joint, &lik, x)?;
        per_neuron = factorized_filter_update(&per_neuron, &flik, x)?;
        let belief = joint.belief();
        let marg = per_neuron.marginals();
        for (i, &m) in marg.iter().enumerate() {
            let joint_m: f64 = belief
                .probs()
                .iter()
                .enumerate()
                .filter(|(y, _)| (y >> i) & 1 == 1)
                .map(|(_, p)| p)
                .sum();
            worst = worst.max((m - joint_m).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::ConditionalTable;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lik_4x3() -> LikelihoodModel {
        LikelihoodModel::new(
            ConditionalTable::from_rows(vec![
                vec![0.6, 0.3, 0.1],
                vec![0.2, 0.2, 0.6],
                vec![0.3, 0.4, 0.3],
                vec![0.1, 0.7, 0.2],
            ])
            .unwrap(),
        )
    }

    #[test]
    fn uniform_likelihood_row_leaves_belief_unchanged() {
        let lik = LikelihoodModel::new(
            ConditionalTable::from_rows(vec![vec![1.0 / 3.0; 3]; 2]).unwrap(),
        );
        let prior = FiniteDistribution::new(vec![0.3, 0.7]).unwrap();
        let state = filter_update(&PosteriorState::from_prior(&prior), &lik, 1).unwrap();
        let b = state.belief();
        assert!((b.prob(0) - 0.3).abs() < 1e-12);
        assert!((b.prob(1) - 0.7).abs() < 1e-12);
    }

    #[test]
    fn point_mass_prior_stays_point_mass() {
        let prior = FiniteDistribution::point_mass(4, 2);
        let mut state = PosteriorState::from_prior(&prior);
        for &x in &[0, 2, 1, 1] {
            state = filter_update(&state, &lik_4x3(), x).unwrap();
        }
        assert!((state.belief().prob(2) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn recursive_equals_batch() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let prior = crate::testutil::random_distribution(&mut rng, 4);
        let lik = lik_4x3();
        let xs: Vec<usize> = (0..10).map(|_| rng.random_range(0..3)).collect();
        let mut state = PosteriorState::from_prior(&prior);
        for &x in &xs {
            state = filter_update(&state, &lik, x).unwrap();
        }
        let batch = batch_posterior(&prior, &lik, &xs).unwrap();
        for y in 0..4 {
            assert!((state.belief().prob(y) - batch.prob(y)).abs() < 1e-12);
        }
        assert_eq!(state.t(), 10);
    }

    #[test]
    fn empty_sequence_returns_prior() {
        let prior = FiniteDistribution::new(vec![0.25, 0.35, 0.15, 0.25]).unwrap();
        let batch = batch_posterior(&prior, &lik_4x3(), &[]).unwrap();
        for y in 0..4 {
            assert!((batch.prob(y) - prior.prob(y)).abs() < 1e-12);
        }
    }

    #[test]
    fn posterior_is_permutation_invariant() {
        let prior = FiniteDistribution::uniform(4);
        let lik = lik_4x3();
        let xs = vec![0, 2, 1, 2, 0];
        let shuffled = vec![2, 0, 2, 0, 1];
        let a = batch_posterior(&prior, &lik, &xs).unwrap();
        let b = batch_posterior(&prior, &lik, &shuffled).unwrap();
        for y in 0..4 {
            assert!((a.prob(y) - b.prob(y)).abs() < 1e-15);
        }
    }

    #[test]
    fn repeated_symbol_matches_repeated_updates() {
        let prior = FiniteDistribution::uniform(4);
        let lik = lik_4x3();
        let xs = vec![1; 30];
        let batch = batch_posterior(&prior, &lik, &xs).unwrap();
        let mut state = PosteriorState::from_prior(&prior);
        for &x in &xs {
            state = filter_update(&state, &lik, x).unwrap();
        }
        for y in 0..4 {
            assert!((batch.prob(y) - state.belief().prob(y)).abs() < 1e-12);
        }
    }

    #[test]
    fn contradictory_evidence_errors() {
        let lik = LikelihoodModel::new(
            ConditionalTable::from_rows(vec![vec![1.0, 0.0], vec![1.0, 0.0]]).unwrap(),
        );
        let prior = FiniteDistribution::uniform(2);
        let state = PosteriorState::from_prior(&prior);
        assert!(matches!(
            filter_update(&state, &lik, 1),
            Err(Error::ZeroMass)
        ));
    }

    #[test]
    fn unit_alpha_leaves_factorized_state_unchanged() {
        let lik = FactorizedLikelihood::new(vec![
            [vec![0.5, 0.5], vec![0.5, 0.5]],
            [vec![0.3, 0.7], vec![0.3, 0.7]],
        ]);
        let state = FactorizedPosterior::from_prior(&[0.2, 0.6]).unwrap();
        let next = factorized_filter_update(&state, &lik, 1).unwrap();
        let before = state.marginals();
        let after = next.marginals();
        for (b, a) in before.iter().zip(&after) {
            assert!((b - a).abs() < 1e-12);
        }
    }

    #[test]
    fn single_neuron_matches_joint_filter() {
        let g = vec![[vec![0.7, 0.3], vec![0.2, 0.8]]];
        let flik = FactorizedLikelihood::new(g.clone());
        let jlik = LikelihoodModel::new(
            ConditionalTable::from_rows(vec![g[0][0].clone(), g[0][1].clone()]).unwrap(),
        );
        let prior_p1 = 0.35;
        let mut fstate = FactorizedPosterior::from_prior(&[prior_p1]).unwrap();
        let prior = FiniteDistribution::new(vec![1.0 - prior_p1, prior_p1]).unwrap();
        let mut jstate = PosteriorState::from_prior(&prior);
        for &x in &[1, 0, 1, 1, 0] {
            fstate = factorized_filter_update(&fstate, &flik, x).unwrap();
            jstate = filter_update(&jstate, &jlik, x).unwrap();
        }
        assert!((fstate.marginals()[0] - jstate.belief().prob(1)).abs() < 1e-12);
    }
}
