//! The accurate MI maximizer: a chase game between the code and an auxiliary
//! marginal.
//!
//! The marginal `p(y)` inside the MI gradient cannot be read off a sampled
//! stream directly, so an auxiliary distribution `q(y)` is trained to track
//! it: `q` descends toward the sampled `p(y|x)` (whose average is `p(y)`),
//! while each code row ascends along `log(p(y|x)/q(y))`, away from `q`. Run
//! with `eta_q` well above `eta_p`, the ascent always sees a near-converged
//! auxiliary.
//!
//! Both players live on unconstrained scores mapped through a softmax, so no
//! update can leave the simplex.
//!
//! ```
//! use infomax::chase::{run_chase, ChaseConfig};
//! use infomax::prob::FiniteDistribution;
//!
//! let px = FiniteDistribution::uniform(2);
//! let cfg = ChaseConfig { ny: 2, steps: 20_000, seed: 1, ..ChaseConfig::default() };
//! let log = run_chase(&px, &cfg).unwrap();
//! // a 2x2 code on uniform input heads for the ln 2 = 0.693.. capacity
//! assert!(log.last("mi_nats").unwrap() > 0.6);
//! assert!(log.last("q_gap_max").unwrap() < 0.25);
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::log::TrainLog;
use crate::prob::{marginal, mutual_information, ConditionalTable, FiniteDistribution, EPS};
use crate::simplex;

/// Tabular code `p(y|x)` plus auxiliary marginal `q(y)`, both score-backed.
#[derive(Debug, Clone)]
pub struct ChaseState {
    code_scores: Vec<Vec<f64>>,
    aux_scores: Vec<f64>,
    step_count: u64,
}

impl ChaseState {
    /// Code rows start at uniform plus seeded noise of magnitude 0.01
    /// (uniform is a saddle of the MI); the auxiliary starts uniform.
    pub fn new(nx: usize, ny: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
        let code_scores = (0..nx)
            .map(|_| {
                let probs: Vec<f64> = (0..ny)
                    .map(|_| 1.0 / ny as f64 + 0.01 * (rand::Rng::random::<f64>(&mut rng) - 0.5))
                    .collect();
                let sum: f64 = probs.iter().sum();
                simplex::scores_from_probs(
                    &probs.iter().map(|p| p / sum).collect::<Vec<_>>(),
                )
            })
            .collect();
        Self {
            code_scores,
            aux_scores: vec![0.0; ny],
            step_count: 0,
        }
    }

    /// State with explicit code rows and auxiliary, e.g. for frozen-code
    /// tracking experiments.
    pub fn from_probabilities(code_rows: &[Vec<f64>], aux: &[f64]) -> Self {
        Self {
            code_scores: code_rows
                .iter()
                .map(|r| simplex::scores_from_probs(r))
                .collect(),
            aux_scores: simplex::scores_from_probs(aux),
            step_count: 0,
        }
    }

    pub fn n_inputs(&self) -> usize {
        self.code_scores.len()
    }

    pub fn n_outputs(&self) -> usize {
        self.aux_scores.len()
    }

    pub fn step_count(&self) -> u64 {
        self.step_count
    }

    /// Current code `p(y|x)`.
    pub fn code(&self) -> ConditionalTable {
        ConditionalTable::from_rows(
            self.code_scores.iter().map(|s| simplex::softmax(s)).collect(),
        )
        .expect("softmax rows are stochastic")
    }

    /// Current auxiliary `q(y)`.
    pub fn aux(&self) -> FiniteDistribution {
        FiniteDistribution::new(simplex::softmax(&self.aux_scores))
            .expect("softmax is stochastic")
    }

    /// Descent direction of the auxiliary for a sampled `x`:
    /// `-(q(y) - p(y|x))` per component.
    pub fn q_direction(&self, x: usize) -> Vec<f64> {
        let q = simplex::softmax(&self.aux_scores);
        let p = simplex::softmax(&self.code_scores[x]);
        p.iter().zip(&q).map(|(p, q)| p - q).collect()
    }

    /// Ascent integrand of the code row for a sampled `x`:
    /// `log(p(y|x) / q(y))` per component.
    pub fn p_log_ratio(&self, x: usize) -> Vec<f64> {
        let q = simplex::softmax(&self.aux_scores);
        let p = simplex::softmax(&self.code_scores[x]);
        p.iter()
            .zip(&q)
            .map(|(p, q)| (p.max(EPS) / q.max(EPS)).ln())
            .collect()
    }

    /// First-order tangent change of the code row `p(.|x)` per unit `eta_p`
    /// for the step [`p_step`](Self::p_step) would take.
    pub fn p_step_direction(&self, x: usize) -> Vec<f64> {
        let p = simplex::softmax(&self.code_scores[x]);
        simplex::realized_direction(&p, &self.p_log_ratio(x))
    }

    /// Moves `q` toward the sampled row `p(y|x)`. In expectation over
    /// `x ~ p(x)` the unique interior fixed point is `q = p(y)`.
    pub fn q_step(&mut self, x: usize, eta_q: f64) {
        let q = simplex::softmax(&self.aux_scores);
        let d = self.q_direction(x);
        simplex::ascend(&mut self.aux_scores, &q, &d, eta_q);
    }

    /// Moves the row `p(.|x)` away from `q` along the log-ratio integrand.
    pub fn p_step(&mut self, x: usize, eta_p: f64) {
        let p = simplex::softmax(&self.code_scores[x]);
        let g = self.p_log_ratio(x);
        simplex::ascend(&mut self.code_scores[x], &p, &g, eta_p);
        self.step_count += 1;
    }
}

/// Two-timescale configuration: the auxiliary's descent (`eta_q`) must run
/// faster than the code's ascent (`eta_p`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChaseConfig {
    /// Output alphabet size.
    pub ny: usize,
    /// Code ascent rate.
    pub eta_p: f64,
    /// Auxiliary descent rate; must exceed `eta_p`.
    pub eta_q: f64,
    pub steps: u64,
    pub seed: u64,
    /// Metric rows are emitted every `log_every` steps (plus step 0 and the
    /// final step).
    #[serde(default = "default_log_every")]
    pub log_every: u64,
}

fn default_log_every() -> u64 {
    1000
}

impl Default for ChaseConfig {
    fn default() -> Self {
        Self {
            ny: 3,
            eta_p: 0.05,
            eta_q: 0.5,
            steps: 100_000,
            seed: 0,
            log_every: default_log_every(),
        }
    }
}

impl ChaseConfig {
    pub fn validate(&self) -> Result<()> {
        if self.ny == 0 {
            return Err(Error::Config("ny must be >= 1".into()));
        }
        if !(self.eta_p > 0.0) || !(self.eta_q > 0.0) {
            return Err(Error::Config("learning rates must be > 0".into()));
        }
        if self.eta_q <= self.eta_p {
            return Err(Error::Config(
                "two-timescale rule violated: eta_q must exceed eta_p so the \
                 auxiliary tracks p(y) faster than the code moves"
                    .into(),
            ));
        }
        if self.log_every == 0 {
            return Err(Error::Config("log_every must be >= 1".into()));
        }
        Ok(())
    }
}

/// Columns of the chase [`TrainLog`].
pub const CHASE_COLUMNS: [&str; 5] = ["step", "mi_nats", "q_gap_max", "eta_p", "eta_q"];

/// Samples `x ~ p(x)` once per step (Monte Carlo, batch size 1) and applies
/// one `q_step` and one `p_step`. Deterministic given the seed.
pub fn run_chase(px: &FiniteDistribution, cfg: &ChaseConfig) -> Result<TrainLog> {
    cfg.validate()?;
    let mut state = ChaseState::new(px.len(), cfg.ny, cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut log = TrainLog::new(CHASE_COLUMNS.to_vec());

    let record = |state: &ChaseState, step: u64, log: &mut TrainLog| -> Result<()> {
        let code = state.code();
        let mi = mutual_information(px, &code)?;
        let py = marginal(px, &code)?;
        let q = state.aux();
        let gap = q
            .probs()
            .iter()
            .zip(py.probs())
            .map(|(q, p)| (q - p).abs())
            .fold(0.0, f64::max);
        log.push(vec![step as f64, mi, gap, cfg.eta_p, cfg.eta_q])
    };

    record(&state, 0, &mut log)?;
    for step in 1..=cfg.steps {
        let x = px.sample(&mut rng);
        state.q_step(x, cfg.eta_q);
        state.p_step(x, cfg.eta_p);
        if step % cfg.log_every == 0 || step == cfg.steps {
            record(&state, step, &mut log)?;
        }
    }
    Ok(log)
}

/// Runs only the auxiliary against a frozen code, starting from uniform, and
/// returns the smallest max-norm gap to the exact marginal seen along the
/// trajectory (the stochastic updates jitter around the fixed point, so the
/// infimum is the meaningful tracking figure).
pub fn frozen_code_best_gap(
    px: &FiniteDistribution,
    code: &ConditionalTable,
    eta_q: f64,
    steps: u64,
    seed: u64,
) -> Result<f64> {
    let rows: Vec<Vec<f64>> = code.rows().iter().map(|r| r.probs().to_vec()).collect();
    let uniform = vec![1.0 / code.n_outcomes() as f64; code.n_outcomes()];
    let mut state = ChaseState::from_probabilities(&rows, &uniform);
    let py = marginal(px, code)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::INFINITY;
    for _ in 0..steps {
        let x = px.sample(&mut rng);
        state.q_step(x, eta_q);
        let gap = state
            .aux()
            .probs()
            .iter()
            .zip(py.probs())
            .map(|(q, p)| (q - p).abs())
            .fold(0.0, f64::max);
        best = best.min(gap);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob;
    use rand::SeedableRng;

    fn frozen_state(rows: Vec<Vec<f64>>, q: Vec<f64>) -> ChaseState {
        ChaseState {
            code_scores: rows.iter().map(|r| crate::simplex::scores_from_probs(r)).collect(),
            aux_scores: crate::simplex::scores_from_probs(&q),
            step_count: 0,
        }
    }

    #[test]
    fn q_direction_zero_at_pointwise_fixed_point() {
        let state = frozen_state(vec![vec![0.3, 0.7]], vec![0.3, 0.7]);
        for d in state.q_direction(0) {
            assert!(d.abs() < 1e-12);
        }
    }

    #[test]
    fn q_decreases_where_it_exceeds_the_sampled_row() {
        // binary case of the chase-game case table
        let mut state = frozen_state(vec![vec![0.8, 0.2]], vec![0.4, 0.6]);
        let before = state.aux();
        state.q_step(0, 0.1);
        let after = state.aux();
        // q(1) = 0.6 > p(1|x) = 0.2, so q(1) must fall (and q(0) rise)
        assert!(after.prob(1) < before.prob(1));
        assert!(after.prob(0) > before.prob(0));
    }

    #[test]
    fn p_log_ratio_zero_when_row_equals_aux() {
        let state = frozen_state(vec![vec![0.25, 0.75]], vec![0.25, 0.75]);
        for g in state.p_log_ratio(0) {
            assert!(g.abs() < 1e-9);
        }
        for d in state.p_step_direction(0) {
            assert!(d.abs() < 1e-9);
        }
    }

    #[test]
    fn p_moves_away_from_q() {
        let mut state = frozen_state(vec![vec![0.7, 0.3]], vec![0.5, 0.5]);
        let before = state.code();
        state.p_step(0, 0.1);
        let after = state.code();
        // p(0|x) = 0.7 > q(0) = 0.5, so p(0|x) grows
        assert!(after.row(0).prob(0) > before.row(0).prob(0));
    }

    #[test]
    fn q_tracks_exact_marginal_with_frozen_code() {
        let px = FiniteDistribution::new(vec![0.5, 0.3, 0.2]).unwrap();
        let rows = vec![
            vec![0.7, 0.2, 0.1],
            vec![0.1, 0.8, 0.1],
            vec![0.2, 0.3, 0.5],
        ];
        let mut state = frozen_state(rows.clone(), vec![1.0 / 3.0; 3]);
        let table = ConditionalTable::from_rows(rows).unwrap();
        let py = marginal(&px, &table).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut best_gap = f64::INFINITY;
        for _ in 0..100_000 {
            let x = px.sample(&mut rng);
            state.q_step(x, 0.05);
            let gap = state
                .aux()
                .probs()
                .iter()
                .zip(py.probs())
                .map(|(q, p)| (q - p).abs())
                .fold(0.0, f64::max);
            best_gap = best_gap.min(gap);
        }
        assert!(best_gap < 0.01, "best max-gap {best_gap}");
    }

    #[test]
    fn expected_q_step_vanishes_exactly_at_marginal() {
        let px = FiniteDistribution::new(vec![0.6, 0.4]).unwrap();
        let rows = vec![vec![0.9, 0.1], vec![0.3, 0.7]];
        let table = ConditionalTable::from_rows(rows.clone()).unwrap();
        let py = marginal(&px, &table).unwrap();
        let state = frozen_state(rows, py.probs().to_vec());
        let mut expected = vec![0.0; 2];
        for x in 0..2 {
            for (e, d) in expected.iter_mut().zip(state.q_direction(x)) {
                *e += px.prob(x) * d;
            }
        }
        for e in expected {
            assert!(e.abs() < 1e-12);
        }
    }

    #[test]
    fn run_chase_zero_steps_logs_initial_row_only() {
        let px = FiniteDistribution::uniform(2);
        let cfg = ChaseConfig {
            ny: 2,
            steps: 0,
            ..ChaseConfig::default()
        };
        let log = run_chase(&px, &cfg).unwrap();
        assert_eq!(log.len(), 1);
        assert_eq!(log.rows()[0][0], 0.0);
    }

    #[test]
    fn degenerate_single_output_keeps_mi_zero() {
        let px = FiniteDistribution::uniform(3);
        let cfg = ChaseConfig {
            ny: 1,
            steps: 500,
            log_every: 100,
            ..ChaseConfig::default()
        };
        let log = run_chase(&px, &cfg).unwrap();
        for row in log.rows() {
            assert!(row[1].abs() < 1e-9);
        }
    }

    #[test]
    fn chase_reaches_most_of_capacity_2x2() {
        let px = FiniteDistribution::uniform(2);
        let (capacity, _) = prob::capacity_oracle(&px, 2).unwrap();
        let cfg = ChaseConfig {
            ny: 2,
            eta_p: 0.05,
            eta_q: 0.5,
            steps: 100_000,
            seed: 3,
            log_every: 10_000,
        };
        let log = run_chase(&px, &cfg).unwrap();
        let mi = log.last("mi_nats").unwrap();
        assert!(mi >= 0.95 * capacity, "mi {mi} vs capacity {capacity}");
    }

    #[test]
    fn two_timescale_ordering_enforced() {
        let cfg = ChaseConfig {
            eta_p: 0.5,
            eta_q: 0.5,
            ..ChaseConfig::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn p_step_direction_matches_variation_integrand_with_exact_marginal() {
        // substitute q = exact p(y); then the ascent value along the realized
        // direction must equal mi_variation on the same perturbation
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let (px, table) = crate::testutil::random_instance(&mut rng, 3, 3);
            let py = marginal(&px, &table).unwrap();
            let state = frozen_state(
                table.rows().iter().map(|r| r.probs().to_vec()).collect(),
                py.probs().to_vec(),
            );
            let mut deltas = Vec::new();
            let mut ascent_value = 0.0;
            for x in 0..3 {
                let dir = state.p_step_direction(x);
                let g = state.p_log_ratio(x);
                ascent_value += px.prob(x) * g.iter().zip(&dir).map(|(g, d)| g * d).sum::<f64>();
                deltas.push(dir);
            }
            let dp = crate::prob::TablePerturbation::new(deltas).unwrap();
            let var = crate::prob::mi_variation(&px, &table, &dp).unwrap();
            assert!(
                (var - ascent_value).abs() < 1e-10,
                "variation {var} vs ascent {ascent_value}"
            );
        }
    }
}
