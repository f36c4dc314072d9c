//! Spatially local MI maximization over a population of binary neurons.
//!
//! The code factorizes as `p(y|x) = prod_i p(y_i|x)` (the independent-neuron
//! hypothesis), which is exactly the condition under which a neuron can
//! improve its own response probability without touching, or needing, the
//! rest of the population's parameters. Each neuron runs its own chase: a
//! tabular lateral predictor `q(y_i|y_-i)` descends toward the neuron's
//! response probability, while the response `p(y_i|x)` ascends along the
//! log-ratio of the two, using only `(x, y_-i)` observed on the current
//! sample.
//!
//! ```
//! use infomax::meanfield::{run_meanfield, MeanfieldConfig};
//! use infomax::prob::FiniteDistribution;
//!
//! let px = FiniteDistribution::uniform(4);
//! let cfg = MeanfieldConfig { steps: 30_000, seed: 2, ..MeanfieldConfig::default() };
//! let log = run_meanfield(&px, 2, &cfg).unwrap();
//! let mi = log.column("mi_nats").unwrap();
//! // two binary neurons on four equiprobable inputs: MI climbs toward ln 4
//! assert!(mi.last().unwrap() > mi.first().unwrap());
//! assert!(log.last("mean_predictor_gap").unwrap() < 0.2);
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::log::TrainLog;
use crate::prob::{entropy, mutual_information, ConditionalTable, FiniteDistribution, EPS};

/// Exact-enumeration cap: joint quantities are computed over `2^n` outcomes.
pub const ENUM_CAP: usize = 12;

fn sigmoid(l: f64) -> f64 {
    (1.0 / (1.0 + (-l).exp())).clamp(EPS, 1.0 - EPS)
}

fn logit(p: f64) -> f64 {
    let p = p.clamp(EPS, 1.0 - EPS);
    (p / (1.0 - p)).ln()
}

/// Per-neuron Bernoulli code `p(y_i = 1 | x)`, logit-parameterized so updates
/// keep every parameter inside `(0, 1)`.
#[derive(Debug, Clone)]
pub struct FactorizedCode {
    /// `logits[i][x]` is the log-odds of `p(y_i = 1 | x)`.
    logits: Vec<Vec<f64>>,
    nx: usize,
}

impl FactorizedCode {
    /// All parameters start at 1/2 plus seeded noise of magnitude 0.01.
    pub fn new(n: usize, nx: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51ed2701);
        let logits = (0..n)
            .map(|_| {
                (0..nx)
                    .map(|_| logit(0.5 + 0.01 * (rand::Rng::random::<f64>(&mut rng) - 0.5)))
                    .collect()
            })
            .collect();
        Self { logits, nx }
    }

    pub fn from_parameters(per_neuron: Vec<Vec<f64>>) -> Result<Self> {
        let nx = per_neuron.first().map_or(0, Vec::len);
        for row in &per_neuron {
            if row.len() != nx {
                return Err(Error::AlphabetMismatch {
                    expected: nx,
                    got: row.len(),
                });
            }
            if row.iter().any(|p| !(*p > 0.0 && *p < 1.0)) {
                return Err(Error::InvalidDistribution(
                    "Bernoulli parameters must be interior".into(),
                ));
            }
        }
        Ok(Self {
            logits: per_neuron
                .iter()
                .map(|row| row.iter().map(|&p| logit(p)).collect())
                .collect(),
            nx,
        })
    }

    pub fn n_neurons(&self) -> usize {
        self.logits.len()
    }

    pub fn n_inputs(&self) -> usize {
        self.nx
    }

    /// `p(y_i = 1 | x)`.
    pub fn bernoulli(&self, i: usize, x: usize) -> f64 {
        sigmoid(self.logits[i][x])
    }

    /// Product distribution over `{0,1}^n` for one input symbol; outcome `m`
    /// carries `y_i` in bit `i`.
    pub fn joint_from_factors(&self, x: usize) -> Result<FiniteDistribution> {
        let n = self.n_neurons();
        if n > ENUM_CAP {
            return Err(Error::SizeCap(format!("enumeration limited to n <= {ENUM_CAP}")));
        }
        let mut probs = vec![1.0; 1 << n];
        for (m, p) in probs.iter_mut().enumerate() {
            for i in 0..n {
                let theta = self.bernoulli(i, x);
                *p *= if (m >> i) & 1 == 1 { theta } else { 1.0 - theta };
            }
        }
        let sum: f64 = probs.iter().sum();
        FiniteDistribution::new(probs.iter().map(|p| p / sum).collect())
    }

    /// Joint channel `p(y|x)` over all inputs, for exact MI logging.
    pub fn joint_table(&self) -> Result<ConditionalTable> {
        ConditionalTable::new(
            (0..self.nx)
                .map(|x| self.joint_from_factors(x))
                .collect::<Result<_>>()?,
        )
    }

    /// Samples the full response vector for one input.
    pub fn sample_y<R: rand::Rng>(&self, x: usize, rng: &mut R) -> Vec<u8> {
        (0..self.n_neurons())
            .map(|i| u8::from(rng.random::<f64>() < self.bernoulli(i, x)))
            .collect()
    }

    /// Distribution of the context `y_-i` given `x`, indexed by
    /// [`context_index`].
    pub fn rest_given_x(&self, i: usize, x: usize) -> Vec<f64> {
        let n = self.n_neurons();
        let mut probs = vec![1.0; 1 << (n - 1)];
        for (ctx, p) in probs.iter_mut().enumerate() {
            let mut bit = 0;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let theta = self.bernoulli(j, x);
                *p *= if (ctx >> bit) & 1 == 1 { theta } else { 1.0 - theta };
                bit += 1;
            }
        }
        probs
    }

    /// One chase ascent of the Bernoulli parameter `p(y_i = 1 | x)` against
    /// the predictor value `q = q(y_i = 1 | y_-i)` observed on the sample.
    ///
    /// The logit update reproduces the two-outcome score dynamics of the
    /// joint chase exactly, so `n = 1` degenerates to `chase::p_step`.
    pub fn code_step(&mut self, i: usize, x: usize, q: f64, eta: f64) {
        let theta = self.bernoulli(i, x);
        let g = logit(theta) - logit(q);
        self.logits[i][x] += eta * 2.0 * theta * (1.0 - theta) * g;
    }
}

/// Packs `y_-i` into an index over `2^(n-1)` contexts.
pub fn context_index(y: &[u8], i: usize) -> usize {
    let mut ctx = 0;
    let mut bit = 0;
    for (j, &b) in y.iter().enumerate() {
        if j == i {
            continue;
        }
        ctx |= (b as usize) << bit;
        bit += 1;
    }
    ctx
}

/// Tabular per-neuron auxiliary `q(y_i = 1 | y_-i)`: one probability cell per
/// context. Exact at this module's scale; the spiking layer later linearizes
/// it.
#[derive(Debug, Clone)]
pub struct LateralPredictor {
    q: Vec<Vec<f64>>,
}

impl LateralPredictor {
    /// All cells start at `init`.
    pub fn new(n: usize, init: f64) -> Self {
        let contexts = if n == 0 { 0 } else { 1 << (n - 1) };
        Self {
            q: vec![vec![init.clamp(EPS, 1.0 - EPS); contexts]; n],
        }
    }

    pub fn predict(&self, i: usize, ctx: usize) -> f64 {
        self.q[i][ctx]
    }

    /// Delta rule: moves `q(y_i = 1 | y_-i)` along `-(q - target)`. With a
    /// frozen code the expected fixed point is the true `p(y_i = 1 | y_-i)`.
    pub fn predictor_step(&mut self, i: usize, ctx: usize, target: f64, eta: f64) {
        let q = self.q[i][ctx];
        self.q[i][ctx] = (q - eta * (q - target)).clamp(EPS, 1.0 - EPS);
    }
}

/// Exact `p(y_i = 1 | y_-i)` for every context, by enumeration over `x`.
pub fn cond_given_rest(
    px: &FiniteDistribution,
    code: &FactorizedCode,
    i: usize,
) -> Result<Vec<f64>> {
    let n = code.n_neurons();
    if n > ENUM_CAP {
        return Err(Error::SizeCap(format!("enumeration limited to n <= {ENUM_CAP}")));
    }
    let contexts = 1 << (n - 1);
    let mut num = vec![0.0; contexts];
    let mut den = vec![0.0; contexts];
    for x in 0..code.n_inputs() {
        let w = px.prob(x);
        let rest = code.rest_given_x(i, x);
        let theta = code.bernoulli(i, x);
        for ctx in 0..contexts {
            num[ctx] += w * rest[ctx] * theta;
            den[ctx] += w * rest[ctx];
        }
    }
    Ok(num
        .iter()
        .zip(&den)
        .map(|(n, d)| if *d > 0.0 { n / d } else { 0.5 })
        .collect())
}

/// Per-neuron slice of the MI variation:
/// `E_{x, y_-i} sum_{y_i} log(p(y_i|x) / p(y_i|y_-i)) dp(y_i|x)`,
/// with `p(y_i|y_-i)` computed exactly by enumeration. `dp_i[x]` perturbs
/// `p(y_i = 1 | x)` (and `-dp_i[x]` the complement).
pub fn factorized_variation(
    px: &FiniteDistribution,
    code: &FactorizedCode,
    i: usize,
    dp_i: &[f64],
) -> Result<f64> {
    if dp_i.len() != code.n_inputs() {
        return Err(Error::AlphabetMismatch {
            expected: code.n_inputs(),
            got: dp_i.len(),
        });
    }
    for (x, d) in dp_i.iter().enumerate() {
        let theta = code.bernoulli(i, x);
        if theta + d <= 0.0 || theta + d >= 1.0 {
            return Err(Error::InvalidDistribution(
                "perturbed Bernoulli parameter leaves the interior".into(),
            ));
        }
    }
    let cond = cond_given_rest(px, code, i)?;
    let mut total = 0.0;
    for x in 0..code.n_inputs() {
        let w = px.prob(x);
        let theta = code.bernoulli(i, x);
        let rest = code.rest_given_x(i, x);
        for (ctx, &p_ctx) in rest.iter().enumerate() {
            let c = cond[ctx].clamp(EPS, 1.0 - EPS);
            let g = (theta / c).ln() - ((1.0 - theta) / (1.0 - c)).ln();
            total += w * p_ctx * g * dp_i[x];
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeanfieldConfig {
    /// Logit-space ascent rate of the code.
    pub eta_code: f64,
    /// Probability-space descent rate of the lateral predictors; the fast
    /// timescale.
    pub eta_pred: f64,
    pub steps: u64,
    pub seed: u64,
    #[serde(default = "default_log_every")]
    pub log_every: u64,
}

fn default_log_every() -> u64 {
    1000
}

impl Default for MeanfieldConfig {
    fn default() -> Self {
        Self {
            eta_code: 0.1,
            eta_pred: 0.3,
            steps: 200_000,
            seed: 0,
            log_every: default_log_every(),
        }
    }
}

impl MeanfieldConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.eta_code > 0.0) || !(self.eta_pred > 0.0) {
            return Err(Error::Config("learning rates must be > 0".into()));
        }
        if self.log_every == 0 {
            return Err(Error::Config("log_every must be >= 1".into()));
        }
        Ok(())
    }
}

/// Columns of the mean-field [`TrainLog`]: fixed metrics then one entropy
/// column per neuron.
pub fn meanfield_columns(n: usize) -> Vec<String> {
    let mut cols = vec![
        "step".to_string(),
        "mi_nats".to_string(),
        "mean_predictor_gap".to_string(),
    ];
    cols.extend((0..n).map(|i| format!("neuron_{i}_entropy")));
    cols
}

/// Distributed training loop. Each step samples one `(x, y)` pair, then
/// every neuron updates from the pre-step snapshot of all parameters
/// (Jacobi-style), reading only `x`, `y_-i`, and its own state.
pub fn run_meanfield(
    px: &FiniteDistribution,
    n: usize,
    cfg: &MeanfieldConfig,
) -> Result<TrainLog> {
    cfg.validate()?;
    let mut log = TrainLog::new(meanfield_columns(n));
    if n == 0 {
        log.push(vec![0.0, 0.0, 0.0])?;
        return Ok(log);
    }
    let mut code = FactorizedCode::new(n, px.len(), cfg.seed);
    let mut pred = LateralPredictor::new(n, 0.5);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let record = |code: &FactorizedCode,
                      pred: &LateralPredictor,
                      step: u64,
                      log: &mut TrainLog|
     -> Result<()> {
        let mi = mutual_information(px, &code.joint_table()?)?;
        let gap = mean_predictor_gap(px, code, pred)?;
        let mut row = vec![step as f64, mi, gap];
        for i in 0..n {
            let p_i: f64 = (0..px.len()).map(|x| px.prob(x) * code.bernoulli(i, x)).sum();
            row.push(entropy(&FiniteDistribution::new(vec![1.0 - p_i, p_i])?));
        }
        log.push(row)
    };

    record(&code, &pred, 0, &mut log)?;
    for step in 1..=cfg.steps {
        let x = px.sample(&mut rng);
        let y = code.sample_y(x, &mut rng);
        let snapshot_code = code.clone();
        let snapshot_pred = pred.clone();
        for i in 0..n {
            let ctx = context_index(&y, i);
            let target = snapshot_code.bernoulli(i, x);
            pred.predictor_step(i, ctx, target, cfg.eta_pred);
            let q = snapshot_pred.predict(i, ctx);
            code.code_step(i, x, q, cfg.eta_code);
        }
        if step % cfg.log_every == 0 || step == cfg.steps {
            record(&code, &pred, step, &mut log)?;
        }
    }
    Ok(log)
}

/// Context-weighted mean absolute gap between the predictors and the exact
/// conditionals `p(y_i = 1 | y_-i)`.
pub fn mean_predictor_gap(
    px: &FiniteDistribution,
    code: &FactorizedCode,
    pred: &LateralPredictor,
) -> Result<f64> {
    let n = code.n_neurons();
    let mut total = 0.0;
    for i in 0..n {
        let cond = cond_given_rest(px, code, i)?;
        // marginal weight of each context
        let mut weight = vec![0.0; cond.len()];
        for x in 0..code.n_inputs() {
            let w = px.prob(x);
            for (ctx, r) in code.rest_given_x(i, x).iter().enumerate() {
                weight[ctx] += w * r;
            }
        }
        total += cond
            .iter()
            .enumerate()
            .map(|(ctx, c)| weight[ctx] * (pred.predict(i, ctx) - c).abs())
            .sum::<f64>();
    }
    Ok(total / n as f64)
}

/// Lifts one neuron's Bernoulli perturbation `dp(y_i = 1 | x)` to the joint
/// table: `dp(y|x) = p(y_-i|x) * (+/- dp_i[x])`, signed by bit `i` of `y`.
pub fn joint_perturbation(
    code: &FactorizedCode,
    i: usize,
    dp_i: &[f64],
) -> crate::prob::TablePerturbation {
    let n = code.n_neurons();
    let deltas = (0..code.n_inputs())
        .map(|x| {
            let rest = code.rest_given_x(i, x);
            (0..(1usize << n))
                .map(|m| {
                    let ctx = {
                        let bits: Vec<u8> = (0..n).map(|j| ((m >> j) & 1) as u8).collect();
                        context_index(&bits, i)
                    };
                    let sign = if (m >> i) & 1 == 1 { 1.0 } else { -1.0 };
                    rest[ctx] * sign * dp_i[x]
                })
                .collect()
        })
        .collect();
    crate::prob::TablePerturbation::new(deltas).expect("rows sum to zero by construction")
}

/// Joint image of a composite perturbation touching every neuron at once:
/// the sum of the per-neuron lifts (first order, cross terms dropped).
pub fn composite_perturbation(
    code: &FactorizedCode,
    per_neuron: &[Vec<f64>],
) -> crate::prob::TablePerturbation {
    let n = code.n_neurons();
    let ny = 1usize << n;
    let mut deltas = vec![vec![0.0; ny]; code.n_inputs()];
    for (i, dp_i) in per_neuron.iter().enumerate() {
        let lift = joint_perturbation(code, i, dp_i);
        for (row, lrow) in deltas.iter_mut().zip(lift.deltas()) {
            for (d, l) in row.iter_mut().zip(lrow) {
                *d += l;
            }
        }
    }
    crate::prob::TablePerturbation::new(deltas).expect("sum of zero-sum rows")
}

/// Seeded interior instance for decomposition checks: an input distribution,
/// a factorized code, and a small per-neuron perturbation of every
/// `p(y_i = 1 | x)`.
pub fn random_factorized_instance<R: rand::Rng>(
    rng: &mut R,
    n: usize,
    nx: usize,
) -> (FiniteDistribution, FactorizedCode, Vec<Vec<f64>>) {
    let params: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..nx).map(|_| 0.1 + 0.8 * rng.random::<f64>()).collect())
        .collect();
    let code = FactorizedCode::from_parameters(params).expect("interior parameters");
    let px = crate::testutil::random_distribution(rng, nx);
    let per_neuron = (0..n)
        .map(|_| (0..nx).map(|_| 1e-4 * (rng.random::<f64>() - 0.5)).collect())
        .collect();
    (px, code, per_neuron)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::{mi_variation, TablePerturbation};
    use rand::{Rng, SeedableRng};

    #[test]
    fn joint_single_neuron_is_the_bernoulli() {
        let code = FactorizedCode::from_parameters(vec![vec![0.3]]).unwrap();
        let joint = code.joint_from_factors(0).unwrap();
        assert!((joint.prob(0) - 0.7).abs() < 1e-12);
        assert!((joint.prob(1) - 0.3).abs() < 1e-12);
    }

    #[test]
    fn joint_two_fair_neurons_is_uniform() {
        let code = FactorizedCode::from_parameters(vec![vec![0.5], vec![0.5]]).unwrap();
        let joint = code.joint_from_factors(0).unwrap();
        for m in 0..4 {
            assert!((joint.prob(m) - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn joint_matches_direct_product_loop() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let params: Vec<Vec<f64>> = (0..3)
            .map(|_| vec![0.05 + 0.9 * rng.random::<f64>()])
            .collect();
        let code = FactorizedCode::from_parameters(params.clone()).unwrap();
        let joint = code.joint_from_factors(0).unwrap();
        for m in 0..8usize {
            let mut p = 1.0;
            for (i, row) in params.iter().enumerate() {
                p *= if (m >> i) & 1 == 1 { row[0] } else { 1.0 - row[0] };
            }
            assert!((joint.prob(m) - p).abs() < 1e-12);
        }
    }

    #[test]
    fn variation_zero_for_null_perturbation() {
        let px = FiniteDistribution::uniform(2);
        let code =
            FactorizedCode::from_parameters(vec![vec![0.4, 0.7], vec![0.6, 0.2]]).unwrap();
        let v = factorized_variation(&px, &code, 0, &[0.0, 0.0]).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn per_neuron_variation_equals_joint_variation_n2() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let params: Vec<Vec<f64>> = (0..2)
                .map(|_| (0..3).map(|_| 0.1 + 0.8 * rng.random::<f64>()).collect())
                .collect();
            let code = FactorizedCode::from_parameters(params).unwrap();
            let px = crate::testutil::random_distribution(&mut rng, 3);
            let i = rng.random_range(0..2);
            let dp_i: Vec<f64> = (0..3).map(|_| 1e-4 * (rng.random::<f64>() - 0.5)).collect();
            let per_neuron = factorized_variation(&px, &code, i, &dp_i).unwrap();
            let dp = joint_perturbation(&code, i, &dp_i);
            let joint = mi_variation(&px, &code.joint_table().unwrap(), &dp).unwrap();
            assert!(
                (per_neuron - joint).abs() < 1e-10,
                "per-neuron {per_neuron} vs joint {joint}"
            );
        }
    }

    #[test]
    fn variation_matches_finite_difference_n3() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let params: Vec<Vec<f64>> = (0..3)
            .map(|_| (0..3).map(|_| 0.15 + 0.7 * rng.random::<f64>()).collect())
            .collect();
        let code = FactorizedCode::from_parameters(params.clone()).unwrap();
        let px = crate::testutil::random_distribution(&mut rng, 3);
        let i = 1;
        let dp_i: Vec<f64> = (0..3).map(|_| 1e-5 * (rng.random::<f64>() - 0.5)).collect();
        let analytic = factorized_variation(&px, &code, i, &dp_i).unwrap();

        let mi_at = |shift: f64| {
            let mut p = params.clone();
            for (x, d) in dp_i.iter().enumerate() {
                p[i][x] += shift * d;
            }
            let c = FactorizedCode::from_parameters(p).unwrap();
            mutual_information(&px, &c.joint_table().unwrap()).unwrap()
        };
        let numeric = (mi_at(1.0) - mi_at(-1.0)) / 2.0;
        let denom = numeric.abs().max(1e-10);
        assert!(
            (analytic - numeric).abs() / denom < 1e-4,
            "analytic {analytic} numeric {numeric}"
        );
    }

    #[test]
    fn predictor_step_zero_at_target() {
        let mut pred = LateralPredictor::new(2, 0.7);
        pred.predictor_step(0, 1, 0.7, 0.5);
        assert_eq!(pred.predict(0, 1), 0.7);
    }

    #[test]
    fn predictor_converges_to_constant_target() {
        let mut pred = LateralPredictor::new(1, 0.1);
        for _ in 0..500 {
            pred.predictor_step(0, 0, 0.7, 0.05);
        }
        assert!((pred.predict(0, 0) - 0.7).abs() < 0.01);
    }

    #[test]
    fn predictor_tracks_exact_conditional_with_frozen_code() {
        let px = FiniteDistribution::uniform(4);
        let code = FactorizedCode::from_parameters(vec![
            vec![0.8, 0.2, 0.7, 0.3],
            vec![0.6, 0.6, 0.1, 0.9],
        ])
        .unwrap();
        let cond0 = cond_given_rest(&px, &code, 0).unwrap();
        let mut pred = LateralPredictor::new(2, 0.5);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100_000 {
            let x = px.sample(&mut rng);
            let y = code.sample_y(x, &mut rng);
            for i in 0..2 {
                let ctx = context_index(&y, i);
                pred.predictor_step(i, ctx, code.bernoulli(i, x), 0.02);
            }
        }
        for (ctx, &c) in cond0.iter().enumerate() {
            let gap = (pred.predict(0, ctx) - c).abs();
            assert!(gap < 0.02, "ctx {ctx} gap {gap}");
        }
    }

    #[test]
    fn expected_predictor_step_vanishes_at_exact_conditional() {
        // frozen code: E[q - p(y_i|x)] over x, y_-i ~ p is zero exactly at
        // q = p(y_i | y_-i)
        let px = FiniteDistribution::new(vec![0.3, 0.7]).unwrap();
        let code =
            FactorizedCode::from_parameters(vec![vec![0.8, 0.3], vec![0.4, 0.9]]).unwrap();
        let i = 0;
        let cond = cond_given_rest(&px, &code, i).unwrap();
        for ctx in 0..2usize {
            // E over x of p(ctx | x) (q - theta(x)), normalized by p(ctx)
            let mut expected = 0.0;
            for x in 0..2 {
                let w = px.prob(x) * code.rest_given_x(i, x)[ctx];
                expected += w * (cond[ctx] - code.bernoulli(i, x));
            }
            assert!(expected.abs() < 1e-12, "ctx {ctx}: {expected}");
        }
    }

    #[test]
    fn code_step_zero_when_matched_by_predictor() {
        let mut code = FactorizedCode::from_parameters(vec![vec![0.42]]).unwrap();
        code.code_step(0, 0, 0.42, 0.5);
        assert!((code.bernoulli(0, 0) - 0.42).abs() < 1e-12);
    }

    #[test]
    fn single_neuron_code_step_reduces_to_chase_p_step() {
        let theta = 0.37;
        let q = 0.61;
        let mut code = FactorizedCode::from_parameters(vec![vec![theta]]).unwrap();
        code.code_step(0, 0, q, 0.05);

        let mut chase =
            crate::chase::ChaseState::from_probabilities(&[vec![1.0 - theta, theta]], &[1.0 - q, q]);
        chase.p_step(0, 0.05);
        let chase_theta = chase.code().row(0).prob(1);
        assert!(
            (code.bernoulli(0, 0) - chase_theta).abs() < 1e-12,
            "{} vs {}",
            code.bernoulli(0, 0),
            chase_theta
        );
    }

    #[test]
    fn code_step_is_local_to_the_neuron() {
        // the update for neuron 0 must be bitwise identical no matter what
        // the other neuron's parameters look like
        let mut a = FactorizedCode::from_parameters(vec![vec![0.3, 0.6], vec![0.5, 0.5]]).unwrap();
        let mut b = FactorizedCode::from_parameters(vec![vec![0.3, 0.6], vec![0.01, 0.99]]).unwrap();
        a.code_step(0, 1, 0.44, 0.2);
        b.code_step(0, 1, 0.44, 0.2);
        assert_eq!(a.logits[0][1].to_bits(), b.logits[0][1].to_bits());
    }

    #[test]
    fn non_factorized_joint_rejects_independent_perturbation() {
        // executable form of the factorization characterization: for a
        // correlated joint p(a,b), a change dp(a|b) chosen independently of b
        // necessarily moves p(b|a); for a product joint it does not.
        let check = |joint: [[f64; 2]; 2]| -> f64 {
            let cond_ba = |j: &[[f64; 2]; 2], a: usize, b: usize| {
                j[a][b] / (j[a][0] + j[a][1])
            };
            // uniform delta on p(a|b): move mass e from a=0 to a=1 in every b
            let e = 1e-6;
            let mut perturbed = joint;
            for b in 0..2 {
                let pb = joint[0][b] + joint[1][b];
                perturbed[0][b] -= e * pb;
                perturbed[1][b] += e * pb;
            }
            let mut max_change: f64 = 0.0;
            for a in 0..2 {
                for b in 0..2 {
                    max_change = max_change
                        .max((cond_ba(&perturbed, a, b) - cond_ba(&joint, a, b)).abs());
                }
            }
            max_change
        };
        let correlated = [[0.4, 0.1], [0.1, 0.4]];
        let product = [[0.35, 0.35], [0.15, 0.15]];
        assert!(check(correlated) > 1e-8);
        assert!(check(product) < 1e-14);
    }

    #[test]
    fn run_meanfield_n0_logs_zero_mi() {
        let px = FiniteDistribution::uniform(2);
        let log = run_meanfield(&px, 0, &MeanfieldConfig::default()).unwrap();
        assert_eq!(log.len(), 1);
        assert_eq!(log.rows()[0][1], 0.0);
    }
}
