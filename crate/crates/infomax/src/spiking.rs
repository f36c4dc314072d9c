//! Continuous-time spiking implementation of the local learning rule.
//!
//! Each neuron keeps a log-probability state `log p(y_i=1|x_{1:t})`. Per
//! time step it performs three operations: an update (add the learned
//! log-likelihood-ratio of the current stimulus), a squash (contract toward
//! the prior and clamp into the firing-rate band), and an optimize step (the
//! chase against a linear lateral predictor, gated by the previous step's
//! spike probability or by the previous spike itself). Spikes are
//! independent Bernoulli draws at the instantaneous rate, the discrete-time
//! face of an inhomogeneous Poisson process.
//!
//! ```
//! use infomax::env::build_factorized_env;
//! use infomax::spiking::{train, SpikingNetwork, SpikingNetworkConfig, SpikingTrainConfig};
//!
//! let world = build_factorized_env(2, 20, 7).unwrap();
//! let net_cfg: SpikingNetworkConfig =
//!     serde_json::from_str(r#"{"n": 2, "nx": 4, "seed": 0}"#).unwrap();
//! let mut net = SpikingNetwork::new(net_cfg).unwrap();
//! let train_cfg = SpikingTrainConfig { events: 400, log_every: 100, env_seed: 1 };
//! let log = train(&mut net, &world, &train_cfg).unwrap();
//! // mean rates stay inside the configured band, here [0.5, 100] Hz
//! let rate = log.last("mean_rate_hz").unwrap();
//! assert!((0.5..=100.0).contains(&rate));
//! ```

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::env::{EnvironmentSpec, EventStream};
use crate::error::{Error, Result};
use crate::log::TrainLog;
use crate::prob::EPS;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpikingNetworkConfig {
    /// Neuron count.
    pub n: usize,
    /// Stimulus alphabet size.
    pub nx: usize,
    /// Time step in seconds.
    #[serde(default = "default_dt")]
    pub dt: f64,
    /// Minimum instantaneous rate, Hz.
    #[serde(default = "default_r_min")]
    pub r_min: f64,
    /// Maximum instantaneous rate, Hz.
    #[serde(default = "default_r_max")]
    pub r_max: f64,
    /// Spontaneous rate: the squash fixed point, Hz.
    #[serde(default = "default_prior_rate")]
    pub prior_rate: f64,
    /// Forgetting exponent in (0, 1]; 1 disables the contraction.
    #[serde(default = "default_gamma")]
    pub gamma: f64,
    #[serde(default = "default_eta_alpha")]
    pub eta_alpha: f64,
    #[serde(default = "default_eta_w")]
    pub eta_w: f64,
    /// Gate the alpha update with the previous-step spike bit (the
    /// biologically available one-sample estimate of the previous-step
    /// probability) instead of the probability itself.
    #[serde(default)]
    pub spike_gated: bool,
    pub seed: u64,
}

fn default_dt() -> f64 {
    1e-3
}
fn default_r_min() -> f64 {
    0.5
}
fn default_r_max() -> f64 {
    100.0
}
fn default_prior_rate() -> f64 {
    5.0
}
fn default_gamma() -> f64 {
    0.99
}
fn default_eta_alpha() -> f64 {
    0.05
}
fn default_eta_w() -> f64 {
    // the predictor error and update are both scaled by dt, so rates this
    // large still move q by only ~ eta_w * dt^2 per step
    50_000.0
}

impl SpikingNetworkConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.nx == 0 {
            return Err(Error::Config("n and nx must be >= 1".into()));
        }
        if !(self.r_min > 0.0 && self.r_min < self.r_max) {
            return Err(Error::Config("need 0 < r_min < r_max".into()));
        }
        if self.r_max * self.dt > 0.1 {
            return Err(Error::Config(
                "r_max * dt must stay <= 0.1 (small spike probability regime)".into(),
            ));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::Config("gamma must be in (0, 1]".into()));
        }
        if !(self.prior_rate >= self.r_min && self.prior_rate <= self.r_max) {
            return Err(Error::Config("prior_rate must lie in [r_min, r_max]".into()));
        }
        if self.eta_alpha < 0.0 || self.eta_w < 0.0 {
            return Err(Error::Config("learning rates must be >= 0".into()));
        }
        Ok(())
    }
}

/// One representation neuron: log-probability state, trainable log
/// likelihood-ratios, and the linear lateral predictor's weights.
#[derive(Debug, Clone)]
pub struct SpikingNeuron {
    /// Current `log p(y_i=1 | x_{1:t})`.
    pub log_p: f64,
    /// `log alpha_i(x)` per stimulus symbol.
    pub log_alpha: Vec<f64>,
    /// Lateral weights over the other neurons' spike bits (Hz per spike).
    pub w: Vec<f64>,
    /// Lateral bias (Hz).
    pub b: f64,
    /// Squash fixed point `log(prior_rate * dt)`.
    pub prior_log_p: f64,
}

impl SpikingNeuron {
    /// Evidence update: `log_p += log alpha_i(x_t)`. Clamping is deferred to
    /// the squash.
    pub fn update(&mut self, x_t: usize) {
        self.log_p += self.log_alpha[x_t];
    }

    /// Squash: geometric contraction toward the prior in log space, then a
    /// hard clamp into `[log(r_min dt), log(r_max dt)]`. Monotone, fixes the
    /// prior exactly, and limits the range.
    pub fn squash(&mut self, gamma: f64, log_lo: f64, log_hi: f64) {
        self.log_p = self.prior_log_p + gamma * (self.log_p - self.prior_log_p);
        self.log_p = self.log_p.clamp(log_lo, log_hi);
    }

    /// Spike probability this step.
    pub fn prob(&self) -> f64 {
        self.log_p.exp()
    }

    /// Linear lateral prediction `q_i(y_-i) = max((w . y_-i + b) dt, EPS)`.
    pub fn lateral_predict(&self, y_minus_i: &[u8], dt: f64) -> f64 {
        let drive: f64 = self
            .w
            .iter()
            .zip(y_minus_i)
            .map(|(w, &y)| w * y as f64)
            .sum::<f64>()
            + self.b;
        (drive * dt).max(EPS)
    }

    /// Delta rule on the linear predictor toward this step's post-squash
    /// probability.
    pub fn predictor_learn(&mut self, y_minus_i: &[u8], p_i_now: f64, eta_w: f64, dt: f64) {
        let err = self.lateral_predict(y_minus_i, dt) - p_i_now;
        for (w, &y) in self.w.iter_mut().zip(y_minus_i) {
            *w -= eta_w * err * y as f64 * dt;
        }
        self.b -= eta_w * err * dt;
    }

    /// Chase ascent of `log alpha_i(x_t)`, gated by the previous step's
    /// spike probability (exact mode) or spike bit (spike-gated mode).
    pub fn alpha_learn(&mut self, x_t: usize, gate: f64, p_now: f64, q_i: f64, eta_alpha: f64) {
        self.log_alpha[x_t] += eta_alpha * gate * (p_now / q_i.max(EPS)).ln();
    }
}

/// A sampled perceptual event with its full spike record.
#[derive(Debug, Clone)]
pub struct EventTrace {
    pub latent: usize,
    pub stimuli: Vec<usize>,
    /// `spikes[t][i]`.
    pub spikes: Vec<Vec<u8>>,
    /// Pre-sampling probabilities `probs[t][i]`.
    pub probs: Vec<Vec<f64>>,
}

impl EventTrace {
    pub fn spike_counts(&self) -> Vec<u16> {
        let n = self.spikes.first().map_or(0, Vec::len);
        let mut counts = vec![0u16; n];
        for step in &self.spikes {
            for (c, &s) in counts.iter_mut().zip(step) {
                *c += s as u16;
            }
        }
        counts
    }

    /// CSV: `t, x_t`, then per-neuron probability and spike columns.
    pub fn to_csv(&self) -> String {
        let n = self.spikes.first().map_or(0, Vec::len);
        let mut header = vec!["t".to_string(), "x_t".to_string()];
        for i in 0..n {
            header.push(format!("prob_{i}"));
            header.push(format!("spike_{i}"));
        }
        let mut out = header.join(",") + "\n";
        for t in 0..self.stimuli.len() {
            let mut cells = vec![t.to_string(), self.stimuli[t].to_string()];
            for i in 0..n {
                cells.push(crate::log::format_float(self.probs[t][i]));
                cells.push(self.spikes[t][i].to_string());
            }
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// The population. One named random stream per neuron, derived from the run
/// seed, so traces do not depend on evaluation order.
#[derive(Debug, Clone)]
pub struct SpikingNetwork {
    cfg: SpikingNetworkConfig,
    neurons: Vec<SpikingNeuron>,
    rngs: Vec<ChaCha8Rng>,
    prev_p: Vec<f64>,
    prev_spikes: Vec<u8>,
}

/// What one step produced, plus the per-neuron predictor residuals.
#[derive(Debug, Clone)]
pub struct StepRecord {
    pub probs: Vec<f64>,
    pub spikes: Vec<u8>,
    pub predictor_gap: f64,
}

impl SpikingNetwork {
    pub fn new(cfg: SpikingNetworkConfig) -> Result<Self> {
        cfg.validate()?;
        let prior_log_p = (cfg.prior_rate * cfg.dt).ln();
        let mut init_rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa02bdbf7bb3c0a7);
        let neurons = (0..cfg.n)
            .map(|_| SpikingNeuron {
                log_p: prior_log_p,
                log_alpha: (0..cfg.nx)
                    .map(|_| 0.1 * (rand::Rng::random::<f64>(&mut init_rng) - 0.5))
                    .collect(),
                w: vec![0.0; cfg.n - 1],
                b: cfg.prior_rate,
                prior_log_p,
            })
            .collect();
        let rngs = (0..cfg.n)
            .map(|i| ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x9e3779b9 * (i as u64 + 1))))
            .collect();
        let prior_p = (cfg.prior_rate * cfg.dt).min(1.0);
        Ok(Self {
            prev_p: vec![prior_p; cfg.n],
            prev_spikes: vec![0; cfg.n],
            neurons,
            rngs,
            cfg,
        })
    }

    pub fn config(&self) -> &SpikingNetworkConfig {
        &self.cfg
    }

    pub fn neuron(&self, i: usize) -> &SpikingNeuron {
        &self.neurons[i]
    }

    /// Overwrites neuron `i`'s log likelihood-ratio table, e.g. with the
    /// environment's true ratios for a reference run.
    pub fn set_log_alpha(&mut self, i: usize, log_alpha: Vec<f64>) {
        assert_eq!(log_alpha.len(), self.cfg.nx);
        self.neurons[i].log_alpha = log_alpha;
    }

    pub fn rate_bounds_log(&self) -> (f64, f64) {
        (
            (self.cfg.r_min * self.cfg.dt).ln(),
            (self.cfg.r_max * self.cfg.dt).ln(),
        )
    }

    /// Resets every neuron's state (not its parameters) to the spontaneous
    /// prior, as at the start of an event.
    pub fn reset_event(&mut self) {
        let prior_p = (self.cfg.prior_rate * self.cfg.dt).min(1.0);
        for neuron in &mut self.neurons {
            neuron.log_p = neuron.prior_log_p;
        }
        self.prev_p = vec![prior_p; self.cfg.n];
        self.prev_spikes = vec![0; self.cfg.n];
    }

    /// One time step: update, squash, and sample every neuron, then (when
    /// `learn` is set) run the lateral prediction and both learning rules.
    /// Each neuron reads only `x_t`, its own fields, and the other neurons'
    /// spike bits from this step.
    pub fn step(&mut self, x_t: usize, learn: bool) -> StepRecord {
        let (log_lo, log_hi) = self.rate_bounds_log();
        let n = self.cfg.n;
        let mut probs = vec![0.0; n];
        let mut spikes = vec![0u8; n];
        for i in 0..n {
            let neuron = &mut self.neurons[i];
            neuron.update(x_t);
            neuron.squash(self.cfg.gamma, log_lo, log_hi);
            probs[i] = neuron.prob();
            spikes[i] = u8::from(rand::Rng::random::<f64>(&mut self.rngs[i]) < probs[i]);
        }
        let mut gap = 0.0;
        if learn {
            for i in 0..n {
                let context = spike_context(&spikes, i);
                let q_i = self.neurons[i].lateral_predict(&context, self.cfg.dt);
                gap += (q_i - probs[i]).abs();
                let gate = if self.cfg.spike_gated {
                    self.prev_spikes[i] as f64
                } else {
                    self.prev_p[i]
                };
                self.neurons[i].predictor_learn(&context, probs[i], self.cfg.eta_w, self.cfg.dt);
                self.neurons[i].alpha_learn(x_t, gate, probs[i], q_i, self.cfg.eta_alpha);
            }
        }
        self.prev_p.clone_from(&probs);
        self.prev_spikes.clone_from(&spikes);
        StepRecord {
            probs,
            spikes,
            predictor_gap: gap / n as f64,
        }
    }

    /// Runs one event (resetting state first) and records the full trace.
    pub fn run_event(&mut self, latent: usize, stimuli: &[usize], learn: bool) -> EventTrace {
        self.reset_event();
        let mut spikes = Vec::with_capacity(stimuli.len());
        let mut probs = Vec::with_capacity(stimuli.len());
        for &x in stimuli {
            let rec = self.step(x, learn);
            spikes.push(rec.spikes);
            probs.push(rec.probs);
        }
        EventTrace {
            latent,
            stimuli: stimuli.to_vec(),
            spikes,
            probs,
        }
    }
}

fn spike_context(spikes: &[u8], i: usize) -> Vec<u8> {
    spikes
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, &s)| s)
        .collect()
}

/// Plug-in mutual information (nats) between the latent labels and the spike
/// count vectors, from empirical joint frequencies.
pub fn plugin_mi(pairs: &[(usize, Vec<u16>)]) -> f64 {
    if pairs.is_empty() {
        return 0.0;
    }
    let total = pairs.len() as f64;
    // ordered maps so the summation order (and thus the last bit of the
    // result) is independent of insertion order
    let mut joint: BTreeMap<(usize, &[u16]), f64> = BTreeMap::new();
    let mut pz: BTreeMap<usize, f64> = BTreeMap::new();
    let mut pc: BTreeMap<&[u16], f64> = BTreeMap::new();
    for (z, counts) in pairs {
        *joint.entry((*z, counts.as_slice())).or_default() += 1.0;
        *pz.entry(*z).or_default() += 1.0;
        *pc.entry(counts.as_slice()).or_default() += 1.0;
    }
    joint
        .iter()
        .map(|((z, c), &nzc)| {
            let pj = nzc / total;
            pj * (pj / (pz[z] / total * pc[c] / total)).ln()
        })
        .sum()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpikingTrainConfig {
    pub events: u64,
    /// Events per metric row; the plug-in MI is computed over this window.
    #[serde(default = "default_window")]
    pub log_every: u64,
    /// Environment stream seed (the network has its own seed).
    pub env_seed: u64,
}

fn default_window() -> u64 {
    2000
}

impl SpikingTrainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.log_every == 0 {
            return Err(Error::Config("log_every must be >= 1".into()));
        }
        Ok(())
    }
}

/// Columns of the spiking [`TrainLog`].
pub const SPIKING_COLUMNS: [&str; 4] = ["event", "mi_plugin_nats", "mean_predictor_gap", "mean_rate_hz"];

/// Trains on a stream of events, logging windowed plug-in MI between the
/// latent and the event spike counts.
pub fn train(
    net: &mut SpikingNetwork,
    spec: &EnvironmentSpec,
    cfg: &SpikingTrainConfig,
) -> Result<TrainLog> {
    cfg.validate()?;
    spec.validate()?;
    let mut stream = EventStream::new(spec, cfg.env_seed);
    let mut log = TrainLog::new(SPIKING_COLUMNS.to_vec());
    let mut window: Vec<(usize, Vec<u16>)> = Vec::new();
    let mut gap_sum = 0.0;
    let mut spike_sum = 0u64;
    let mut step_sum = 0u64;

    for event in 1..=cfg.events {
        let (z, xs) = stream.next_event();
        net.reset_event();
        let mut counts = vec![0u16; net.cfg.n];
        for &x in &xs {
            let rec = net.step(x, true);
            gap_sum += rec.predictor_gap;
            step_sum += 1;
            for (c, &s) in counts.iter_mut().zip(&rec.spikes) {
                *c += s as u16;
                spike_sum += s as u64;
            }
        }
        window.push((z, counts));

        if event % cfg.log_every == 0 || event == cfg.events {
            let mi = plugin_mi(&window);
            let mean_gap = gap_sum / step_sum.max(1) as f64;
            let mean_rate =
                spike_sum as f64 / (step_sum.max(1) as f64 * net.cfg.n as f64 * net.cfg.dt);
            log.push(vec![event as f64, mi, mean_gap, mean_rate])?;
            window.clear();
            gap_sum = 0.0;
            spike_sum = 0;
            step_sum = 0;
        }
    }
    if log.is_empty() {
        log.push(vec![0.0, 0.0, 0.0, 0.0])?;
    }
    Ok(log)
}

/// Plug-in MI of a frozen network over `events` evaluation events (no
/// learning).
pub fn evaluate_mi(
    net: &mut SpikingNetwork,
    spec: &EnvironmentSpec,
    events: u64,
    env_seed: u64,
) -> f64 {
    let mut stream = EventStream::new(spec, env_seed);
    let pairs: Vec<(usize, Vec<u16>)> = (0..events)
        .map(|_| {
            let (z, xs) = stream.next_event();
            let trace = net.run_event(z, &xs, false);
            (z, trace.spike_counts())
        })
        .collect();
    plugin_mi(&pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_cfg(n: usize, nx: usize) -> SpikingNetworkConfig {
        SpikingNetworkConfig {
            n,
            nx,
            dt: 1e-3,
            r_min: 0.5,
            r_max: 100.0,
            prior_rate: 5.0,
            gamma: 0.99,
            eta_alpha: 0.05,
            eta_w: 5.0,
            spike_gated: false,
            seed: 0,
        }
    }

    #[test]
    fn update_is_additive_in_log_space() {
        let mut net = SpikingNetwork::new(test_cfg(1, 2)).unwrap();
        net.set_log_alpha(0, vec![0.0, 2.0_f64.ln()]);
        let before = net.neuron(0).log_p;
        net.neurons[0].update(0);
        assert_eq!(net.neuron(0).log_p, before);
        net.neurons[0].update(1);
        net.neurons[0].update(1);
        // alpha = 2 applied twice quadruples p before any squash
        assert!((net.neuron(0).log_p - (before + 4.0_f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn squash_fixes_the_prior() {
        let cfg = test_cfg(1, 2);
        let mut net = SpikingNetwork::new(cfg).unwrap();
        let (lo, hi) = net.rate_bounds_log();
        let prior = net.neuron(0).prior_log_p;
        for gamma in [0.5, 0.9, 1.0] {
            net.neurons[0].log_p = prior;
            net.neurons[0].squash(gamma, lo, hi);
            assert_eq!(net.neuron(0).log_p, prior);
        }
    }

    #[test]
    fn squash_identity_when_gamma_one_inside_bounds() {
        let mut net = SpikingNetwork::new(test_cfg(1, 2)).unwrap();
        let (lo, hi) = net.rate_bounds_log();
        let v = (20.0 * 1e-3_f64).ln();
        net.neurons[0].log_p = v;
        net.neurons[0].squash(1.0, lo, hi);
        assert_eq!(net.neuron(0).log_p, v);
    }

    #[test]
    fn squash_decays_geometrically_to_prior() {
        let mut net = SpikingNetwork::new(test_cfg(1, 2)).unwrap();
        let (lo, hi) = net.rate_bounds_log();
        let prior = net.neuron(0).prior_log_p;
        let start = prior + 1.0;
        net.neurons[0].log_p = start;
        for k in 1..=10 {
            net.neurons[0].squash(0.9, lo, hi);
            let expected = prior + 0.9_f64.powi(k);
            assert!((net.neuron(0).log_p - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn lateral_predict_bias_only_without_context_spikes() {
        let net = SpikingNetwork::new(test_cfg(3, 2)).unwrap();
        let q = net.neuron(0).lateral_predict(&[0, 0], 1e-3);
        assert!((q - 5.0 * 1e-3).abs() < 1e-12);
    }

    #[test]
    fn predictor_learn_zero_update_at_match() {
        let mut net = SpikingNetwork::new(test_cfg(2, 2)).unwrap();
        let q = net.neuron(0).lateral_predict(&[1], 1e-3);
        let (w0, b0) = (net.neuron(0).w.clone(), net.neuron(0).b);
        net.neurons[0].predictor_learn(&[1], q, 5.0, 1e-3);
        assert_eq!(net.neuron(0).w, w0);
        assert_eq!(net.neuron(0).b, b0);
    }

    #[test]
    fn predictor_bias_converges_to_constant_target() {
        let mut net = SpikingNetwork::new(test_cfg(2, 2)).unwrap();
        let dt = 1e-3;
        let target = 0.02;
        for _ in 0..200_000 {
            net.neurons[0].predictor_learn(&[0], target, 50.0, dt);
        }
        assert!((net.neuron(0).b * dt - target).abs() < 1e-4);
    }

    #[test]
    fn alpha_learn_zero_when_matched_or_ungated() {
        let mut net = SpikingNetwork::new(test_cfg(1, 2)).unwrap();
        let la0 = net.neuron(0).log_alpha.clone();
        net.neurons[0].alpha_learn(1, 1.0, 0.01, 0.01, 0.5);
        assert_eq!(net.neuron(0).log_alpha, la0, "p_now == q_i");
        net.neurons[0].alpha_learn(1, 0.0, 0.05, 0.01, 0.5);
        assert_eq!(net.neuron(0).log_alpha, la0, "no previous spike");
    }

    #[test]
    fn alpha_learn_matches_symbolic_integrand() {
        let mut net = SpikingNetwork::new(test_cfg(1, 3)).unwrap();
        let (x, gate, p_now, q, eta) = (2, 0.004, 0.03, 0.006, 0.7);
        let before = net.neuron(0).log_alpha[x];
        net.neurons[0].alpha_learn(x, gate, p_now, q, eta);
        let expected = eta * gate * (p_now / q).ln();
        assert!(((net.neuron(0).log_alpha[x] - before) - expected).abs() < 1e-10);
    }

    #[test]
    fn spike_rate_matches_bernoulli_band() {
        let mut net = SpikingNetwork::new(test_cfg(1, 1)).unwrap();
        // pin p at the prior: alpha = 1, gamma contraction is a no-op at prior
        net.set_log_alpha(0, vec![0.0]);
        let p = 5.0 * 1e-3;
        let trials = 200_000u64;
        let mut spikes = 0u64;
        for _ in 0..trials {
            let rec = net.step(0, false);
            spikes += rec.spikes[0] as u64;
        }
        let emp = spikes as f64 / trials as f64;
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        assert!((emp - p).abs() < 3.0 * sigma, "emp {emp} vs {p}");
    }

    #[test]
    fn rate_bounds_hold_after_every_squash() {
        let mut net = SpikingNetwork::new(test_cfg(2, 3)).unwrap();
        // large ratios to force clamping in both directions
        net.set_log_alpha(0, vec![2.0, -2.0, 0.5]);
        net.set_log_alpha(1, vec![-1.5, 1.5, 0.0]);
        let cfg = net.config().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..5000 {
            let x = rand::Rng::random_range(&mut rng, 0..3);
            let rec = net.step(x, true);
            for &p in &rec.probs {
                let rate = p / cfg.dt;
                assert!(rate >= cfg.r_min - 1e-9 && rate <= cfg.r_max + 1e-9);
            }
        }
    }

    #[test]
    fn no_learning_run_leaves_parameters_bit_identical() {
        let mut net = SpikingNetwork::new(test_cfg(3, 2)).unwrap();
        let before: Vec<SpikingNeuron> = net.neurons.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let x = rand::Rng::random_range(&mut rng, 0..2);
            net.step(x, false);
        }
        for (a, b) in before.iter().zip(&net.neurons) {
            assert_eq!(a.log_alpha, b.log_alpha);
            assert_eq!(a.w, b.w);
            assert_eq!(a.b, b.b);
        }
    }

    #[test]
    fn uninformative_stream_relaxes_to_prior_rate() {
        let mut net = SpikingNetwork::new(test_cfg(1, 1)).unwrap();
        net.set_log_alpha(0, vec![0.0]);
        net.neurons[0].log_p = (90.0 * 1e-3_f64).ln();
        for _ in 0..2000 {
            net.step(0, false);
        }
        let prior_p = 5.0 * 1e-3;
        assert!((net.neuron(0).prob() - prior_p).abs() / prior_p < 1e-6);
    }

    #[test]
    fn coincidence_rate_is_product_of_rates() {
        let mut net = SpikingNetwork::new(test_cfg(2, 1)).unwrap();
        net.set_log_alpha(0, vec![0.0]);
        net.set_log_alpha(1, vec![0.0]);
        let p = 5.0 * 1e-3;
        let trials = 1_000_000u64;
        let mut both = 0u64;
        for _ in 0..trials {
            let rec = net.step(0, false);
            if rec.spikes[0] == 1 && rec.spikes[1] == 1 {
                both += 1;
            }
        }
        let expect = p * p;
        let sigma = (expect * (1.0 - expect) / trials as f64).sqrt();
        assert!(
            ((both as f64 / trials as f64) - expect).abs() < 3.0 * sigma + 1e-9,
            "coincidence {both} over {trials}"
        );
    }

    #[test]
    fn plugin_mi_of_perfect_code_is_entropy() {
        let pairs: Vec<(usize, Vec<u16>)> = (0..1000)
            .map(|k| (k % 2, vec![(k % 2) as u16 * 10]))
            .collect();
        assert!((plugin_mi(&pairs) - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn identical_seeds_give_identical_traces() {
        let spec = crate::env::build_factorized_env(2, 10, 7).unwrap();
        let mk = || SpikingNetwork::new(test_cfg(2, spec.n_stimuli())).unwrap();
        let (mut a, mut b) = (mk(), mk());
        let cfg = SpikingTrainConfig {
            events: 200,
            log_every: 50,
            env_seed: 3,
        };
        let la = train(&mut a, &spec, &cfg).unwrap();
        let lb = train(&mut b, &spec, &cfg).unwrap();
        assert_eq!(la.to_csv_string(), lb.to_csv_string());
    }
}
