//! Synthetic latent-variable worlds producing exchangeable stimulus streams.
//!
//! An event samples one latent `z` and then `T` i.i.d. stimuli from
//! `p(x|z)`, which makes the likelihood time-invariant and the stimulus
//! sequence exchangeable by construction. [`build_factorized_env`] produces
//! worlds whose likelihood factorizes per neuron, as required by the
//! factorized-filter tests.
//!
//! ```
//! use infomax::env::{build_factorized_env, EventStream};
//!
//! let spec = build_factorized_env(2, 10, 3).unwrap();
//! assert_eq!(spec.n_stimuli(), 4); // 2 binary components => 4 stimuli
//! let mut stream = EventStream::new(&spec, 5);
//! let (z, xs) = stream.next_event();
//! assert!(z < spec.n_latent());
//! assert_eq!(xs.len(), 10);
//! assert!(xs.iter().all(|&x| x < spec.n_stimuli()));
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filter::FactorizedLikelihood;
use crate::prob::{ConditionalTable, FiniteDistribution};

/// Per-neuron factorization of the emission: `p(x|y) = f(x) prod_i g_i(x, y_i)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorizedEmission {
    /// Base factor `f(x)`.
    pub base: Vec<f64>,
    /// `factors[i][y_i][x] = g_i(x, y_i)`.
    pub factors: Vec<[Vec<f64>; 2]>,
    /// Per-neuron prior `p(y_i = 1)`.
    pub prior_p1: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvironmentSpec {
    /// Prior over the latent `z`.
    pub latent_prior: FiniteDistribution,
    /// Emission rows `p(x|z)`, row-major over `z`.
    pub emission: ConditionalTable,
    /// Stimuli per event.
    pub event_len: usize,
    /// Probability that the latent persists from one event to the next
    /// (0 resamples every event).
    #[serde(default)]
    pub persistence: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorized: Option<FactorizedEmission>,
}

impl EnvironmentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.event_len == 0 {
            return Err(Error::Config("event_len must be >= 1".into()));
        }
        if self.latent_prior.len() != self.emission.n_conditions() {
            return Err(Error::AlphabetMismatch {
                expected: self.latent_prior.len(),
                got: self.emission.n_conditions(),
            });
        }
        if !(0.0..=1.0).contains(&self.persistence) {
            return Err(Error::Config("persistence must be in [0, 1]".into()));
        }
        if let Some(f) = &self.factorized {
            verify_factorization(f, &self.emission)?;
        }
        Ok(())
    }

    pub fn n_stimuli(&self) -> usize {
        self.emission.n_outcomes()
    }

    pub fn n_latent(&self) -> usize {
        self.latent_prior.len()
    }

    /// Stationary per-symbol stimulus frequencies `sum_z p(z) p(x|z)`.
    pub fn stimulus_marginal(&self) -> Result<FiniteDistribution> {
        crate::prob::marginal(&self.latent_prior, &self.emission)
    }

    pub fn load<P: AsRef<std::path::Path>>(path: P) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let spec: Self = serde_json::from_str(&text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn save<P: AsRef<std::path::Path>>(&self, path: P) -> Result<()> {
        Ok(std::fs::write(path, serde_json::to_string_pretty(self)?)?)
    }
}

/// Checks `f(x) prod_i g_i(x, y_i)` reproduces every emission row to 1e-12.
fn verify_factorization(f: &FactorizedEmission, emission: &ConditionalTable) -> Result<()> {
    let n = f.factors.len();
    if emission.n_conditions() != 1 << n {
        return Err(Error::AlphabetMismatch {
            expected: 1 << n,
            got: emission.n_conditions(),
        });
    }
    for y in 0..emission.n_conditions() {
        for x in 0..emission.n_outcomes() {
            let mut p = f.base[x];
            for (i, g) in f.factors.iter().enumerate() {
                p *= g[(y >> i) & 1][x];
            }
            if (p - emission.row(y).prob(x)).abs() > 1e-12 {
                return Err(Error::InvalidDistribution(format!(
                    "factorization mismatch at y={y}, x={x}"
                )));
            }
        }
    }
    Ok(())
}

/// One sampled perceptual event: the latent and its stimulus sequence.
pub fn sample_event<R: rand::Rng>(spec: &EnvironmentSpec, rng: &mut R) -> (usize, Vec<usize>) {
    let z = spec.latent_prior.sample(rng);
    let xs = (0..spec.event_len)
        .map(|_| spec.emission.row(z).sample(rng))
        .collect();
    (z, xs)
}

/// Event iterator honoring the persistence probability between events.
pub struct EventStream<'a> {
    spec: &'a EnvironmentSpec,
    rng: ChaCha8Rng,
    last_z: Option<usize>,
}

impl<'a> EventStream<'a> {
    pub fn new(spec: &'a EnvironmentSpec, seed: u64) -> Self {
        Self {
            spec,
            rng: ChaCha8Rng::seed_from_u64(seed),
            last_z: None,
        }
    }

    pub fn next_event(&mut self) -> (usize, Vec<usize>) {
        let z = match self.last_z {
            Some(z) if rand::Rng::random::<f64>(&mut self.rng) < self.spec.persistence => z,
            _ => self.spec.latent_prior.sample(&mut self.rng),
        };
        self.last_z = Some(z);
        let xs = (0..self.spec.event_len)
            .map(|_| self.spec.emission.row(z).sample(&mut self.rng))
            .collect();
        (z, xs)
    }
}

/// Cap on neurons for [`build_factorized_env`] (the latent alphabet is `2^n`
/// and the stimulus alphabet `2^n`).
pub const FACTORIZED_ENV_CAP: usize = 4;

/// Builds a world whose likelihood factorizes per neuron exactly.
///
/// The stimulus alphabet is a product of `n` independent binary components;
/// neuron `i`'s bit `y_i` emits component `x^i` through its own 2x2 channel.
/// Independence across components makes `p(x|y) = f(x) prod_i g_i(x, y_i)`
/// hold with exact normalization for every `y`, which is verified by
/// enumeration before the spec is returned.
pub fn build_factorized_env(n: usize, event_len: usize, seed: u64) -> Result<EnvironmentSpec> {
    if n == 0 || n > FACTORIZED_ENV_CAP {
        return Err(Error::SizeCap(format!(
            "factorized environments support 1..={FACTORIZED_ENV_CAP} neurons"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r: &mut ChaCha8Rng = &mut rng;

    // per-component pieces: prior pi_i and channel p(x^i | y_i)
    let mut pi = Vec::with_capacity(n);
    let mut channel = Vec::with_capacity(n); // [i][y_i][x^i]
    for _ in 0..n {
        pi.push(0.2 + 0.6 * rand::Rng::random::<f64>(r));
        let row = |r: &mut ChaCha8Rng| {
            let a: f64 = 0.1 + 0.8 * rand::Rng::random::<f64>(r);
            vec![a, 1.0 - a]
        };
        channel.push([row(r), row(r)]);
    }

    let nx = 1 << n;
    let n_latent = 1 << n;

    // latent prior p(y) = prod Bern(pi_i)
    let latent_prior = FiniteDistribution::new(
        (0..n_latent)
            .map(|y: usize| {
                (0..n)
                    .map(|i| if (y >> i) & 1 == 1 { pi[i] } else { 1.0 - pi[i] })
                    .product()
            })
            .collect(),
    )?;

    // emission p(x|y) = prod_i p(x^i | y_i)
    let emission = ConditionalTable::from_rows(
        (0..n_latent)
            .map(|y: usize| {
                (0..nx)
                    .map(|x: usize| {
                        (0..n)
                            .map(|i| channel[i][(y >> i) & 1][(x >> i) & 1])
                            .product()
                    })
                    .collect()
            })
            .collect(),
    )?;

    // marginal of each component: p(x^i) = sum_{y_i} Bern(pi_i) p(x^i|y_i)
    let comp_marginal: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..2)
                .map(|xi| (1.0 - pi[i]) * channel[i][0][xi] + pi[i] * channel[i][1][xi])
                .collect()
        })
        .collect();

    // f(x) = prod_i p(x^i); g_i(x, y_i) = p(x^i | y_i) / p(x^i)
    let base: Vec<f64> = (0..nx)
        .map(|x: usize| (0..n).map(|i| comp_marginal[i][(x >> i) & 1]).product())
        .collect();
    let factors: Vec<[Vec<f64>; 2]> = (0..n)
        .map(|i| {
            let g_row = |yi: usize| -> Vec<f64> {
                (0..nx)
                    .map(|x: usize| channel[i][yi][(x >> i) & 1] / comp_marginal[i][(x >> i) & 1])
                    .collect()
            };
            [g_row(0), g_row(1)]
        })
        .collect();

    let spec = EnvironmentSpec {
        latent_prior,
        emission,
        event_len,
        persistence: 0.0,
        factorized: Some(FactorizedEmission {
            base,
            factors,
            prior_p1: pi,
        }),
    };
    spec.validate()?;
    Ok(spec)
}

impl FactorizedEmission {
    pub fn likelihood(&self) -> FactorizedLikelihood {
        // absolute scale of g_i is irrelevant for the odds update; pass the
        // factors through as per-neuron likelihood surrogates
        FactorizedLikelihood::new(self.factors.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_spec() -> EnvironmentSpec {
        EnvironmentSpec {
            latent_prior: FiniteDistribution::new(vec![0.4, 0.6]).unwrap(),
            emission: ConditionalTable::from_rows(vec![
                vec![0.8, 0.1, 0.05, 0.05],
                vec![0.05, 0.05, 0.1, 0.8],
            ])
            .unwrap(),
            event_len: 5,
            persistence: 0.0,
            factorized: None,
        }
    }

    #[test]
    fn deterministic_emission_repeats_one_symbol() {
        let spec = EnvironmentSpec {
            latent_prior: FiniteDistribution::point_mass(2, 1),
            emission: ConditionalTable::from_rows(vec![
                vec![1.0, 0.0],
                vec![0.0, 1.0],
            ])
            .unwrap(),
            event_len: 8,
            persistence: 0.0,
            factorized: None,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (z, xs) = sample_event(&spec, &mut rng);
        assert_eq!(z, 1);
        assert!(xs.iter().all(|&x| x == 1));
    }

    #[test]
    fn event_of_length_one_is_a_mixture_draw() {
        let mut spec = tiny_spec();
        spec.event_len = 1;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (_, xs) = sample_event(&spec, &mut rng);
        assert_eq!(xs.len(), 1);
    }

    #[test]
    fn empirical_frequencies_match_mixture() {
        let spec = tiny_spec();
        let expected = spec.stimulus_marginal().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut counts = vec![0u64; 4];
        let mut total = 0u64;
        for _ in 0..20_000 {
            let (_, xs) = sample_event(&spec, &mut rng);
            for x in xs {
                counts[x] += 1;
                total += 1;
            }
        }
        for x in 0..4 {
            let p = expected.prob(x);
            let emp = counts[x] as f64 / total as f64;
            let sigma = (p * (1.0 - p) / total as f64).sqrt();
            assert!(
                (emp - p).abs() < 3.0 * sigma + 1e-9,
                "x={x}: emp {emp} vs {p}"
            );
        }
    }

    #[test]
    fn seed_determinism() {
        let spec = tiny_spec();
        let mut a = EventStream::new(&spec, 9);
        let mut b = EventStream::new(&spec, 9);
        for _ in 0..10 {
            assert_eq!(a.next_event(), b.next_event());
        }
    }

    #[test]
    fn exchangeability_holds_on_the_density() {
        // p(x_{1:T}) = sum_z p(z) prod_t p(x_t|z) depends only on symbol counts
        let spec = tiny_spec();
        let density = |xs: &[usize]| -> f64 {
            (0..2)
                .map(|z| {
                    spec.latent_prior.prob(z)
                        * xs.iter().map(|&x| spec.emission.row(z).prob(x)).product::<f64>()
                })
                .sum()
        };
        let xs = [0, 3, 1, 0, 2];
        let shuffled = [2, 0, 0, 1, 3];
        assert!((density(&xs) - density(&shuffled)).abs() < 1e-15);
    }

    #[test]
    fn factorized_env_single_neuron() {
        let spec = build_factorized_env(1, 4, 0).unwrap();
        assert_eq!(spec.n_latent(), 2);
        assert!(spec.factorized.is_some());
    }

    #[test]
    fn factorized_env_normalizes_exactly() {
        for seed in 0..5 {
            let spec = build_factorized_env(3, 4, seed).unwrap();
            let f = spec.factorized.as_ref().unwrap();
            for y in 0..spec.n_latent() {
                let total: f64 = (0..spec.n_stimuli())
                    .map(|x| {
                        let mut p = f.base[x];
                        for (i, g) in f.factors.iter().enumerate() {
                            p *= g[(y >> i) & 1][x];
                        }
                        p
                    })
                    .sum();
                assert!((total - 1.0).abs() < 1e-12, "y={y}: {total}");
            }
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = build_factorized_env(2, 6, 3).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        let back: EnvironmentSpec = serde_json::from_str(&json).unwrap();
        back.validate().unwrap();
        assert_eq!(back.event_len, 6);
        assert_eq!(back.latent_prior, spec.latent_prior);
    }
}
