//! Information-maximizing neural codes on finite alphabets.
//!
//! This crate implements, end to end, a family of learning rules that grow
//! out of one idea: a perceptual code `p(y|x)` should maximize the mutual
//! information `I(x;y)` between stimulus and response, and it can do so with
//! only local quantities if the global marginal `p(y)` is replaced by a
//! trainable auxiliary that chases it. The modules are arranged as a ladder
//! of increasingly biological constraints:
//!
//! - [`prob`] — exact finite-alphabet probability calculus: entropies,
//!   mutual information, the first variation of MI, and a brute-force
//!   channel-capacity oracle. Everything else is validated against this.
//! - [`simplex`] — score-space (softmax) parameterization so that gradient
//!   updates can never leave the probability simplex.
//! - [`chase`] — the two-player chase game: an auxiliary marginal `q(y)`
//!   descends toward the sampled code row while the code ascends away from
//!   `q`, run on two timescales.
//! - [`meanfield`] — the factorized code `p(y|x) = prod_i p(y_i|x)` where
//!   every neuron runs the same game against its own lateral predictor
//!   `q(y_i|y_-i)`, using only locally available signals.
//! - [`filter`] — recursive Bayesian posteriors over event streams, their
//!   batch equivalence, and the per-neuron factorized recursion.
//! - [`env`] — synthetic latent-variable worlds emitting exchangeable
//!   stimulus streams, including exactly factorizable ones.
//! - [`spiking`] — the continuous-time endpoint: Bernoulli/Poisson spiking
//!   neurons that learn log likelihood-ratios online, squashed into a
//!   biological firing-rate band.
//!
//! # A taste of the API
//!
//! Entropies and mutual information are exact and measured in nats:
//!
//! ```
//! use infomax::prob::{entropy, mutual_information, FiniteDistribution, ConditionalTable};
//!
//! let px = FiniteDistribution::new(vec![0.25, 0.75])?;
//! assert!((entropy(&px) - 0.5623351446188083).abs() < 1e-12);
//!
//! // a binary symmetric channel with 10% flips
//! let bsc = ConditionalTable::from_rows(vec![vec![0.9, 0.1], vec![0.1, 0.9]])?;
//! let uniform = FiniteDistribution::uniform(2);
//! let mi = mutual_information(&uniform, &bsc)?;
//! assert!((mi - 0.3680642071684971).abs() < 1e-12);
//! # Ok::<(), infomax::error::Error>(())
//! ```
//!
//! The chase game maximizes that quantity from samples alone:
//!
//! ```
//! use infomax::chase::{run_chase, ChaseConfig};
//! use infomax::prob::FiniteDistribution;
//!
//! let cfg = ChaseConfig { steps: 2_000, seed: 7, ..ChaseConfig::default() };
//! let log = run_chase(&FiniteDistribution::uniform(3), &cfg)?;
//! let mi = log.column("mi_nats").unwrap();
//! assert!(mi.last().unwrap() > mi.first().unwrap());
//! # Ok::<(), infomax::error::Error>(())
//! ```
//!
//! # Reproducibility
//!
//! Every stochastic routine takes an explicit seed and uses counter-based
//! generators, so identical configurations produce byte-identical CSV logs.
//! The `infomax` binary (see the book's CLI chapter) exposes each module as
//! a subcommand and writes a JSON summary echoing the exact configuration
//! used.

pub mod chase;
pub mod config;
pub mod env;
pub mod error;
pub mod filter;
pub mod log;
pub mod meanfield;
pub mod prob;
pub mod simplex;
pub mod spiking;
pub mod testutil;
pub mod validate;

pub use error::{Error, Result};
