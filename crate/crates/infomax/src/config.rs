//! JSON run configurations for the command-line harness.
//!
//! One record per subcommand. All files share the same rules: JSON only,
//! unknown keys rejected, defaults filled for omitted fields, and the fully
//! resolved record echoed into every run summary so a run can be reproduced
//! from its artifacts alone. Seeds are always explicit — nothing is seeded
//! from the wall clock.

use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::chase::ChaseConfig;
use crate::error::{Error, Result};
use crate::meanfield::MeanfieldConfig;
use crate::prob::FiniteDistribution;
use crate::spiking::{SpikingNetworkConfig, SpikingTrainConfig};

/// Parses a JSON config file of any record type in this module.
pub fn load_config<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(Error::from)
}

/// Canonical serialized form (pretty JSON with defaults made explicit).
pub fn canonical_json<T: Serialize>(cfg: &T) -> String {
    serde_json::to_string_pretty(cfg).expect("config types serialize infallibly")
}

fn default_log_every() -> u64 {
    1000
}

fn uniform_or(px: &Option<Vec<f64>>, nx: usize) -> Result<FiniteDistribution> {
    match px {
        Some(p) => FiniteDistribution::new(p.clone()),
        None => Ok(FiniteDistribution::uniform(nx)),
    }
}

/// `run-chase`: tabular code vs auxiliary-marginal dynamics.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ChaseRunConfig {
    /// Input alphabet size; ignored when `px` is given explicitly.
    #[serde(default = "ChaseRunConfig::default_nx")]
    pub nx: usize,
    /// Input distribution; uniform over `nx` symbols when omitted.
    #[serde(default)]
    pub px: Option<Vec<f64>>,
    #[serde(default = "ChaseRunConfig::default_ny")]
    pub ny: usize,
    #[serde(default = "ChaseRunConfig::default_eta_p")]
    pub eta_p: f64,
    #[serde(default = "ChaseRunConfig::default_eta_q")]
    pub eta_q: f64,
    #[serde(default = "ChaseRunConfig::default_steps")]
    pub steps: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_log_every")]
    pub log_every: u64,
}

impl ChaseRunConfig {
    fn default_nx() -> usize {
        3
    }
    fn default_ny() -> usize {
        3
    }
    fn default_eta_p() -> f64 {
        0.05
    }
    fn default_eta_q() -> f64 {
        0.5
    }
    fn default_steps() -> u64 {
        100_000
    }

    pub fn input(&self) -> Result<FiniteDistribution> {
        uniform_or(&self.px, self.nx)
    }

    pub fn dynamics(&self) -> ChaseConfig {
        ChaseConfig {
            ny: self.ny,
            eta_p: self.eta_p,
            eta_q: self.eta_q,
            steps: self.steps,
            seed: self.seed,
            log_every: self.log_every,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.input()?;
        self.dynamics().validate()
    }
}

impl Default for ChaseRunConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// `run-meanfield`: per-neuron factorized code with lateral predictors.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MeanfieldRunConfig {
    #[serde(default = "MeanfieldRunConfig::default_n")]
    pub n: usize,
    #[serde(default = "MeanfieldRunConfig::default_nx")]
    pub nx: usize,
    #[serde(default)]
    pub px: Option<Vec<f64>>,
    #[serde(default = "MeanfieldRunConfig::default_eta_code")]
    pub eta_code: f64,
    #[serde(default = "MeanfieldRunConfig::default_eta_pred")]
    pub eta_pred: f64,
    #[serde(default = "MeanfieldRunConfig::default_steps")]
    pub steps: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_log_every")]
    pub log_every: u64,
}

impl MeanfieldRunConfig {
    fn default_n() -> usize {
        2
    }
    fn default_nx() -> usize {
        4
    }
    fn default_eta_code() -> f64 {
        0.1
    }
    fn default_eta_pred() -> f64 {
        0.3
    }
    fn default_steps() -> u64 {
        200_000
    }

    pub fn input(&self) -> Result<FiniteDistribution> {
        uniform_or(&self.px, self.nx)
    }

    pub fn dynamics(&self) -> MeanfieldConfig {
        MeanfieldConfig {
            eta_code: self.eta_code,
            eta_pred: self.eta_pred,
            steps: self.steps,
            seed: self.seed,
            log_every: self.log_every,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.input()?;
        self.dynamics().validate()
    }
}

impl Default for MeanfieldRunConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// `run-filter`: recursive posterior tracking on an event stream, logging
/// posterior entropy and the log-score of the true latent.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FilterRunConfig {
    /// Environment spec file; a built-in factorized world is generated when
    /// omitted.
    #[serde(default)]
    pub env_path: Option<String>,
    /// Neuron/component count of the generated world.
    #[serde(default = "FilterRunConfig::default_n")]
    pub n: usize,
    #[serde(default = "FilterRunConfig::default_event_len")]
    pub event_len: usize,
    #[serde(default = "FilterRunConfig::default_events")]
    pub events: u64,
    #[serde(default)]
    pub seed: u64,
}

impl FilterRunConfig {
    fn default_n() -> usize {
        2
    }
    fn default_event_len() -> usize {
        20
    }
    fn default_events() -> u64 {
        100
    }

    pub fn validate(&self) -> Result<()> {
        if self.event_len == 0 || self.events == 0 {
            return Err(Error::Config("event_len and events must be >= 1".into()));
        }
        Ok(())
    }
}

impl Default for FilterRunConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// `run-spiking`: the full continuous-time network trained on events.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpikingRunConfig {
    #[serde(default)]
    pub env_path: Option<String>,
    /// Component count of the generated world (also the neuron count).
    #[serde(default = "SpikingRunConfig::default_n")]
    pub n: usize,
    #[serde(default = "SpikingRunConfig::default_event_len")]
    pub event_len: usize,
    pub network: SpikingNetworkConfig,
    pub train: SpikingTrainConfig,
}

impl SpikingRunConfig {
    fn default_n() -> usize {
        2
    }
    fn default_event_len() -> usize {
        20
    }

    pub fn validate(&self) -> Result<()> {
        if self.event_len == 0 {
            return Err(Error::Config("event_len must be >= 1".into()));
        }
        self.network.validate()?;
        self.train.validate()
    }
}

/// `capacity`: a standalone channel-capacity problem.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CapacityProblem {
    pub px: Vec<f64>,
    pub ny: usize,
}

impl CapacityProblem {
    pub fn validate(&self) -> Result<()> {
        FiniteDistribution::new(self.px.clone())?;
        if self.ny == 0 {
            return Err(Error::Config("ny must be >= 1".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_are_rejected() {
        let err = serde_json::from_str::<ChaseRunConfig>(r#"{"ny": 3, "bogus": 1}"#);
        assert!(err.is_err());
        let err = serde_json::from_str::<FilterRunConfig>(r#"{"evnts": 5}"#);
        assert!(err.is_err());
    }

    #[test]
    fn minimal_file_fills_defaults() {
        let cfg: ChaseRunConfig = serde_json::from_str("{}").unwrap();
        assert_eq!(cfg.ny, 3);
        assert_eq!(cfg.steps, 100_000);
        assert_eq!(cfg.seed, 0);
        assert!(cfg.px.is_none());
        cfg.validate().unwrap();
    }

    #[test]
    fn eta_ordering_is_enforced() {
        let cfg: ChaseRunConfig =
            serde_json::from_str(r#"{"eta_p": 0.5, "eta_q": 0.5}"#).unwrap();
        let err = cfg.validate().unwrap_err();
        assert!(err.to_string().contains("two-timescale"), "{err}");
    }

    #[test]
    fn round_trip_is_canonical() {
        let text = r#"{"ny": 4, "eta_p": 0.01}"#;
        let cfg: ChaseRunConfig = serde_json::from_str(text).unwrap();
        let canon = canonical_json(&cfg);
        let reparsed: ChaseRunConfig = serde_json::from_str(&canon).unwrap();
        assert_eq!(cfg, reparsed);
        assert_eq!(canon, canonical_json(&reparsed));
    }

    #[test]
    fn explicit_px_overrides_nx() {
        let cfg: ChaseRunConfig =
            serde_json::from_str(r#"{"nx": 7, "px": [0.25, 0.75]}"#).unwrap();
        assert_eq!(cfg.input().unwrap().len(), 2);
    }

    #[test]
    fn load_config_reports_malformed_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, "{\"ny\": }").unwrap();
        let err = load_config::<ChaseRunConfig>(&path).unwrap_err();
        assert!(matches!(err, Error::Json(_)));
        // malformed JSON errors carry the offending position
        assert!(err.to_string().contains("line"), "{err}");
    }
}
