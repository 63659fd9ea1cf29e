//! Experiment configuration, read from TOML.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::sequence::SequenceSpec;
use crate::error::{Error, Result};
use crate::paintbox::IntervalSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    BoundaryConvergence,
    XiUniformity,
}

/// Pass thresholds. The limits are proven without rates, so every
/// threshold is a choice and lives here rather than in code.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Largest `|value - target|` for exact records at the last size.
    pub absolute: f64,
    /// Monte Carlo agreement in combined standard errors.
    pub sigmas: f64,
    /// Largest paintbox distance to the target at the last size.
    pub approach: f64,
    pub ks: f64,
    pub correlation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            absolute: 0.1,
            sigmas: 4.0,
            approach: 0.25,
            ks: 0.03,
            correlation: 0.05,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSpec {
    #[serde(default)]
    pub up: String,
    #[serde(default)]
    pub down: String,
}

impl TargetSpec {
    pub fn system(&self) -> Result<IntervalSystem> {
        IntervalSystem::parse(&self.up, &self.down)
    }
}

fn default_samples() -> usize {
    100_000
}

fn default_panel() -> usize {
    3
}

fn default_exact_limit() -> usize {
    20
}

fn default_k() -> usize {
    2
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub sequence: SequenceSpec,
    /// Defaults to the sequence's known limit.
    #[serde(default)]
    pub target: Option<TargetSpec>,
    pub sizes: Vec<usize>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    pub seed: u64,
    /// Panel of all `μ ⊢ k` for `k` up to this level.
    #[serde(default = "default_panel")]
    pub panel_max_level: usize,
    /// Kernels are exact up to this size and Monte Carlo above.
    #[serde(default = "default_exact_limit")]
    pub exact_limit: usize,
    /// Number of coordinates for the ξ experiment.
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_toml(s: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_toml(&s)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ConfigMismatch(
                "sizes must be nonempty and strictly increasing".into(),
            ));
        }
        if self.samples == 0 {
            return Err(Error::ConfigMismatch("samples must be positive".into()));
        }
        if self.panel_max_level == 0 || self.panel_max_level > 4 {
            return Err(Error::ConfigMismatch(
                "panel_max_level must be in 1..=4".into(),
            ));
        }
        if self.experiment == ExperimentKind::XiUniformity && !(1..=4).contains(&self.k) {
            return Err(Error::ConfigMismatch("k must be in 1..=4".into()));
        }
        Ok(())
    }

    pub fn target_system(&self) -> Result<IntervalSystem> {
        match &self.target {
            Some(t) => t.system(),
            None => self.sequence.limit().ok_or_else(|| {
                Error::ConfigMismatch(format!(
                    "no target given and {} has no known limit",
                    self.sequence
                ))
            }),
        }
    }
}
