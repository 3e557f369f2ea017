use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::asymptotics::{edge_probability, DEFAULT_BAND};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measurement {
    /// Minimum co-degree δ(Y).
    Delta,
    /// Spectral gap λ(Y).
    Lambda,
    /// Cheeger constant h(Y).
    H,
    /// Conductance Φ_Y, exact or estimated.
    Phi,
    /// Largest Garland residual on a random cycle.
    Garland,
    /// Adjacency form bound of one link graph divided by `√(np)`.
    Linkspec,
}

impl Measurement {
    pub const ALL: [Measurement; 6] = [
        Measurement::Delta,
        Measurement::Lambda,
        Measurement::H,
        Measurement::Phi,
        Measurement::Garland,
        Measurement::Linkspec,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measurement::Delta => "delta",
            Measurement::Lambda => "lambda",
            Measurement::H => "h",
            Measurement::Phi => "phi",
            Measurement::Garland => "garland",
            Measurement::Linkspec => "linkspec",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::param(format!("unknown measurement {s:?}")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OutputPaths {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub json: Option<PathBuf>,
    /// Directory receiving one `.dat` series per measurement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plot_dir: Option<PathBuf>,
    /// Per-sample wall times, kept apart from the deterministic report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<PathBuf>,
}

fn default_band() -> f64 {
    DEFAULT_BAND
}

fn default_phi_trials() -> usize {
    200
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n_values: Vec<usize>,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    pub samples: usize,
    #[serde(alias = "seed")]
    pub master_seed: u64,
    #[serde(default)]
    pub gamma: f64,
    pub measurements: Vec<Measurement>,
    #[serde(default = "default_band")]
    pub band_constant: f64,
    /// Sets sampled by the conductance estimator when exact enumeration is too large.
    #[serde(default = "default_phi_trials")]
    pub phi_trials: usize,
    #[serde(default)]
    pub output: OutputPaths,
}

impl ExperimentConfig {
    /// A config sampling at `p = (1+ε) d log n / n`.
    pub fn with_eps(n_values: Vec<usize>, d: usize, eps: f64, samples: usize, master_seed: u64) -> Self {
        ExperimentConfig {
            n_values,
            d,
            eps: Some(eps),
            p: None,
            samples,
            master_seed,
            gamma: 0.0,
            measurements: vec![Measurement::Delta],
            band_constant: DEFAULT_BAND,
            phi_trials: default_phi_trials(),
            output: OutputPaths::default(),
        }
    }

    /// A config sampling at a fixed probability.
    pub fn with_p(n_values: Vec<usize>, d: usize, p: f64, samples: usize, master_seed: u64) -> Self {
        ExperimentConfig {
            eps: None,
            p: Some(p),
            ..Self::with_eps(n_values, d, 1.0, samples, master_seed)
        }
    }

    pub fn measuring(mut self, measurements: &[Measurement]) -> Self {
        self.measurements = measurements.to_vec();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(Error::param("n_values must not be empty"));
        }
        if self.d < 1 {
            return Err(Error::param("d must be at least 1"));
        }
        if let Some(&n) = self.n_values.iter().find(|&&n| n <= self.d) {
            return Err(Error::param(format!("every n must exceed d = {}, got {n}", self.d)));
        }
        if self.samples < 1 {
            return Err(Error::param("samples must be at least 1"));
        }
        match (self.eps, self.p) {
            (Some(eps), None) if eps > 0.0 && eps.is_finite() => {}
            (Some(eps), None) => return Err(Error::param(format!("eps must be positive, got {eps}"))),
            (None, Some(p)) if (0.0..=1.0).contains(&p) => {}
            (None, Some(p)) => return Err(Error::param(format!("p must lie in [0, 1], got {p}"))),
            _ => return Err(Error::param("give exactly one of eps and p")),
        }
        if !(0.0..1.0).contains(&self.gamma) {
            return Err(Error::param(format!("gamma must lie in [0, 1), got {}", self.gamma)));
        }
        if !(self.band_constant > 0.0) {
            return Err(Error::param("band_constant must be positive"));
        }
        Ok(())
    }

    /// Face probability at vertex count `n`, clamped to 1.
    pub fn probability(&self, n: usize) -> f64 {
        match (self.p, self.eps) {
            (Some(p), _) => p,
            (None, Some(eps)) => edge_probability(n, self.d, eps).min(1.0),
            (None, None) => 0.0,
        }
    }

    pub fn wants(&self, m: Measurement) -> bool {
        self.measurements.contains(&m)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: ExperimentConfig = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }
}
