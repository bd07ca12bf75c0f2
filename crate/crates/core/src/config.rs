//! Configuration files.
//!
//! ```toml
//! [system]
//! n_antennas = 8
//! power_dbm = 10.0        # or power_linear, not both
//! alpha = 4.0
//! r_bob = 1.0
//! lambda_e = 2.0
//! tau = 0.3
//! gamma_hat = 8.0
//!
//! [problem]               # optional
//! rate = 2.0
//! eps = 0.01
//!
//! [monte_carlo]           # optional
//! trials = 100000
//! seed = 1
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::params::{dbm_to_linear, SystemConfig};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemSection {
    n_antennas: usize,
    power_dbm: Option<f64>,
    power_linear: Option<f64>,
    alpha: f64,
    r_bob: f64,
    lambda_e: f64,
    tau: f64,
    gamma_hat: f64,
}

/// Optional problem parameters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSection {
    /// Target secrecy rate for outage minimization.
    pub rate: Option<f64>,
    /// Outage threshold for rate maximization.
    pub eps: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonteCarloSection {
    pub trials: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    system: SystemSection,
    #[serde(default)]
    problem: ProblemSection,
    #[serde(default)]
    monte_carlo: MonteCarloSection,
}

/// Parsed configuration file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigFile {
    pub system: SystemConfig,
    pub problem: ProblemSection,
    pub monte_carlo: MonteCarloSection,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let s = raw.system;
        let power = match (s.power_dbm, s.power_linear) {
            (Some(dbm), None) => dbm_to_linear(dbm),
            (None, Some(lin)) => lin,
            (Some(_), Some(_)) => {
                return Err(Error::Config("power_dbm and power_linear are mutually exclusive".into()))
            }
            (None, None) => return Err(Error::Config("one of power_dbm or power_linear is required".into())),
        };
        let system = SystemConfig {
            n_antennas: s.n_antennas,
            power,
            alpha: s.alpha,
            r_bob: s.r_bob,
            lambda_e: s.lambda_e,
            tau: s.tau,
            gamma_hat: s.gamma_hat,
        };
        system.validate().map_err(|e| Error::Config(e.to_string()))?;
        Ok(ConfigFile { system, problem: raw.problem, monte_carlo: raw.monte_carlo })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}
