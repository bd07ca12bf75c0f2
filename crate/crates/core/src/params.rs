//! Physical scenario, derived shorthand quantities and optimization outcomes.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numerics::gamma_fn;

/// Physical scenario seen by the transmitter.
///
/// `power` is linear and normalized to unit receiver noise. `gamma_hat` is the
/// squared norm of the estimated main channel, which the closed forms condition on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemConfig {
    /// Transmit antennas `N`, at least 2 so that AN has a null space.
    pub n_antennas: usize,
    /// Total transmit power `P`.
    pub power: f64,
    /// Path-loss exponent, strictly greater than 2.
    pub alpha: f64,
    /// Distance to the legitimate receiver.
    pub r_bob: f64,
    /// Eavesdropper density per unit area.
    pub lambda_e: f64,
    /// Channel estimation error coefficient in `[0, 1]`.
    pub tau: f64,
    /// Estimated channel gain `||h_b||^2`.
    pub gamma_hat: f64,
}

impl SystemConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_antennas < 2 {
            return domain(format!("n_antennas must be >= 2, got {}", self.n_antennas));
        }
        if !(self.alpha.is_finite() && self.alpha > 2.0) {
            return domain(format!("alpha must be > 2, got {}", self.alpha));
        }
        if !(self.tau.is_finite() && (0.0..=1.0).contains(&self.tau)) {
            return domain(format!("tau must lie in [0, 1], got {}", self.tau));
        }
        for (name, v) in [("power", self.power), ("r_bob", self.r_bob), ("gamma_hat", self.gamma_hat)] {
            if !(v.is_finite() && v > 0.0) {
                return domain(format!("{name} must be positive and finite, got {v}"));
            }
        }
        if !(self.lambda_e.is_finite() && self.lambda_e >= 0.0) {
            return domain(format!("lambda_e must be nonnegative and finite, got {}", self.lambda_e));
        }
        Ok(())
    }

    /// Effective SNR coefficient of the legitimate link per unit of signal power share.
    pub fn kappa(&self) -> f64 {
        let t2 = self.tau * self.tau;
        (1.0 - t2) * self.power * self.gamma_hat / (t2 * self.power + self.r_bob.powf(self.alpha))
    }

    /// `2 / alpha`.
    pub fn delta(&self) -> f64 {
        2.0 / self.alpha
    }

    /// Antenna count as a real, for use in formulas.
    pub fn n(&self) -> f64 {
        self.n_antennas as f64
    }
}

/// Terms that exist only once a target secrecy rate is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateTerms {
    /// `T = 2^R_S`.
    pub t_pow: f64,
    /// `(T - 1) / T`.
    pub theta: f64,
    /// `(T - 1) / kappa`, the smallest share that keeps the legitimate link up.
    /// Infinite when `kappa = 0`.
    pub omega: f64,
}

/// Shorthand quantities shared by the closed forms, computed once per configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedParams {
    pub kappa: f64,
    pub delta: f64,
    /// `pi * Gamma(1 + delta)`.
    pub beta: f64,
    pub rate: Option<RateTerms>,
    /// `delta / (N - 1)`.
    pub l0: f64,
    pub l1: f64,
    pub l2: f64,
    /// `beta * lambda_e * P^delta / (-ln(1 - eps))`, present when an outage threshold is given.
    pub big_l: Option<f64>,
}

/// Compute the derived shorthand quantities for `config`, optionally for a
/// target secrecy rate `rate` (bits/s/Hz) and an outage threshold `eps`.
pub fn derive(config: &SystemConfig, rate: Option<f64>, eps: Option<f64>) -> Result<DerivedParams> {
    config.validate()?;
    let kappa = config.kappa();
    let delta = config.delta();
    let beta = PI * gamma_fn(1.0 + delta)?;
    let l0 = delta / (config.n() - 1.0);

    let rate = match rate {
        None => None,
        Some(r) if r.is_finite() && r > 0.0 => {
            let t_pow = r.exp2();
            let omega = if kappa > 0.0 { (t_pow - 1.0) / kappa } else { f64::INFINITY };
            Some(RateTerms { t_pow, theta: (t_pow - 1.0) / t_pow, omega })
        }
        Some(r) => return domain(format!("secrecy rate must be positive, got {r}")),
    };

    let big_l = match eps {
        None => None,
        Some(e) if e > 0.0 && e < 1.0 => {
            Some(beta * config.lambda_e * config.power.powf(delta) / -(-e).ln_1p())
        }
        Some(e) => return domain(format!("outage threshold must lie in (0, 1), got {e}")),
    };

    Ok(DerivedParams { kappa, delta, beta, rate, l0, l1: 1.0 - l0, l2: 1.0 + l0, big_l })
}

/// Convert a noise-normalized dBm figure to linear power.
pub fn dbm_to_linear(p_dbm: f64) -> f64 {
    10f64.powf(p_dbm / 10.0)
}

/// Which branch of an optimal power split applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// No power split supports the target; the transmitter stays silent.
    Suspend,
    /// All power on the information signal.
    FullPower,
    /// Strictly interior power split.
    Interior,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Suspend => "suspend",
            Regime::FullPower => "full_power",
            Regime::Interior => "interior",
        }
    }
}

/// Outcome of a power-allocation optimization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParDecision {
    pub regime: Regime,
    /// Optimal share of power on the information signal; absent when suspended.
    pub xi: Option<f64>,
    /// Objective at the optimum (an SOP or a secrecy rate); absent when suspended.
    pub objective: Option<f64>,
}

impl ParDecision {
    pub fn suspend() -> Self {
        ParDecision { regime: Regime::Suspend, xi: None, objective: None }
    }

    pub fn full_power(objective: f64) -> Self {
        ParDecision { regime: Regime::FullPower, xi: Some(1.0), objective: Some(objective) }
    }

    pub fn interior(xi: f64, objective: f64) -> Self {
        ParDecision { regime: Regime::Interior, xi: Some(xi), objective: Some(objective) }
    }

    pub fn is_suspended(&self) -> bool {
        self.regime == Regime::Suspend
    }
}
