//! Secrecy outage probability under a target secrecy rate, and the power
//! allocation ratio that minimizes it.
//!
//! With a share `xi` of the power on the information signal the legitimate link
//! supports the target only when `xi > omega`. On `(omega, 1]` the outage is
//!
//! ```text
//! O(xi) = 1 - exp(-beta * lambda_e * (P / theta)^delta * J(xi))
//! J(xi) = (1/omega - 1/xi)^(-delta) * (1 + (xi/omega - 1) * theta * phi)^(1 - N)
//! phi   = (1/xi - 1) / (N - 1)
//! ```
//!
//! and the sign of `dJ/dxi` is the sign of the cubic `K(xi) = xi^3 + a xi^2 + b xi + c`,
//! which is convex there. The minimizer is therefore either `xi = 1` or the
//! single root of `K` inside the interval.

use crate::error::{domain, Error, Result};
use crate::numerics::{cubic, cubic_root_bisect, cubic_root_in_interval};
use crate::params::{derive, DerivedParams, ParDecision, RateTerms, SystemConfig};

/// Outage minimization for a fixed configuration and target secrecy rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SopProblem {
    pub config: SystemConfig,
    /// Target secrecy rate `R_S` in bits/s/Hz.
    pub rate: f64,
    pub derived: DerivedParams,
}

impl SopProblem {
    pub fn new(config: SystemConfig, rate: f64) -> Result<Self> {
        let derived = derive(&config, Some(rate), None)?;
        Ok(SopProblem { config, rate, derived })
    }

    pub fn terms(&self) -> RateTerms {
        self.derived.rate.expect("SopProblem always carries rate terms")
    }

    /// Cubic coefficients `(a, b, c)` of the stationarity polynomial.
    pub fn cubic_coeffs(&self) -> (f64, f64, f64) {
        let d = &self.derived;
        let RateTerms { theta, omega, .. } = self.terms();
        let w2 = omega * omega;
        let a = -d.l1 * omega;
        let b = -(d.delta / theta) * w2 - d.l0 * w2 - d.l2 * omega;
        let c = d.l2 * w2;
        (a, b, c)
    }

    fn check_feasible(&self, xi: f64) -> Result<()> {
        let omega = self.terms().omega;
        if !(xi > omega) {
            return Err(Error::Infeasible(format!(
                "xi = {xi} does not exceed omega = {omega}; connection to Bob unsupported"
            )));
        }
        if xi > 1.0 {
            return domain(format!("power share must not exceed 1, got {xi}"));
        }
        Ok(())
    }

    pub fn j_factor(&self, xi: f64) -> Result<f64> {
        self.check_feasible(xi)?;
        let RateTerms { theta, omega, .. } = self.terms();
        let n = self.config.n();
        let phi = (1.0 / xi - 1.0) / (n - 1.0);
        let first = (1.0 / omega - 1.0 / xi).powf(-self.derived.delta);
        let second = (1.0 + (xi / omega - 1.0) * theta * phi).powf(1.0 - n);
        Ok(first * second)
    }

    /// Closed-form secrecy outage probability at power share `xi`.
    pub fn sop(&self, xi: f64) -> Result<f64> {
        let j = self.j_factor(xi)?;
        let d = &self.derived;
        let scale = d.beta * self.config.lambda_e * (self.config.power / self.terms().theta).powf(d.delta);
        Ok(-(-scale * j).exp_m1())
    }

    /// Stationarity cubic `K(xi)`; its sign is the sign of `dJ/dxi` on `(omega, 1]`.
    pub fn k_cubic(&self, xi: f64) -> f64 {
        let (a, b, c) = self.cubic_coeffs();
        cubic(a, b, c, xi)
    }

    /// `kappa` at or above which the optimum leaves the full-power branch.
    pub fn full_power_limit(&self) -> f64 {
        let RateTerms { t_pow, theta, .. } = self.terms();
        (t_pow - 1.0) * (1.0 + (self.derived.delta / theta).sqrt())
    }

    /// Power share minimizing the outage probability, with the outage at it.
    ///
    /// The regime is decided from `kappa` alone: suspension for
    /// `kappa <= T - 1`, full power up to and including [`Self::full_power_limit`],
    /// otherwise the stationary point.
    pub fn optimal_par(&self) -> ParDecision {
        let kappa = self.derived.kappa;
        let RateTerms { t_pow, omega, .. } = self.terms();
        if kappa <= t_pow - 1.0 {
            return ParDecision::suspend();
        }
        let full = |p: &Self| ParDecision::full_power(p.sop(1.0).unwrap_or(1.0));
        if kappa <= self.full_power_limit() {
            return full(self);
        }
        let (a, b, c) = self.cubic_coeffs();
        match cubic_root_in_interval(a, b, c, omega, 1.0) {
            Ok(xi) => {
                debug_assert!(
                    cubic_root_bisect(a, b, c, omega, 1.0)
                        .map(|slow| (slow - xi).abs() <= 1e-8)
                        .unwrap_or(true),
                    "Cardano and bisection disagree at omega = {omega}"
                );
                if xi >= 1.0 {
                    return full(self);
                }
                let objective = self.sop(xi).unwrap_or(1.0);
                ParDecision::interior(xi, objective)
            }
            // K(1) rounds to <= 0 right at the regime boundary
            Err(_) => full(self),
        }
    }

    /// Minimum outage probability; the same decision as [`Self::optimal_par`].
    pub fn min_sop(&self) -> ParDecision {
        self.optimal_par()
    }
}

/// CDF of one eavesdropper's SINR at distance `r` for power share `xi`:
/// `1 - exp(-r^alpha x / (P xi)) (1 + phi x)^(1 - N)`.
pub fn eve_sinr_cdf(config: &SystemConfig, xi: f64, r: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let n = config.n();
    let phi = (1.0 / xi - 1.0) / (n - 1.0);
    let tail = (-r.powf(config.alpha) * x / (config.power * xi)).exp() * (1.0 + phi * x).powf(1.0 - n);
    1.0 - tail
}

/// CDF of the strongest eavesdropper SINR over the Poisson field:
/// `exp(-beta lambda_e (P xi)^delta x^(-delta) (1 + phi x)^(1 - N))`.
pub fn max_eve_sinr_cdf(config: &SystemConfig, xi: f64, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    let d = derive(config, None, None)?;
    let n = config.n();
    let phi = (1.0 / xi - 1.0) / (n - 1.0);
    let expo = d.beta
        * config.lambda_e
        * (config.power * xi).powf(d.delta)
        * x.powf(-d.delta)
        * (1.0 + phi * x).powf(1.0 - n);
    Ok((-expo).exp())
}
