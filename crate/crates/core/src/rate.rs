//! Secrecy rate under a secrecy-outage constraint `O <= eps`, and the power
//! allocation ratio that maximizes it.
//!
//! The constraint is equivalent to `R_S <= log2((1 + kappa xi) / (1 + rho(xi) xi))`
//! where `rho(xi)` solves
//!
//! ```text
//! Z(xi, rho) = rho^delta * (1 + rho (1 - xi) / (N - 1))^(N - 1) = L
//! ```
//!
//! `rho` is increasing and convex in `xi`, `rho(1) = L^(1/delta)`, and the rate is
//! concave wherever `rho < kappa`, so the optimum is either `xi = 1` or the single
//! root of `dR_S/dxi` found by bisection.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{bisect, lambert_w0, Bracket, DEFAULT_TOL};
use crate::params::{derive, DerivedParams, ParDecision, SystemConfig};

/// Rate maximization for a fixed configuration and outage threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateProblem {
    pub config: SystemConfig,
    /// Outage threshold `eps` in `(0, 1)`.
    pub eps: f64,
    pub derived: DerivedParams,
}

/// How the eavesdropper quantile `rho(xi)` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum RhoMode {
    /// Bisection on the exact finite-`N` equation.
    #[default]
    Exact,
    /// Closed form in the Lambert-W function, valid as `N` grows.
    LargeN,
}

/// Evaluator for `rho(xi)` bound to one problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoSolver {
    /// Bisection width for the optimal `xi`, and for `rho` in exact mode after scaling by `min(1, rho_max)`.
    pub tol: f64,
    /// `L^(1/delta)`, the value at `xi = 1`.
    pub rho_max: f64,
    pub mode: RhoMode,
}

impl RhoSolver {
    pub fn new(problem: &RateProblem, mode: RhoMode, tol: f64) -> Result<Self> {
        if !(tol > 0.0) {
            return domain(format!("solver tolerance must be positive, got {tol}"));
        }
        Ok(RhoSolver { tol, rho_max: problem.rho_max(), mode })
    }

    pub fn exact(problem: &RateProblem) -> Self {
        RhoSolver { tol: DEFAULT_TOL, rho_max: problem.rho_max(), mode: RhoMode::Exact }
    }

    pub fn large_n(problem: &RateProblem) -> Self {
        RhoSolver { tol: DEFAULT_TOL, rho_max: problem.rho_max(), mode: RhoMode::LargeN }
    }
}

impl RateProblem {
    pub fn new(config: SystemConfig, eps: f64) -> Result<Self> {
        let derived = derive(&config, None, Some(eps))?;
        Ok(RateProblem { config, eps, derived })
    }

    pub fn big_l(&self) -> f64 {
        self.derived.big_l.expect("RateProblem always carries L")
    }

    pub fn rho_max(&self) -> f64 {
        self.big_l().powf(1.0 / self.derived.delta)
    }

    pub fn kappa(&self) -> f64 {
        self.derived.kappa
    }

    /// `Z(xi, rho) - L`; strictly increasing in `rho`.
    pub fn z_residual(&self, xi: f64, rho: f64) -> f64 {
        let m = self.config.n() - 1.0;
        rho.powf(self.derived.delta) * (1.0 + rho * (1.0 - xi) / m).powf(m) - self.big_l()
    }

    /// `ln Z - ln L`, same root as [`Self::z_residual`] without overflow.
    fn log_z_residual(&self, xi: f64, rho: f64) -> f64 {
        let m = self.config.n() - 1.0;
        self.derived.delta * rho.ln() + m * (rho * (1.0 - xi) / m).ln_1p() - self.big_l().ln()
    }

    fn check_xi(xi: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&xi) {
            return domain(format!("power share must lie in [0, 1], got {xi}"));
        }
        Ok(())
    }

    /// Eavesdropper SINR quantile divided by `xi`, at confidence `1 - eps`.
    ///
    /// Zero when there are no eavesdroppers (`lambda_e = 0`): the constraint is vacuous.
    pub fn rho(&self, xi: f64, solver: &RhoSolver) -> Result<f64> {
        Self::check_xi(xi)?;
        let rho_max = solver.rho_max;
        if rho_max == 0.0 {
            return Ok(0.0);
        }
        if xi == 1.0 {
            return Ok(rho_max);
        }
        match solver.mode {
            RhoMode::Exact => {
                let f = |r: f64| self.log_z_residual(xi, r);
                let bracket = Bracket::new(f, 0.0, rho_max)?;
                // sparse fields have tiny quantiles; keep the width relative to them
                bisect(f, bracket, solver.tol * rho_max.min(1.0))
            }
            RhoMode::LargeN => {
                // ln(y / W(y)) = W(y)
                let delta = self.derived.delta;
                let y = (1.0 - xi) * rho_max / delta;
                Ok(delta * lambert_w0(y)? / (1.0 - xi))
            }
        }
    }

    /// `d rho / d xi` of the exact quantile at a solved pair `(xi, rho)`.
    pub fn drho_dxi(&self, xi: f64, rho: f64) -> f64 {
        rho * rho / (self.derived.delta + self.derived.l2 * (1.0 - xi) * rho)
    }

    /// Slope of whichever quantile `solver` evaluates. The large-`N` limit replaces
    /// `l2` by 1.
    pub fn drho_dxi_with(&self, xi: f64, rho: f64, solver: &RhoSolver) -> f64 {
        match solver.mode {
            RhoMode::Exact => self.drho_dxi(xi, rho),
            RhoMode::LargeN => rho * rho / (self.derived.delta + (1.0 - xi) * rho),
        }
    }

    /// Largest secrecy rate meeting the outage constraint at power share `xi`;
    /// zero where `rho(xi) >= kappa`.
    pub fn secrecy_rate(&self, xi: f64, solver: &RhoSolver) -> Result<f64> {
        let rho = self.rho(xi, solver)?;
        let kappa = self.kappa();
        if rho >= kappa {
            return Ok(0.0);
        }
        Ok((((1.0 + kappa * xi) / (1.0 + rho * xi)).log2()).max(0.0))
    }

    fn rate_slope_raw(&self, xi: f64, rho: f64, solver: &RhoSolver) -> f64 {
        let kappa = self.kappa();
        let slope = self.drho_dxi_with(xi, rho, solver);
        (kappa / (1.0 + kappa * xi) - (rho + xi * slope) / (1.0 + xi * rho)) / LN_2
    }

    /// `d R_S / d xi`; only defined where the constraint can be met.
    pub fn drs_dxi(&self, xi: f64, solver: &RhoSolver) -> Result<f64> {
        let rho = self.rho(xi, solver)?;
        if rho >= self.kappa() {
            return Err(Error::Infeasible(format!(
                "rho({xi}) = {rho} is not below kappa = {}",
                self.kappa()
            )));
        }
        Ok(self.rate_slope_raw(xi, rho, solver))
    }

    /// Rearranged full-power test: `L < delta^(1/alpha)` and
    /// `kappa > (delta L^(alpha/2) + L^alpha) / (delta - L^alpha)`.
    pub fn full_power_condition(&self) -> bool {
        let l = self.big_l();
        let alpha = self.config.alpha;
        let delta = self.derived.delta;
        let l_alpha = l.powf(alpha);
        l < delta.powf(1.0 / alpha)
            && self.kappa() > (delta * l.powf(alpha / 2.0) + l_alpha) / (delta - l_alpha)
    }

    /// Power share maximizing the secrecy rate, with the rate at it.
    pub fn optimal_par(&self, solver: &RhoSolver) -> Result<ParDecision> {
        let kappa = self.kappa();
        let rho_min = self.rho(0.0, solver)?;
        if kappa <= rho_min {
            return Ok(ParDecision::suspend());
        }
        let rho_one = solver.rho_max;
        if rho_one < kappa {
            let by_slope = self.rate_slope_raw(1.0, rho_one, solver) > 0.0;
            if by_slope != self.full_power_condition() {
                log::warn!(
                    "full-power tests disagree (slope says {by_slope}) at kappa = {kappa}, L = {}",
                    self.big_l()
                );
            }
            if by_slope {
                return Ok(ParDecision::full_power(self.secrecy_rate(1.0, solver)?));
            }
        }

        // the rate vanishes at xi_f where rho(xi_f) = kappa; the optimum lies below it
        let upper = if rho_one < kappa {
            1.0
        } else {
            let gap = |xi: f64| self.rho(xi, solver).map(|r| r - kappa).unwrap_or(f64::NAN);
            bisect(gap, Bracket::new(gap, 0.0, 1.0)?, solver.tol)?
        };
        let slope =
            |xi: f64| self.rho(xi, solver).map(|r| self.rate_slope_raw(xi, r, solver)).unwrap_or(f64::NAN);
        let xi = match Bracket::new(slope, 0.0, upper) {
            Ok(b) => bisect(slope, b, solver.tol)?,
            // no sign change within tolerance of the feasibility edge
            Err(_) => upper,
        };
        Ok(ParDecision::interior(xi, self.secrecy_rate(xi, solver)?))
    }

    /// Maximum secrecy rate; the same decision as [`Self::optimal_par`].
    pub fn max_rate(&self, solver: &RhoSolver) -> Result<ParDecision> {
        self.optimal_par(solver)
    }

    /// Quadratic-in-`rho` form of the stationarity condition; zero at an interior optimum.
    pub fn stationarity_residual(&self, xi: f64, rho: f64) -> f64 {
        let kappa = self.kappa();
        let DerivedParams { delta, l0, l2, .. } = self.derived;
        (kappa * xi * xi - l0 * xi + l2) * rho * rho + (l2 * kappa * xi - l2 * kappa + delta) * rho
            - delta * kappa
    }
}
