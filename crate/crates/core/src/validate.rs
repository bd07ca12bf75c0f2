//! Self-checking validation suites with a JSON report.
//!
//! Each suite checks one family of results against an independent oracle (grid
//! search, finite differences, Monte-Carlo) on the configured scenario and on
//! sweeps around it. A check records its tolerance and the observed value.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::config::ConfigFile;
use crate::error::{Error, Result};
use crate::numerics::{bisect, cubic_root_bisect, cubic_root_in_interval, Bracket, DEFAULT_TOL};
use crate::params::{ParDecision, Regime, SystemConfig};
use crate::rate::{RateProblem, RhoMode, RhoSolver};
use crate::sim::{empirical_gamma_e_cdf, empirical_sop, McConfig};
use crate::sop::{max_eve_sinr_cdf, SopProblem};
use crate::sweep::combined_std_err;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemma1,
    Thm1,
    Lemma2,
    Thm2,
    Props,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["lemma1", "thm1", "lemma2", "thm2", "props", "all"];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Thm1 => "thm1",
            Suite::Lemma2 => "lemma2",
            Suite::Thm2 => "thm2",
            Suite::Props => "props",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemma1" => Suite::Lemma1,
            "thm1" => Suite::Thm1,
            "lemma2" => Suite::Lemma2,
            "thm2" => Suite::Thm2,
            "props" => Suite::Props,
            "all" => Suite::All,
            _ => {
                return Err(Error::Config(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

/// Scenario and effort settings for a validation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub system: SystemConfig,
    pub rate: f64,
    pub eps: f64,
    pub trials: u64,
    pub seed: u64,
    pub tol: f64,
}

/// Trials per Monte-Carlo point unless overridden.
pub const DEFAULT_TRIALS: u64 = 20_000;

/// Largest tolerated worst-case standard error `0.5 / sqrt(trials)`.
pub const MAX_STD_ERR: f64 = 0.01;

impl Default for Settings {
    fn default() -> Self {
        Settings {
            system: SystemConfig {
                n_antennas: 8,
                power: 10.0,
                alpha: 4.0,
                r_bob: 1.0,
                lambda_e: 2.0,
                tau: 0.3,
                gamma_hat: 8.0,
            },
            rate: 2.0,
            eps: 0.01,
            trials: DEFAULT_TRIALS,
            seed: 1,
            tol: DEFAULT_TOL,
        }
    }
}

impl Settings {
    /// Settings from a parsed file; absent problem and Monte-Carlo keys keep their defaults.
    pub fn from_file(file: &ConfigFile) -> Self {
        let d = Settings::default();
        Settings {
            system: file.system,
            rate: file.problem.rate.unwrap_or(d.rate),
            eps: file.problem.eps.unwrap_or(d.eps),
            trials: file.monte_carlo.trials.unwrap_or(d.trials),
            seed: file.monte_carlo.seed.unwrap_or(d.seed),
            tol: d.tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub tolerance: f64,
    pub observed: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Check {
    /// Passes when `observed <= tolerance`.
    pub fn at_most(name: impl Into<String>, observed: f64, tolerance: f64) -> Self {
        let passed = observed <= tolerance;
        Check { name: name.into(), tolerance, observed, passed, reason: None }
    }

    /// Passes when `observed > 0`.
    pub fn positive(name: impl Into<String>, observed: f64) -> Self {
        Check { name: name.into(), tolerance: 0.0, observed, passed: observed > 0.0, reason: None }
    }

    pub fn failed(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            tolerance: 0.0,
            observed: f64::NAN,
            passed: false,
            reason: Some(reason.into()),
        }
    }

    fn because(mut self, reason: &str) -> Self {
        if !self.passed {
            self.reason = Some(reason.into());
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Run `suite`. Errors only on an unusable scenario; failed checks land in the report.
pub fn run(suite: Suite, settings: &Settings) -> Result<Report> {
    settings.system.validate().map_err(|e| Error::Config(e.to_string()))?;
    if !(settings.rate > 0.0) || !(settings.eps > 0.0 && settings.eps < 1.0) {
        return Err(Error::Config(format!(
            "validation needs rate > 0 and 0 < eps < 1, got rate = {}, eps = {}",
            settings.rate, settings.eps
        )));
    }
    let mut checks = Vec::new();
    let suites: &[Suite] = match suite {
        Suite::All => &[Suite::Lemma1, Suite::Thm1, Suite::Lemma2, Suite::Thm2, Suite::Props],
        _ => std::slice::from_ref(&suite),
    };
    for s in suites {
        match s {
            Suite::Lemma1 => lemma1(settings, &mut checks)?,
            Suite::Thm1 => thm1(settings, &mut checks)?,
            Suite::Lemma2 => lemma2(settings, &mut checks)?,
            Suite::Thm2 => thm2(settings, &mut checks)?,
            Suite::Props => props(settings, &mut checks)?,
            Suite::All => unreachable!(),
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(Report { suite: suite.as_str().to_string(), passed, checks })
}

/// `xi` grid `omega + step * k` over `(omega, 1]`, with 1 always included.
fn feasible_grid(omega: f64, step: f64) -> Vec<f64> {
    let lo = omega.max(0.0);
    let mut v: Vec<f64> = (1..).map(|k| lo + step * k as f64).take_while(|&x| x < 1.0).collect();
    v.push(1.0);
    v
}

/// Minimizer of the closed-form outage over a `step`-spaced grid of `(omega, 1]`.
///
/// The outage is increasing in the factor `J`, which is compared instead because
/// it keeps full resolution where the outage itself rounds to 0 or 1.
pub fn grid_argmin_sop(problem: &SopProblem, step: f64) -> Option<f64> {
    let omega = problem.terms().omega;
    if omega >= 1.0 {
        return None;
    }
    let mut best = (f64::INFINITY, 1.0);
    for xi in feasible_grid(omega, step) {
        if let Ok(o) = problem.j_factor(xi) {
            if o < best.0 {
                best = (o, xi);
            }
        }
    }
    Some(best.1)
}

/// Maximizer of the secrecy rate over a `step`-spaced grid of `[0, 1]`;
/// `None` when the rate is zero everywhere.
pub fn grid_argmax_rate(problem: &RateProblem, solver: &RhoSolver, step: f64) -> Result<Option<f64>> {
    let n = (1.0 / step).round() as usize;
    let mut best = (0.0, None);
    for k in 0..=n {
        let xi = (k as f64 * step).min(1.0);
        let r = problem.secrecy_rate(xi, solver)?;
        if r > best.0 {
            best = (r, Some(xi));
        }
    }
    Ok(best.1)
}

/// Number of consecutive pairs of `(key, value)` (ordered by key) where `value`
/// fails to move in direction `sign` by more than `slack`.
pub fn order_violations(points: &[(f64, f64)], sign: f64, slack: f64) -> usize {
    let mut p = points.to_vec();
    p.sort_by(|a, b| a.0.total_cmp(&b.0));
    p.windows(2).filter(|w| sign * (w[1].1 - w[0].1) <= -slack).count()
}

/// Like [`order_violations`] but also flags ties, for strict monotonicity.
pub fn strict_violations(points: &[(f64, f64)], sign: f64) -> usize {
    let mut p = points.to_vec();
    p.sort_by(|a, b| a.0.total_cmp(&b.0));
    p.windows(2).filter(|w| sign * (w[1].1 - w[0].1) <= 0.0).count()
}

/// `|K(xi)|` over the sum of the magnitudes of its terms.
pub fn scaled_cubic_residual(problem: &SopProblem, xi: f64) -> f64 {
    let (a, b, c) = problem.cubic_coeffs();
    let scale = xi.powi(3).abs() + (a * xi * xi).abs() + (b * xi).abs() + c.abs();
    problem.k_cubic(xi).abs() / scale.max(f64::MIN_POSITIVE)
}

/// `|A(xi)|` over the sum of the magnitudes of its terms.
pub fn scaled_stationarity_residual(problem: &RateProblem, xi: f64, rho: f64) -> f64 {
    let kappa = problem.kappa();
    let d = problem.derived;
    let scale = (kappa * xi * xi + d.l0 * xi + d.l2) * rho * rho
        + (d.l2 * kappa * xi + d.l2 * kappa + d.delta) * rho
        + d.delta * kappa;
    problem.stationarity_residual(xi, rho).abs() / scale
}

fn lemma1(s: &Settings, checks: &mut Vec<Check>) -> Result<()> {
    let worst_se = 0.5 / (s.trials as f64).sqrt();
    let guard = Check::at_most("lemma1.precision", worst_se, MAX_STD_ERR).because("std_err too large");
    let precise = guard.passed;
    checks.push(guard);
    if !precise {
        return Ok(());
    }
    let problem = SopProblem::new(s.system, s.rate)?;
    let omega = problem.terms().omega;
    if omega >= 1.0 {
        checks.push(Check::failed(
            "lemma1.feasible",
            "the target rate exceeds the legitimate link at every xi",
        ));
        return Ok(());
    }
    let base = McConfig::new(s.trials, s.seed);
    for i in 1..=5u64 {
        let xi = omega + (1.0 - omega) * i as f64 / 5.0;
        let cf = problem.sop(xi)?;
        let est = empirical_sop(&s.system, s.rate, xi, &McConfig { seed: s.seed.wrapping_add(i), ..base })?;
        let se = combined_std_err(est.std_err, cf, est.trials);
        checks.push(Check::at_most(format!("lemma1.sop[xi={xi:.4}]"), (est.mean - cf).abs(), 3.0 * se));
    }
    if s.system.lambda_e > 0.0 {
        let xi = omega + (1.0 - omega) * 0.6;
        let cdf = |lx: f64| max_eve_sinr_cdf(&s.system, xi, lx.exp()).unwrap_or(f64::NAN) - 0.5;
        let lx = bisect(cdf, Bracket::new(cdf, -60.0, 60.0)?, 1e-12)?;
        let est = empirical_gamma_e_cdf(
            &s.system,
            xi,
            &[lx.exp()],
            &McConfig { seed: s.seed.wrapping_add(99), ..base },
        )?[0];
        let se = combined_std_err(est.std_err, 0.5, est.trials);
        checks.push(Check::at_most("lemma1.max_sinr_cdf_at_median", (est.mean - 0.5).abs(), 3.0 * se));
    }
    Ok(())
}

fn thm1(s: &Settings, checks: &mut Vec<Check>) -> Result<()> {
    let problem = SopProblem::new(s.system, s.rate)?;
    let d = problem.optimal_par();
    let terms = problem.terms();
    let kappa = problem.derived.kappa;
    match d.regime {
        Regime::Suspend => {
            checks.push(Check::at_most("thm1.suspend_threshold", kappa - (terms.t_pow - 1.0), 0.0));
        }
        Regime::FullPower => {
            let grid = grid_argmin_sop(&problem, 1e-4).unwrap_or(1.0);
            checks.push(Check::at_most("thm1.full_power_vs_grid", 1.0 - grid, 1e-3));
        }
        Regime::Interior => {
            let xi = d.xi.expect("interior xi");
            let grid = grid_argmin_sop(&problem, 1e-4).expect("feasible");
            checks.push(Check::at_most("thm1.argmin_vs_grid", (xi - grid).abs(), 1e-3));
            checks.push(Check::at_most("thm1.cubic_residual", scaled_cubic_residual(&problem, xi), 1e-9));
            let (a, b, c) = problem.cubic_coeffs();
            let fast = cubic_root_in_interval(a, b, c, terms.omega, 1.0)?;
            let slow = cubic_root_bisect(a, b, c, terms.omega, 1.0)?;
            checks.push(Check::at_most("thm1.cardano_vs_bisection", (fast - slow).abs(), 1e-8));
        }
    }
    Ok(())
}

fn tight_solver(problem: &RateProblem) -> Result<RhoSolver> {
    RhoSolver::new(problem, RhoMode::Exact, 1e-14)
}

fn lemma2(s: &Settings, checks: &mut Vec<Check>) -> Result<()> {
    let problem = RateProblem::new(s.system, s.eps)?;
    if s.system.lambda_e == 0.0 {
        checks.push(Check::failed("lemma2.quantile", "no eavesdroppers: the quantile is identically zero"));
        return Ok(());
    }
    let solver = tight_solver(&problem)?;
    let rho: Vec<f64> = (0..200).map(|i| problem.rho(i as f64 / 199.0, &solver)).collect::<Result<_>>()?;
    let first = rho.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let second = rho.windows(3).map(|w| w[2] - 2.0 * w[1] + w[0]).fold(f64::INFINITY, f64::min);
    checks.push(Check::positive("lemma2.min_first_difference", first));
    checks.push(Check::positive("lemma2.min_second_difference", second));
    let mut worst: f64 = 0.0;
    for xi in [0.2, 0.4, 0.6, 0.8] {
        let h = 1e-5;
        let fd = (problem.rho(xi + h, &solver)? - problem.rho(xi - h, &solver)?) / (2.0 * h);
        let an = problem.drho_dxi(xi, problem.rho(xi, &solver)?);
        worst = worst.max((an - fd).abs() / an.abs());
    }
    checks.push(Check::at_most("lemma2.derivative_vs_finite_difference", worst, 1e-5));
    Ok(())
}

fn thm2(s: &Settings, checks: &mut Vec<Check>) -> Result<()> {
    let problem = RateProblem::new(s.system, s.eps)?;
    let solver = RhoSolver::new(&problem, RhoMode::Exact, s.tol)?;
    let d = problem.optimal_par(&solver)?;

    let feasible: Vec<f64> = (0..200)
        .map(|i| i as f64 / 199.0)
        .map(|xi| problem.secrecy_rate(xi, &solver))
        .collect::<Result<_>>()?;
    let second = feasible
        .windows(3)
        .filter(|w| w.iter().all(|&r| r > 0.0))
        .map(|w| w[2] - 2.0 * w[1] + w[0])
        .fold(f64::NEG_INFINITY, f64::max);
    if second.is_finite() {
        checks.push(Check::at_most("thm2.concave", second, 1e-8));
    }

    match d.regime {
        Regime::Suspend => {
            let rho_min = problem.rho(0.0, &solver)?;
            checks.push(Check::at_most("thm2.suspend_threshold", problem.kappa() - rho_min, 0.0));
        }
        Regime::FullPower | Regime::Interior => {
            let xi = d.xi.expect("xi present");
            let grid = grid_argmax_rate(&problem, &solver, 1e-4)?.unwrap_or(0.0);
            checks.push(Check::at_most("thm2.argmax_vs_grid", (xi - grid).abs(), 1e-3));
            checks.push(constraint_activity(&problem, &d)?);
            if d.regime == Regime::Interior {
                let tight = tight_solver(&problem)?;
                let dt = problem.optimal_par(&tight)?;
                if let Some(xt) = dt.xi {
                    let r = problem.rho(xt, &tight)?;
                    checks.push(Check::at_most(
                        "thm2.stationarity_identity",
                        scaled_stationarity_residual(&problem, xt, r),
                        1e-8,
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Outage at the optimum, evaluated by the closed form at the optimal rate:
/// equal to `eps` when the constraint binds, at most `eps` at full power.
pub fn constraint_activity(problem: &RateProblem, d: &ParDecision) -> Result<Check> {
    let (xi, r) = match (d.xi, d.objective) {
        (Some(x), Some(r)) if r > 0.0 => (x, r),
        _ => return Ok(Check::failed("thm2.constraint_activity", "no positive rate at the optimum")),
    };
    let sop = SopProblem::new(problem.config, r)?.sop(xi)?;
    let eps = problem.eps;
    // rate and constraint carry relative error from the quantile solve
    let slack = 1e-6;
    let check = if sop >= eps - slack || d.regime == Regime::Interior {
        Check::at_most("thm2.constraint_activity", (sop - eps).abs(), slack)
    } else {
        Check::at_most("thm2.constraint_slack", sop - eps, 0.0)
    };
    Ok(check)
}

fn interior_points(values: &[(f64, ParDecision)]) -> Vec<(f64, f64)> {
    values
        .iter()
        .filter(|(_, d)| d.regime == Regime::Interior)
        .map(|(k, d)| (*k, d.xi.expect("interior xi")))
        .collect()
}

fn monotone_check(name: &str, points: &[(f64, f64)], sign: f64, strict: bool) -> Check {
    if points.len() < 2 {
        return Check::failed(name, "fewer than two interior points on the sweep");
    }
    let v = if strict { strict_violations(points, sign) } else { order_violations(points, sign, 1e-9) };
    Check::at_most(name, v as f64, 0.0)
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

fn props(s: &Settings, checks: &mut Vec<Check>) -> Result<()> {
    let with_tau = |tau: f64| SystemConfig { tau, ..s.system };

    // outage minimization, sweeping tau to move kappa
    let sop_tau: Vec<(f64, ParDecision)> = linspace(0.0, 0.99, 100)
        .map(|t| SopProblem::new(with_tau(t), s.rate).map(|p| (p.derived.kappa, p.optimal_par())))
        .collect::<Result<_>>()?;
    checks.push(monotone_check("prop1.xi_decreasing_in_kappa", &interior_points(&sop_tau), -1.0, true));

    let kappa = s.system.kappa();
    let r_cap = (1.0 + kappa).log2();
    let sop_rate: Vec<(f64, ParDecision)> = linspace(0.01 * r_cap, 0.99 * r_cap, 100)
        .map(|r| SopProblem::new(s.system, r).map(|p| (r, p.optimal_par())))
        .collect::<Result<_>>()?;
    checks.push(monotone_check("prop1.xi_nondecreasing_in_rate", &interior_points(&sop_rate), 1.0, false));

    let mut below = 0usize;
    for &(r, d) in &sop_rate {
        if let (Regime::Interior, Some(xi)) = (d.regime, d.xi) {
            let omega = SopProblem::new(s.system, r)?.terms().omega;
            below += usize::from(xi <= omega.sqrt());
        }
    }
    checks.push(Check::at_most("prop1.xi_above_sqrt_omega", below as f64, 0.0));

    // rate maximization
    let rate_opt = |config: SystemConfig, eps: f64| -> Result<(f64, ParDecision)> {
        let p = RateProblem::new(config, eps)?;
        let solver = RhoSolver::new(&p, RhoMode::Exact, s.tol)?;
        Ok((p.kappa(), p.optimal_par(&solver)?))
    };
    let rate_tau: Vec<(f64, ParDecision)> =
        linspace(0.0, 0.99, 100).map(|t| rate_opt(with_tau(t), s.eps)).collect::<Result<_>>()?;
    checks.push(monotone_check("prop2.xi_increasing_in_kappa", &interior_points(&rate_tau), 1.0, true));

    let lam0 = if s.system.lambda_e > 0.0 { s.system.lambda_e } else { 1.0 };
    let rate_lam: Vec<(f64, ParDecision)> = linspace(0.25 * lam0, 4.0 * lam0, 100)
        .map(|l| rate_opt(SystemConfig { lambda_e: l, ..s.system }, s.eps).map(|(_, d)| (l, d)))
        .collect::<Result<_>>()?;
    checks.push(monotone_check("rate.xi_decreasing_in_lambda_e", &interior_points(&rate_lam), -1.0, true));

    let rate_eps: Vec<(f64, ParDecision)> = linspace(1e-3, 0.5, 100)
        .map(|e| rate_opt(s.system, e).map(|(_, d)| (e, d)))
        .collect::<Result<_>>()?;
    checks.push(monotone_check("rate.xi_increasing_in_eps", &interior_points(&rate_eps), 1.0, true));
    Ok(())
}
