//! Scenario generators shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secrecy_core::params::dbm_to_linear;
use secrecy_core::rate::{RateProblem, RhoSolver};
use secrecy_core::sop::SopProblem;
use secrecy_core::{Regime, SystemConfig};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scenario(n: usize, power: f64, tau: f64, lambda_e: f64) -> SystemConfig {
    SystemConfig { n_antennas: n, power, alpha: 4.0, r_bob: 1.0, lambda_e, tau, gamma_hat: n as f64 }
}

/// Outage figure with `P = 10`, `tau = 0.3`, `lambda_e = 2`.
pub fn fig1(n: usize) -> SystemConfig {
    scenario(n, 10.0, 0.3, 2.0)
}

/// Rate figure with `N = gamma = 20` at `tau`.
pub fn fig5(tau: f64, lambda_e: f64) -> SystemConfig {
    scenario(20, 1.0, tau, lambda_e)
}

pub fn fig6(p_dbm: f64, tau: f64) -> SystemConfig {
    scenario(20, dbm_to_linear(p_dbm), tau, 2.0)
}

pub fn random_config<R: Rng>(rng: &mut R) -> SystemConfig {
    let n = rng.random_range(2..=32);
    SystemConfig {
        n_antennas: n,
        power: 10f64.powf(rng.random_range(-1.0..3.0)),
        alpha: rng.random_range(2.5..5.0),
        r_bob: rng.random_range(0.5..2.0),
        lambda_e: 10f64.powf(rng.random_range(-1.0..1.0)),
        tau: rng.random_range(0.0..0.9),
        gamma_hat: n as f64 * rng.random_range(0.5..1.5),
    }
}

/// Outage problems whose optimum is strictly interior.
pub fn interior_sop_problems(count: usize, seed: u64) -> Vec<SopProblem> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = random_config(&mut rng);
        let p = SopProblem::new(c, rng.random_range(0.25..4.0)).unwrap();
        if p.optimal_par().regime == Regime::Interior {
            out.push(p);
        }
    }
    out
}

/// Rate problem; densities reach down to 1e-2 so that full power occurs.
pub fn random_rate_problem<R: Rng>(rng: &mut R) -> RateProblem {
    let c = SystemConfig { lambda_e: 10f64.powf(rng.random_range(-2.0..1.0)), ..random_config(rng) };
    RateProblem::new(c, 10f64.powf(rng.random_range(-3.0..-0.3))).unwrap()
}

/// Rate problems with a transmitting optimum, filtered by `keep`.
pub fn rate_problems(count: usize, seed: u64, keep: impl Fn(Regime) -> bool) -> Vec<RateProblem> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_rate_problem(&mut rng);
        let d = p.optimal_par(&RhoSolver::exact(&p)).unwrap();
        if keep(d.regime) {
            out.push(p);
        }
    }
    out
}

/// Copy of `config` with `gamma_hat` scaled so that `kappa` equals `target`.
pub fn with_kappa(config: SystemConfig, target: f64) -> SystemConfig {
    let k = config.kappa();
    SystemConfig { gamma_hat: config.gamma_hat * target / k, ..config }
}

pub fn log_space(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a * (b / a).powf(i as f64 / (n - 1) as f64)).collect()
}

pub fn lin_space(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}
