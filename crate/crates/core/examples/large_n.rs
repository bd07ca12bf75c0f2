//! Exact eavesdropper quantile against its large-antenna Lambert-W limit.
//!
//! ```text
//! cargo run --example large_n
//! ```

use secrecy_core::params::dbm_to_linear;
use secrecy_core::rate::{RateProblem, RhoSolver};
use secrecy_core::SystemConfig;

fn main() -> secrecy_core::Result<()> {
    for n in [8, 20, 64, 256] {
        let config = SystemConfig {
            n_antennas: n,
            power: dbm_to_linear(10.0),
            alpha: 4.0,
            r_bob: 1.0,
            lambda_e: 2.0,
            tau: 0.1,
            gamma_hat: n as f64,
        };
        let p = RateProblem::new(config, 0.01)?;
        let exact = RhoSolver::exact(&p);
        let approx = RhoSolver::large_n(&p);
        let gap = |xi: f64| -> secrecy_core::Result<f64> {
            let e = p.rho(xi, &exact)?;
            Ok((p.rho(xi, &approx)? - e) / e)
        };
        let r_exact = p.max_rate(&exact)?.objective.unwrap_or(0.0);
        let r_approx = p.max_rate(&approx)?.objective.unwrap_or(0.0);
        println!(
            "N = {n:>3}: rho gap at xi=0 {:>+7.2}%, at xi=0.5 {:>+7.2}%; R_S* exact {r_exact:.4}, large-N {r_approx:.4}",
            100.0 * gap(0.0)?,
            100.0 * gap(0.5)?
        );
    }
    Ok(())
}
