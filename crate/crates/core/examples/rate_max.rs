//! Secrecy rate under an outage constraint: the curve over the power share and its maximum.
//!
//! ```text
//! cargo run --example rate_max
//! ```

use secrecy_core::rate::{RateProblem, RhoSolver};
use secrecy_core::SystemConfig;

fn main() -> secrecy_core::Result<()> {
    let config = SystemConfig {
        n_antennas: 8,
        power: 10.0,
        alpha: 4.0,
        r_bob: 1.0,
        lambda_e: 5.0,
        tau: 0.2,
        gamma_hat: 8.0,
    };
    let p = RateProblem::new(config, 0.01)?;
    let solver = RhoSolver::exact(&p);
    println!("kappa = {:.3}, rho_max = {:.3}", p.kappa(), p.rho_max());
    println!("{:>6} {:>10} {:>10}", "xi", "rho", "R_S");
    for i in 0..=20 {
        let xi = i as f64 / 20.0;
        println!("{xi:>6.2} {:>10.4} {:>10.4}", p.rho(xi, &solver)?, p.secrecy_rate(xi, &solver)?);
    }
    let best = p.max_rate(&solver)?;
    println!(
        "optimum: {} at xi = {:.4} with R_S = {:.4} bits/s/Hz",
        best.regime.as_str(),
        best.xi.unwrap_or(f64::NAN),
        best.objective.unwrap_or(0.0)
    );
    Ok(())
}
