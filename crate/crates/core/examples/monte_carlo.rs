//! Closed-form secrecy outage against the channel-level Monte-Carlo simulator.
//!
//! ```text
//! cargo run --release --example monte_carlo
//! ```

use secrecy_core::sim::{empirical_sop, McConfig};
use secrecy_core::sop::SopProblem;
use secrecy_core::sweep::combined_std_err;
use secrecy_core::SystemConfig;

fn main() -> secrecy_core::Result<()> {
    let config = SystemConfig {
        n_antennas: 4,
        power: 10.0,
        alpha: 4.0,
        r_bob: 1.0,
        lambda_e: 2.0,
        tau: 0.3,
        gamma_hat: 4.0,
    };
    let rate = 2.0;
    let p = SopProblem::new(config, rate)?;
    println!("{:>6} {:>10} {:>10} {:>10} {:>8}", "xi", "closed", "mc", "std_err", "z");
    for (i, xi) in [0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0].into_iter().enumerate() {
        let closed = p.sop(xi)?;
        let est = empirical_sop(&config, rate, xi, &McConfig::new(50_000, 1 + i as u64))?;
        let se = combined_std_err(est.std_err, closed, est.trials);
        println!(
            "{xi:>6.2} {closed:>10.5} {:>10.5} {:>10.5} {:>8.2}",
            est.mean,
            est.std_err,
            (est.mean - closed) / se
        );
    }
    Ok(())
}
