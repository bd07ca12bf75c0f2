//! Outage-minimizing power share and its regime as the estimation error grows.
//!
//! ```text
//! cargo run --example optimal_outage
//! ```

use secrecy_core::sop::SopProblem;
use secrecy_core::SystemConfig;

fn main() -> secrecy_core::Result<()> {
    println!("{:>5} {:>10} {:>10} {:>12} {:>10}", "tau", "kappa", "xi*", "O*", "regime");
    for i in 0..=19 {
        let tau = 0.05 * i as f64;
        let config = SystemConfig {
            n_antennas: 20,
            power: 1.0,
            alpha: 4.0,
            r_bob: 1.0,
            lambda_e: 2.0,
            tau,
            gamma_hat: 20.0,
        };
        let p = SopProblem::new(config, 2.0)?;
        let d = p.min_sop();
        let cell = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.4e}"));
        println!(
            "{tau:>5.2} {:>10.3} {:>10} {:>12} {:>10}",
            config.kappa(),
            cell(d.xi),
            cell(d.objective),
            d.regime.as_str()
        );
    }
    Ok(())
}
