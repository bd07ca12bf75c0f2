//! Secrecy outage probability against the power share for several antenna counts.
//!
//! ```text
//! cargo run --example outage_curve
//! ```

use secrecy_core::sop::SopProblem;
use secrecy_core::SystemConfig;

fn main() -> secrecy_core::Result<()> {
    println!("{:>6} {:>12} {:>12} {:>12}", "xi", "N=2", "N=4", "N=8");
    let problems = [2, 4, 8]
        .map(|n| {
            let config = SystemConfig {
                n_antennas: n,
                power: 10.0,
                alpha: 4.0,
                r_bob: 1.0,
                lambda_e: 2.0,
                tau: 0.3,
                gamma_hat: n as f64,
            };
            SopProblem::new(config, 2.0)
        })
        .into_iter()
        .collect::<secrecy_core::Result<Vec<_>>>()?;
    for i in 1..=20 {
        let xi = i as f64 / 20.0;
        print!("{xi:>6.2}");
        for p in &problems {
            // below omega the link to the receiver cannot carry the rate
            match p.sop(xi) {
                Ok(o) => print!(" {o:>12.4e}"),
                Err(_) => print!(" {:>12}", "-"),
            }
        }
        println!();
    }
    Ok(())
}
