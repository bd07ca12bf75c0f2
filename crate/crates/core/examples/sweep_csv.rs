//! Build a sweep, run it on a worker pool and write CSV, as the `secrecy` binary does.
//!
//! ```text
//! cargo run --example sweep_csv [preset]
//! ```

use std::io;

use secrecy_core::config::ConfigFile;
use secrecy_core::sweep::{self, GridRange, SweepMode, SweepSpec, SweepVariable};

const SCENARIO: &str = r#"
[system]
n_antennas = 20
power_dbm = 0.0
alpha = 4.0
r_bob = 1.0
lambda_e = 2.0
tau = 0.0
gamma_hat = 20.0
"#;

fn main() -> secrecy_core::Result<()> {
    let specs = match std::env::args().nth(1) {
        Some(name) => sweep::preset(&name)?,
        None => {
            let file = ConfigFile::parse(SCENARIO)?;
            [0.01, 0.1]
                .map(|eps| {
                    SweepSpec::new(
                        SweepMode::RateOpt,
                        SweepVariable::Tau,
                        GridRange::new(0.0, 0.9, 10),
                        file.system,
                    )
                    .with_eps(eps)
                    .with_series(format!("eps={eps}"))
                })
                .to_vec()
        }
    };
    let table = sweep::run_sweeps(&specs, 0)?;
    table.write_csv(io::stdout().lock())
}
