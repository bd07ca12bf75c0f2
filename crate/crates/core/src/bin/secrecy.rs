//! Command-line front end: sweeps, figure presets and validation suites.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use secrecy_core::config::ConfigFile;
use secrecy_core::numerics::DEFAULT_TOL;
use secrecy_core::rate::RhoMode;
use secrecy_core::sim::{Fidelity, McConfig};
use secrecy_core::sweep::{self, GridRange, SweepMode, SweepSpec, SweepTable, SweepVariable};
use secrecy_core::validate::{self, Settings, Suite};
use secrecy_core::Error;

#[derive(Parser)]
#[command(name = "secrecy", version, about = "Secrecy outage and secrecy rate design for AN beamforming")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form secrecy outage probability over a grid.
    SopCurve(SweepArgs),
    /// Outage-minimizing power share over a grid.
    SopOpt(SweepArgs),
    /// Secrecy rate under an outage constraint over a grid.
    RateCurve(SweepArgs),
    /// Rate-maximizing power share over a grid.
    RateOpt(SweepArgs),
    /// Closed-form outage against Monte-Carlo over a grid; exits 1 if any point misses 3 standard errors.
    McValidate(SweepArgs),
    /// Run a validation suite and print a JSON report; exits 1 on any failed check.
    Validate(ValidateArgs),
    /// Run a named figure preset.
    Sweep(PresetArgs),
}

#[derive(Args)]
struct Common {
    /// Base RNG seed [default: the file's monte_carlo.seed, else 1]
    #[arg(long)]
    seed: Option<u64>,
    /// Monte-Carlo trials per point [default: the file's monte_carlo.trials, else 100000, or 20000 for validate]
    #[arg(long)]
    trials: Option<u64>,
    /// Bisection tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 uses every core)
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Var {
    Xi,
    Tau,
    Rs,
    Eps,
    #[value(alias = "lambda_e")]
    LambdaE,
    #[value(alias = "power_dbm")]
    PowerDbm,
    #[value(alias = "n_antennas")]
    NAntennas,
}

impl From<Var> for SweepVariable {
    fn from(v: Var) -> Self {
        match v {
            Var::Xi => SweepVariable::Xi,
            Var::Tau => SweepVariable::Tau,
            Var::Rs => SweepVariable::Rs,
            Var::Eps => SweepVariable::Eps,
            Var::LambdaE => SweepVariable::LambdaE,
            Var::PowerDbm => SweepVariable::PowerDbm,
            Var::NAntennas => SweepVariable::NAntennas,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Rho {
    Exact,
    LargeN,
}

#[derive(Clone, Copy, ValueEnum)]
enum FidelityArg {
    Channel,
    Sinr,
}

#[derive(Args)]
struct SweepArgs {
    /// TOML scenario file; the built-in default scenario when absent
    #[arg(long)]
    config: Option<PathBuf>,
    /// Swept variable
    #[arg(long, value_enum)]
    var: Var,
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long, default_value_t = 50)]
    steps: usize,
    /// Fixed power share (curve and mc-validate modes)
    #[arg(long)]
    xi: Option<f64>,
    /// Fixed secrecy rate in bits/s/Hz; falls back to the file's [problem] rate
    #[arg(long)]
    rate: Option<f64>,
    /// Fixed outage threshold; falls back to the file's [problem] eps
    #[arg(long)]
    eps: Option<f64>,
    /// Quantile evaluation for the rate modes
    #[arg(long, value_enum, default_value = "exact")]
    rho_mode: Rho,
    /// Monte-Carlo fidelity
    #[arg(long, value_enum, default_value = "channel")]
    fidelity: FidelityArg,
    /// Keep gamma_hat equal to the antenna count
    #[arg(long)]
    gamma_tracks_n: bool,
    /// Label for the series column
    #[arg(long, default_value = "")]
    series: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ValidateArgs {
    /// Suite to run
    #[arg(value_parser = Suite::NAMES)]
    suite: String,
    /// TOML scenario file; the built-in default scenario when absent
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct PresetArgs {
    /// One of fig1 .. fig6
    #[arg(long, value_parser = sweep::PRESETS)]
    preset: String,
    #[command(flatten)]
    common: Common,
}

enum Outcome {
    Ok,
    ChecksFailed,
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Error::Config(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_table(table: &SweepTable, out: &Option<PathBuf>) -> Result<(), Error> {
    let text = table.to_csv_string()?;
    let mut w = output(out)?;
    match w.write_all(text.as_bytes()).and_then(|_| w.flush()) {
        // a closed pipe, as with `| head`, just ends the output
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => r.map_err(|e| Error::Config(format!("writing CSV: {e}"))),
    }
}

fn sweep_command(mode: SweepMode, a: SweepArgs) -> Result<Outcome, Error> {
    let defaults = Settings::default();
    let (base, problem, mc_file) = match &a.config {
        Some(p) => {
            let f = ConfigFile::load(p)?;
            (f.system, f.problem, f.monte_carlo)
        }
        None => (defaults.system, Default::default(), Default::default()),
    };
    let variable = SweepVariable::from(a.var);
    let mut spec =
        SweepSpec::new(mode, variable, GridRange::new(a.start, a.stop, a.steps), base).with_series(a.series);
    spec.xi = a.xi;
    spec.rate = a.rate.or(problem.rate).filter(|_| variable != SweepVariable::Rs);
    spec.eps = a.eps.or(problem.eps).filter(|_| variable != SweepVariable::Eps);
    spec.gamma_tracks_n = a.gamma_tracks_n;
    spec.rho_mode = match a.rho_mode {
        Rho::Exact => RhoMode::Exact,
        Rho::LargeN => RhoMode::LargeN,
    };
    spec.tol = a.common.tol;
    let fidelity = match a.fidelity {
        FidelityArg::Channel => Fidelity::ChannelLevel,
        FidelityArg::Sinr => Fidelity::SinrLevel,
    };
    let trials = a.common.trials.or(mc_file.trials).unwrap_or(100_000);
    let seed = a.common.seed.or(mc_file.seed).unwrap_or(1);
    spec.mc = McConfig::new(trials, seed).with_fidelity(fidelity);
    let table = sweep::run_sweeps(std::slice::from_ref(&spec), a.common.threads)?;
    write_table(&table, &a.common.out)?;
    let all_within = table.rows.iter().all(|r| r.mc.is_none_or(|m| m.within_3se));
    Ok(if all_within { Outcome::Ok } else { Outcome::ChecksFailed })
}

fn validate_command(a: ValidateArgs) -> Result<Outcome, Error> {
    let suite: Suite = a.suite.parse()?;
    let mut settings = match &a.config {
        Some(p) => Settings::from_file(&ConfigFile::load(p)?),
        None => Settings::default(),
    };
    if let Some(t) = a.common.trials {
        settings.trials = t;
    }
    if let Some(seed) = a.common.seed {
        settings.seed = seed;
    }
    settings.tol = a.common.tol;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.common.threads)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    let report = pool.install(|| validate::run(suite, &settings))?;
    let mut out = output(&a.common.out)?;
    writeln!(out, "{}", report.to_json()).map_err(|e| Error::Config(format!("writing report: {e}")))?;
    out.flush().map_err(|e| Error::Config(format!("writing report: {e}")))?;
    Ok(if report.passed { Outcome::Ok } else { Outcome::ChecksFailed })
}

fn preset_command(a: PresetArgs) -> Result<Outcome, Error> {
    let mut specs = sweep::preset(&a.preset)?;
    for s in &mut specs {
        s.tol = a.common.tol;
        if let Some(seed) = a.common.seed {
            s.mc.seed = seed;
        }
        if let Some(t) = a.common.trials {
            s.mc.trials = t;
        }
    }
    let table = sweep::run_sweeps(&specs, a.common.threads)?;
    write_table(&table, &a.common.out)?;
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::SopCurve(a) => sweep_command(SweepMode::SopCurve, a),
        Command::SopOpt(a) => sweep_command(SweepMode::SopOpt, a),
        Command::RateCurve(a) => sweep_command(SweepMode::RateCurve, a),
        Command::RateOpt(a) => sweep_command(SweepMode::RateOpt, a),
        Command::McValidate(a) => sweep_command(SweepMode::McValidate, a),
        Command::Validate(a) => validate_command(a),
        Command::Sweep(a) => preset_command(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
