//! Parameter sweeps and the figure presets.
//!
//! A [`SweepSpec`] names one swept variable, a linear grid, a base configuration and
//! whatever the mode needs held fixed. [`run_sweep`] evaluates the grid on a worker
//! pool and returns rows in grid order; [`SweepTable::write_csv`] emits them.
//!
//! CSV columns:
//!
//! | mode | header |
//! |------|--------|
//! | `sop-curve`, `rate-curve` | `series,<var>,xi,objective,regime` with regime `feasible` or `infeasible` |
//! | `sop-opt`, `rate-opt` | `series,<var>,xi,objective,regime` with regime `suspend`, `full_power` or `interior` |
//! | `mc-validate` | `series,<var>,xi,closed_form,mc_mean,mc_std_err,trials,seed,within_3se` |
//!
//! When `xi` itself is swept the separate `xi` column is omitted. Suspended rows
//! leave `xi` and `objective` empty. Floats use the shortest
//! representation that round-trips, so output is byte-stable.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::DEFAULT_TOL;
use crate::params::{dbm_to_linear, SystemConfig};
use crate::rate::{RateProblem, RhoMode, RhoSolver};
use crate::sim::{empirical_sop, McConfig};
use crate::sop::SopProblem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    Xi,
    Tau,
    Rs,
    Eps,
    LambdaE,
    PowerDbm,
    NAntennas,
}

impl SweepVariable {
    pub const ALL: [SweepVariable; 7] = [
        SweepVariable::Xi,
        SweepVariable::Tau,
        SweepVariable::Rs,
        SweepVariable::Eps,
        SweepVariable::LambdaE,
        SweepVariable::PowerDbm,
        SweepVariable::NAntennas,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SweepVariable::Xi => "xi",
            SweepVariable::Tau => "tau",
            SweepVariable::Rs => "rs",
            SweepVariable::Eps => "eps",
            SweepVariable::LambdaE => "lambda_e",
            SweepVariable::PowerDbm => "power_dbm",
            SweepVariable::NAntennas => "n_antennas",
        }
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepVariable::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown sweep variable {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    SopCurve,
    SopOpt,
    RateCurve,
    RateOpt,
    McValidate,
}

impl SweepMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweepMode::SopCurve => "sop-curve",
            SweepMode::SopOpt => "sop-opt",
            SweepMode::RateCurve => "rate-curve",
            SweepMode::RateOpt => "rate-opt",
            SweepMode::McValidate => "mc-validate",
        }
    }

    fn needs_xi(&self) -> bool {
        matches!(self, SweepMode::SopCurve | SweepMode::RateCurve | SweepMode::McValidate)
    }

    fn needs_rate(&self) -> bool {
        matches!(self, SweepMode::SopCurve | SweepMode::SopOpt | SweepMode::McValidate)
    }

    fn needs_eps(&self) -> bool {
        matches!(self, SweepMode::RateCurve | SweepMode::RateOpt)
    }
}

/// Linear grid of `steps` points from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridRange {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl GridRange {
    pub fn new(start: f64, stop: f64, steps: usize) -> Self {
        GridRange { start, stop, steps }
    }

    pub fn values(&self) -> Vec<f64> {
        let span = self.stop - self.start;
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| if i + 1 == self.steps { self.stop } else { self.start + span * i as f64 / last })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub variable: SweepVariable,
    pub range: GridRange,
    pub base: SystemConfig,
    /// Fixed power share for the curve and Monte-Carlo modes.
    pub xi: Option<f64>,
    /// Fixed target secrecy rate for the outage modes.
    pub rate: Option<f64>,
    /// Fixed outage threshold for the rate modes.
    pub eps: Option<f64>,
    /// Keep `gamma_hat` equal to the antenna count at every grid point.
    #[serde(default)]
    pub gamma_tracks_n: bool,
    #[serde(default)]
    pub rho_mode: RhoMode,
    pub tol: f64,
    pub mc: McConfig,
    /// Label written in the first column.
    pub series: String,
}

impl SweepSpec {
    pub fn new(mode: SweepMode, variable: SweepVariable, range: GridRange, base: SystemConfig) -> Self {
        SweepSpec {
            mode,
            variable,
            range,
            base,
            xi: None,
            rate: None,
            eps: None,
            gamma_tracks_n: false,
            rho_mode: RhoMode::Exact,
            tol: DEFAULT_TOL,
            mc: McConfig::new(100_000, 1),
            series: String::new(),
        }
    }

    pub fn with_xi(mut self, xi: f64) -> Self {
        self.xi = Some(xi);
        self
    }

    pub fn with_rate(mut self, rate: f64) -> Self {
        self.rate = Some(rate);
        self
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = Some(eps);
        self
    }

    pub fn with_series(mut self, series: impl Into<String>) -> Self {
        self.series = series.into();
        self
    }

    pub fn with_rho_mode(mut self, mode: RhoMode) -> Self {
        self.rho_mode = mode;
        self
    }

    pub fn tracking_gamma(mut self) -> Self {
        self.gamma_tracks_n = true;
        self
    }

    /// Check the grid and the fixed parameters; errors name the violated invariant.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        let GridRange { start, stop, steps } = self.range;
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return bad(format!("sweep range needs start < stop, got {start} .. {stop}"));
        }
        if steps < 2 {
            return bad(format!("sweep range needs steps >= 2, got {steps}"));
        }
        let var = self.variable;
        let fixed = match var {
            SweepVariable::Xi => self.xi.is_some(),
            SweepVariable::Rs => self.rate.is_some(),
            SweepVariable::Eps => self.eps.is_some(),
            _ => false,
        };
        if fixed {
            return bad(format!("swept variable {var} is also fixed"));
        }
        let mode = self.mode;
        let (needs_xi, needs_rate, needs_eps) = (mode.needs_xi(), mode.needs_rate(), mode.needs_eps());
        if var == SweepVariable::Xi && !needs_xi {
            return bad(format!("{} chooses xi itself; sweep another variable", mode.as_str()));
        }
        if var == SweepVariable::Rs && !needs_rate || var == SweepVariable::Eps && !needs_eps {
            return bad(format!("{} does not use {var}", mode.as_str()));
        }
        if needs_xi && var != SweepVariable::Xi && self.xi.is_none() {
            return bad(format!("{} needs a fixed xi", mode.as_str()));
        }
        if needs_rate && var != SweepVariable::Rs && self.rate.is_none() {
            return bad(format!("{} needs a fixed secrecy rate", mode.as_str()));
        }
        if needs_eps && var != SweepVariable::Eps && self.eps.is_none() {
            return bad(format!("{} needs a fixed outage threshold eps", mode.as_str()));
        }
        if var == SweepVariable::NAntennas && start < 2.0 {
            return bad(format!("n_antennas sweep must start at 2 or more, got {start}"));
        }
        if !(self.tol > 0.0) {
            return bad(format!("tolerance must be positive, got {}", self.tol));
        }
        if mode == SweepMode::McValidate {
            self.mc.validate().map_err(|e| Error::Config(e.to_string()))?;
        }
        Ok(())
    }

    /// The grid point values of the swept variable.
    pub fn grid(&self) -> Vec<f64> {
        let mut values = self.range.values();
        if self.variable == SweepVariable::NAntennas {
            values.iter_mut().for_each(|v| *v = v.round());
            values.dedup();
        }
        values
    }

    fn point(&self, value: f64) -> Result<Point> {
        let mut config = self.base;
        let (mut xi, mut rate, mut eps) = (self.xi, self.rate, self.eps);
        match self.variable {
            SweepVariable::Xi => xi = Some(value),
            SweepVariable::Tau => config.tau = value,
            SweepVariable::Rs => rate = Some(value),
            SweepVariable::Eps => eps = Some(value),
            SweepVariable::LambdaE => config.lambda_e = value,
            SweepVariable::PowerDbm => config.power = dbm_to_linear(value),
            SweepVariable::NAntennas => config.n_antennas = value as usize,
        }
        if self.gamma_tracks_n {
            config.gamma_hat = config.n();
        }
        let at = |e: Error| Error::Config(format!("at {} = {value}: {e}", self.variable));
        config.validate().map_err(at)?;
        if let Some(x) = xi {
            if !(0.0..=1.0).contains(&x) {
                return Err(at(Error::Domain(format!("power share must lie in [0, 1], got {x}"))));
            }
        }
        Ok(Point { config, xi, rate, eps })
    }
}

struct Point {
    config: SystemConfig,
    xi: Option<f64>,
    rate: Option<f64>,
    eps: Option<f64>,
}

/// Monte-Carlo columns of an `mc-validate` row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McColumns {
    pub closed_form: f64,
    pub mean: f64,
    pub std_err: f64,
    pub trials: u64,
    pub seed: u64,
    pub within_3se: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub series: String,
    pub value: f64,
    pub xi: Option<f64>,
    pub objective: Option<f64>,
    pub regime: &'static str,
    pub mc: Option<McColumns>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub mode: SweepMode,
    pub variable: SweepVariable,
    pub rows: Vec<SweepRow>,
}

fn cell(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl SweepTable {
    pub fn header(&self) -> Vec<String> {
        let var = self.variable.as_str();
        let cols: &[&str] = match self.mode {
            SweepMode::McValidate => {
                &["series", var, "xi", "closed_form", "mc_mean", "mc_std_err", "trials", "seed", "within_3se"]
            }
            _ => &["series", var, "xi", "objective", "regime"],
        };
        cols.iter()
            .enumerate()
            .filter(|&(i, _)| !(i == 2 && self.variable == SweepVariable::Xi))
            .map(|(_, s)| s.to_string())
            .collect()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::Config(format!("writing CSV: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.header()).map_err(io)?;
        for row in &self.rows {
            let mut rec = vec![row.series.clone(), row.value.to_string()];
            if self.variable != SweepVariable::Xi {
                rec.push(cell(row.xi));
            }
            match row.mc {
                Some(mc) => rec.extend([
                    mc.closed_form.to_string(),
                    mc.mean.to_string(),
                    mc.std_err.to_string(),
                    mc.trials.to_string(),
                    mc.seed.to_string(),
                    mc.within_3se.to_string(),
                ]),
                None => rec.extend([cell(row.objective), row.regime.to_string()]),
            }
            w.write_record(&rec).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Config(format!("writing CSV: {e}")))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("CSV output is UTF-8"))
    }

    /// Rows of one series.
    pub fn series<'a>(&'a self, label: &'a str) -> impl Iterator<Item = &'a SweepRow> + 'a {
        self.rows.iter().filter(move |r| r.series == label)
    }
}

fn evaluate(spec: &SweepSpec, index: usize, value: f64) -> Result<SweepRow> {
    let Point { config, xi, rate, eps } = spec.point(value)?;
    let mut row = SweepRow { series: spec.series.clone(), value, xi, objective: None, regime: "", mc: None };
    match spec.mode {
        SweepMode::SopCurve => {
            let (p, xi) = (SopProblem::new(config, rate.expect("validated"))?, xi.expect("validated"));
            let feasible = xi > p.terms().omega;
            row.objective = Some(if feasible { p.sop(xi)? } else { 1.0 });
            row.regime = if feasible { "feasible" } else { "infeasible" };
        }
        SweepMode::SopOpt => {
            let d = SopProblem::new(config, rate.expect("validated"))?.optimal_par();
            (row.xi, row.objective, row.regime) = (d.xi, d.objective, d.regime.as_str());
        }
        SweepMode::RateCurve => {
            let p = RateProblem::new(config, eps.expect("validated"))?;
            let solver = RhoSolver::new(&p, spec.rho_mode, spec.tol)?;
            let r = p.secrecy_rate(xi.expect("validated"), &solver)?;
            row.objective = Some(r);
            row.regime = if r > 0.0 { "feasible" } else { "infeasible" };
        }
        SweepMode::RateOpt => {
            let p = RateProblem::new(config, eps.expect("validated"))?;
            let solver = RhoSolver::new(&p, spec.rho_mode, spec.tol)?;
            let d = p.optimal_par(&solver)?;
            (row.xi, row.objective, row.regime) = (d.xi, d.objective, d.regime.as_str());
        }
        SweepMode::McValidate => {
            let (rate, xi) = (rate.expect("validated"), xi.expect("validated"));
            let p = SopProblem::new(config, rate)?;
            let closed_form = if xi > p.terms().omega { p.sop(xi)? } else { 1.0 };
            let mc = McConfig { seed: spec.mc.seed.wrapping_add(index as u64), ..spec.mc };
            let est = empirical_sop(&config, rate, xi, &mc)?;
            let se = combined_std_err(est.std_err, closed_form, est.trials);
            row.mc = Some(McColumns {
                closed_form,
                mean: est.mean,
                std_err: est.std_err,
                trials: est.trials,
                seed: est.seed,
                within_3se: (est.mean - closed_form).abs() <= 3.0 * se,
            });
        }
    }
    Ok(row)
}

/// Standard error used for agreement tests: the larger of the sample value and the
/// binomial value under the closed-form probability `p0`, so that a run with no
/// hits (or no misses) near `p0 = 0` or `1` is judged on the expected spread.
pub fn combined_std_err(sample: f64, p0: f64, trials: u64) -> f64 {
    let null = (p0 * (1.0 - p0) / trials as f64).max(0.0).sqrt();
    sample.max(null)
}

/// Evaluate one sweep on the global rayon pool.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let grid = spec.grid();
    let rows = grid.par_iter().enumerate().map(|(i, &v)| evaluate(spec, i, v)).collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { mode: spec.mode, variable: spec.variable, rows })
}

/// Evaluate several sweeps sharing mode and variable into one table, on a pool of
/// `threads` workers (0 uses every core).
pub fn run_sweeps(specs: &[SweepSpec], threads: usize) -> Result<SweepTable> {
    let first = specs.first().ok_or_else(|| Error::Config("no sweeps given".into()))?;
    if let Some(s) = specs.iter().find(|s| s.mode != first.mode || s.variable != first.variable) {
        return Err(Error::Config(format!(
            "series {:?} does not share mode {} and variable {}",
            s.series,
            first.mode.as_str(),
            first.variable
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    pool.install(|| {
        let mut rows = Vec::new();
        for spec in specs {
            rows.extend(run_sweep(spec)?.rows);
        }
        Ok(SweepTable { mode: first.mode, variable: first.variable, rows })
    })
}

/// Names accepted by [`preset`].
pub const PRESETS: [&str; 6] = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6"];

fn scenario(n: usize, power: f64, tau: f64, lambda_e: f64) -> SystemConfig {
    SystemConfig { n_antennas: n, power, alpha: 4.0, r_bob: 1.0, lambda_e, tau, gamma_hat: n as f64 }
}

fn fmt_num(v: f64) -> String {
    v.to_string()
}

/// Figure reproduction recipes, one spec per plotted series.
///
/// * `fig1`: outage vs `xi` at `P = 10 dBm`, `R_S = 2`, `tau = 0.3`, `lambda_e = 2`, `N` in {2, 4, 8}.
/// * `fig2`: optimal `xi` for outage vs `tau` at `P = 0 dBm`, `N = 20`, `lambda_e = 2`, `R_S` in {1, 2, 3}.
/// * `fig3`: minimum outage vs `tau` at `N = 20`, `lambda_e = 2`, `P` in {0, 10} dBm, `R_S` in {1, 2}.
/// * `fig4`: secrecy rate vs `xi` at `P = 10 dBm`, `eps = 0.01`, `tau = 0.2`, `lambda_e = 5`, `N` in {4, 8, 16}.
/// * `fig5`: optimal `xi` for rate vs `tau` at `P = 0 dBm`, `N = 20`, `(lambda_e, eps)` in
///   {(2, 0.01), (2, 0.1), (5, 0.01)}.
/// * `fig6`: maximum rate vs `tau` at `N = 20`, `lambda_e = 2`, `eps = 0.01`, `P` in {10, 30} dBm,
///   exact and large-`N` quantiles.
///
/// `gamma_hat` equals `N` throughout.
pub fn preset(name: &str) -> Result<Vec<SweepSpec>> {
    use SweepMode::*;
    use SweepVariable::*;
    let tau_grid = GridRange::new(0.0, 0.99, 100);
    let specs = match name {
        "fig1" => [2, 4, 8]
            .into_iter()
            .map(|n| {
                SweepSpec::new(SopCurve, Xi, GridRange::new(0.01, 1.0, 100), scenario(n, 10.0, 0.3, 2.0))
                    .with_rate(2.0)
                    .with_series(format!("N={n}"))
            })
            .collect(),
        "fig2" => [1.0, 2.0, 3.0]
            .into_iter()
            .map(|r| {
                SweepSpec::new(SopOpt, Tau, tau_grid, scenario(20, 1.0, 0.0, 2.0))
                    .with_rate(r)
                    .with_series(format!("R_S={}", fmt_num(r)))
            })
            .collect(),
        "fig3" => {
            let mut v = Vec::new();
            for p_dbm in [0.0, 10.0] {
                for r in [1.0, 2.0] {
                    v.push(
                        SweepSpec::new(SopOpt, Tau, tau_grid, scenario(20, dbm_to_linear(p_dbm), 0.0, 2.0))
                            .with_rate(r)
                            .with_series(format!("P={}dBm R_S={}", fmt_num(p_dbm), fmt_num(r))),
                    );
                }
            }
            v
        }
        "fig4" => [4, 8, 16]
            .into_iter()
            .map(|n| {
                SweepSpec::new(RateCurve, Xi, GridRange::new(0.0, 1.0, 101), scenario(n, 10.0, 0.2, 5.0))
                    .with_eps(0.01)
                    .with_series(format!("N={n}"))
            })
            .collect(),
        "fig5" => [(2.0, 0.01), (2.0, 0.1), (5.0, 0.01)]
            .into_iter()
            .map(|(lam, eps)| {
                SweepSpec::new(RateOpt, Tau, tau_grid, scenario(20, 1.0, 0.0, lam))
                    .with_eps(eps)
                    .with_series(format!("lambda_e={} eps={}", fmt_num(lam), fmt_num(eps)))
            })
            .collect(),
        "fig6" => {
            let mut v = Vec::new();
            for p_dbm in [10.0, 30.0] {
                for (mode, tag) in [(RhoMode::Exact, "exact"), (RhoMode::LargeN, "approx")] {
                    v.push(
                        SweepSpec::new(RateOpt, Tau, tau_grid, scenario(20, dbm_to_linear(p_dbm), 0.0, 2.0))
                            .with_eps(0.01)
                            .with_rho_mode(mode)
                            .with_series(format!("P={}dBm {tag}", fmt_num(p_dbm))),
                    );
                }
            }
            v
        }
        other => {
            return Err(Error::Config(format!(
                "unknown preset {other:?}; expected one of {}",
                PRESETS.join(", ")
            )))
        }
    };
    Ok(specs)
}
