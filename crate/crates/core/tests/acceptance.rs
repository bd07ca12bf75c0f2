//! Acceptance suite. Runs every criterion at its stated tolerance and prints one
//! PASS or FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are still evaluated in full and reported as
//! FAIL; they do not fail the target. Any other failure does, as does a known
//! failure that starts passing (so the list cannot go stale).

mod common;

use std::time::Instant;

use common::*;
use rand::Rng;

use secrecy_core::numerics::{
    cardano_principal_root, cardano_real_root, cubic_root_bisect, cubic_root_in_interval,
};
use secrecy_core::params::Regime;
use secrecy_core::rate::{RateProblem, RhoMode, RhoSolver};
use secrecy_core::sim::{
    auto_radius, empirical_sop, empirical_sop_nested, sample_eve_sinr, sample_max_sinr, Fidelity, McConfig,
};
use secrecy_core::sop::{eve_sinr_cdf, max_eve_sinr_cdf, SopProblem};
use secrecy_core::stats::ks_test;
use secrecy_core::sweep::{
    self, combined_std_err, GridRange, SweepMode, SweepSpec, SweepTable, SweepVariable,
};
use secrecy_core::validate::{
    constraint_activity, grid_argmax_rate, grid_argmin_sop, scaled_cubic_residual, strict_violations,
};
use secrecy_core::SystemConfig;

/// The large-N quantile deviates from the exact one by more than the stated
/// tolerance at N = 20, most of all close to suspension.
const KNOWN_FAILURES: &[u32] = &[8];

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

type Criterion = (u32, &'static str, fn() -> Verdict);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "outage closed form vs channel-level Monte-Carlo", c1_outage_oracle),
        (2, "eavesdropper SINR distributions (KS, 1%)", c2_distributions),
        (3, "outage optimum vs grid search, cubic residual, Cardano vs bisection", c3_outage_optimum),
        (4, "outage regime boundaries", c4_outage_regimes),
        (5, "outage optimum monotonicity and lower bound", c5_outage_monotonicity),
        (6, "quantile monotone and convex, derivative", c6_quantile),
        (7, "rate concavity, optimum vs grid, constraint activity", c7_rate_optimum),
        (8, "large-N rate within 5% of exact at N = 20", c8_large_n),
        (9, "rate optimum monotonicity in kappa, lambda_e, eps", c9_rate_monotonicity),
        (10, "figure shapes and crossings", c10_figure_shapes),
        (11, "simulator hygiene", c11_simulator_hygiene),
    ];
    let mut unexpected = Vec::new();
    let total = Instant::now();
    for (id, title, run) in criteria {
        let t = Instant::now();
        let v = run();
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!("{tag} [{id:>2}] {title}: {} ({:.1} s)", v.detail, t.elapsed().as_secs_f64());
        let known = KNOWN_FAILURES.contains(&id);
        if v.passed == known {
            unexpected.push(id);
        }
    }
    println!("acceptance finished in {:.1} s", total.elapsed().as_secs_f64());
    if !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

fn c1_outage_oracle() -> Verdict {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [2usize, 4, 8] {
        let config = fig1(n);
        let p = SopProblem::new(config, 2.0).unwrap();
        let omega = p.terms().omega;
        let mut within = 0;
        for i in 1..=20u64 {
            let xi = omega + (1.0 - omega) * i as f64 / 20.0;
            let cf = p.sop(xi).unwrap();
            let mc = McConfig::new(100_000, 1_000 * n as u64 + i);
            let est = empirical_sop(&config, 2.0, xi, &mc).unwrap();
            let se = combined_std_err(est.std_err, cf, est.trials);
            within += usize::from((est.mean - cf).abs() <= 3.0 * se);
        }
        ok &= within >= 18;
        parts.push(format!("N={n}: {within}/20"));
    }
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 60.0;
    verdict(ok, format!("{} within 3 se, {secs:.1} s of 60 s", parts.join(", ")))
}

/// `x` where the strongest-eavesdropper CDF equals `level`, by bisection in `ln x`.
fn max_sinr_quantile(config: &SystemConfig, xi: f64, level: f64) -> f64 {
    let (mut lo, mut hi) = (-80.0f64, 80.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if max_eve_sinr_cdf(config, xi, mid.exp()).unwrap() < level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi)).exp()
}

fn c2_distributions() -> Verdict {
    let mut rng = rng(2);
    let mut worst = f64::INFINITY;
    let mut failed = 0;
    for set in 0..5u64 {
        let n = rng.random_range(2..=16);
        let config = SystemConfig {
            n_antennas: n,
            power: rng.random_range(1.0..100.0),
            alpha: rng.random_range(3.0..5.0),
            r_bob: 1.0,
            lambda_e: rng.random_range(0.5..5.0),
            tau: rng.random_range(0.0..0.6),
            gamma_hat: n as f64,
        };
        let xi = rng.random_range(0.2..0.95);
        let r = rng.random_range(0.5..2.0);
        let mc = McConfig::new(100_000, 200 + set);

        let mut per_eve = sample_eve_sinr(&config, xi, r, &mc).unwrap();
        let ks1 = ks_test(&mut per_eve, |x| eve_sinr_cdf(&config, xi, r, x));

        let x_lo = max_sinr_quantile(&config, xi, 1e-6);
        let r_max = auto_radius(&config, xi, x_lo);
        let mut strongest = sample_max_sinr(&config, xi, r_max, &McConfig { seed: 300 + set, ..mc }).unwrap();
        let ks2 = ks_test(&mut strongest, |x| max_eve_sinr_cdf(&config, xi, x).unwrap());

        for ks in [ks1, ks2] {
            worst = worst.min(ks.p_value);
            failed += usize::from(!ks.passes(0.01));
        }
    }
    verdict(failed == 0, format!("{failed}/10 KS tests rejected at 1%, smallest p = {worst:.3}"))
}

fn c3_outage_optimum() -> Verdict {
    let problems = interior_sop_problems(200, 3);
    let (mut worst_grid, mut worst_k, mut worst_root) = (0f64, 0f64, 0f64);
    let mut one_real = 0;
    for p in &problems {
        let xi = p.optimal_par().xi.unwrap();
        let grid = grid_argmin_sop(p, 1e-4).unwrap();
        worst_grid = worst_grid.max((xi - grid).abs());
        worst_k = worst_k.max(scaled_cubic_residual(p, xi));
        let omega = p.terms().omega;
        let (a, b, c) = p.cubic_coeffs();
        let slow = cubic_root_bisect(a, b, c, omega, 1.0).unwrap();
        let fast = cubic_root_in_interval(a, b, c, omega, 1.0).unwrap();
        worst_root = worst_root.max((fast - slow).abs());
        worst_root = worst_root.max((cardano_principal_root(a, b, c) - slow).abs());
        one_real += usize::from(cardano_real_root(a, b, c).is_some());
    }
    let ok = worst_grid <= 1e-3 && worst_k <= 1e-9 && worst_root <= 1e-8;
    verdict(
        ok,
        format!(
            "200 problems: max |xi - grid| = {worst_grid:.2e}, max scaled |K| = {worst_k:.2e}, \
             max |Cardano - bisection| = {worst_root:.2e}, {one_real} cubics with a single real root"
        ),
    )
}

/// Grid verdict on the outage regime: `None` when no share carries the rate,
/// otherwise whether the minimizer sits at full power. A fine grid next to 1
/// resolves optima just below it.
fn grid_regime(p: &SopProblem) -> Option<Regime> {
    let coarse = grid_argmin_sop(p, 1e-4)?;
    let top = (1..=1000).map(|k| 1.0 - k as f64 * 1e-6);
    let j1 = p.j_factor(1.0).ok()?;
    let below_one = coarse < 1.0 || top.filter_map(|x| p.j_factor(x).ok()).any(|j| j < j1);
    Some(if below_one { Regime::Interior } else { Regime::FullPower })
}

fn c4_outage_regimes() -> Verdict {
    let mut rng = rng(4);
    let mut mismatches = 0;
    let mut checked = 0;
    for _ in 0..50 {
        let base = random_config(&mut rng);
        let rate = rng.random_range(0.25..4.0);
        let probe = SopProblem::new(base, rate).unwrap();
        let edge_suspend = probe.terms().t_pow - 1.0;
        let edge_full = probe.full_power_limit();
        for (kappa, want_decision, want_grid) in [
            (0.98 * edge_suspend, Regime::Suspend, None),
            (1.02 * edge_suspend, Regime::FullPower, Some(Regime::FullPower)),
            (0.98 * edge_full, Regime::FullPower, Some(Regime::FullPower)),
            (1.02 * edge_full, Regime::Interior, Some(Regime::Interior)),
        ] {
            let p = SopProblem::new(with_kappa(base, kappa), rate).unwrap();
            let decision = p.optimal_par().regime;
            checked += 1;
            mismatches += usize::from(decision != want_decision || grid_regime(&p) != want_grid);
        }
    }
    verdict(
        mismatches == 0,
        format!("{mismatches}/{checked} decisions disagree with the grid at +-2% of each boundary"),
    )
}

fn c5_outage_monotonicity() -> Verdict {
    let bases = interior_sop_problems(10, 5);
    let (mut kappa_viol, mut rate_viol, mut below) = (0, 0, 0);
    let mut interior_seen = 0;
    for p in &bases {
        let limit = p.full_power_limit();
        let pts: Vec<(f64, f64)> = log_space(1.01 * limit, 50.0 * limit, 100)
            .into_iter()
            .filter_map(|k| {
                let q = SopProblem::new(with_kappa(p.config, k), p.rate).unwrap();
                let d = q.optimal_par();
                (d.regime == Regime::Interior).then(|| {
                    below += usize::from(d.xi.unwrap() <= q.terms().omega.sqrt());
                    (k, d.xi.unwrap())
                })
            })
            .collect();
        interior_seen += pts.len();
        kappa_viol += strict_violations(&pts, -1.0);

        let r_cap = (1.0 + p.derived.kappa).log2();
        let pts: Vec<(f64, f64)> = lin_space(0.02 * r_cap, 0.98 * r_cap, 100)
            .into_iter()
            .filter_map(|r| {
                let q = SopProblem::new(p.config, r).unwrap();
                let d = q.optimal_par();
                (d.regime == Regime::Interior).then(|| {
                    below += usize::from(d.xi.unwrap() <= q.terms().omega.sqrt());
                    (r, d.xi.unwrap())
                })
            })
            .collect();
        interior_seen += pts.len();
        rate_viol += pts.windows(2).filter(|w| w[1].1 < w[0].1).count();
    }
    let ok = kappa_viol == 0 && rate_viol == 0 && below == 0;
    verdict(
        ok,
        format!(
            "{interior_seen} interior optima on 20 sweeps: {kappa_viol} kappa violations, \
             {rate_viol} rate violations, {below} at or below sqrt(omega)"
        ),
    )
}

fn c6_quantile() -> Verdict {
    let problems = rate_problems(10, 6, |_| true);
    let (mut first, mut second, mut deriv) = (f64::INFINITY, f64::INFINITY, 0f64);
    for p in &problems {
        let solver = RhoSolver::new(p, RhoMode::Exact, 1e-14).unwrap();
        let rho: Vec<f64> = (0..200).map(|i| p.rho(i as f64 / 199.0, &solver).unwrap()).collect();
        for w in rho.windows(2) {
            first = first.min((w[1] - w[0]) / w[1]);
        }
        for w in rho.windows(3) {
            second = second.min((w[2] - 2.0 * w[1] + w[0]) / w[2]);
        }
        for k in 1..10 {
            let xi = k as f64 / 10.0;
            let h = 1e-5 * xi.min(1.0 - xi);
            let fd = (p.rho(xi + h, &solver).unwrap() - p.rho(xi - h, &solver).unwrap()) / (2.0 * h);
            let an = p.drho_dxi(xi, p.rho(xi, &solver).unwrap());
            deriv = deriv.max((an - fd).abs() / an.abs());
        }
    }
    let ok = first > 0.0 && second > 0.0 && deriv <= 1e-5;
    verdict(
        ok,
        format!(
            "10 sets: min relative first difference {first:.2e}, min relative second difference \
             {second:.2e}, max derivative error {deriv:.2e}"
        ),
    )
}

fn c7_rate_optimum() -> Verdict {
    let problems = rate_problems(200, 7, |r| r != Regime::Suspend);
    let (mut concave, mut grid_gap, mut activity) = (f64::NEG_INFINITY, 0f64, 0usize);
    let mut full = 0;
    for p in &problems {
        let solver = RhoSolver::exact(p);
        let rates: Vec<f64> = (0..200).map(|i| p.secrecy_rate(i as f64 / 199.0, &solver).unwrap()).collect();
        for w in rates.windows(3).filter(|w| w.iter().all(|&r| r > 0.0)) {
            concave = concave.max(w[2] - 2.0 * w[1] + w[0]);
        }
        let d = p.optimal_par(&solver).unwrap();
        full += usize::from(d.regime == Regime::FullPower);
        let grid = grid_argmax_rate(p, &solver, 1e-4).unwrap().unwrap();
        grid_gap = grid_gap.max((d.xi.unwrap() - grid).abs());
        activity += usize::from(!constraint_activity(p, &d).unwrap().passed);
    }
    let ok = concave <= 1e-8 && grid_gap <= 1e-3 && activity == 0;
    verdict(
        ok,
        format!(
            "200 problems ({full} full power): max second difference {concave:.2e}, \
             max |xi - grid| = {grid_gap:.2e}, {activity} constraint-activity failures"
        ),
    )
}

fn c8_large_n() -> Verdict {
    let mut worst: (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut at_zero = Vec::new();
    let mut design_gap = 0f64;
    for p_dbm in [10.0, 30.0] {
        for k in 0..100 {
            let tau = k as f64 * 0.01;
            let p = RateProblem::new(fig6(p_dbm, tau), 0.01).unwrap();
            let exact = p.max_rate(&RhoSolver::exact(&p)).unwrap();
            let Some(r_exact) = exact.objective else { break };
            let approx = p.max_rate(&RhoSolver::large_n(&p)).unwrap();
            let r_approx = approx.objective.unwrap_or(0.0);
            let gap = (r_approx - r_exact).abs() / r_exact;
            if k == 0 {
                at_zero.push(format!("{gap:.3} at {p_dbm} dBm"));
            }
            if gap > worst.0 {
                worst = (gap, tau, p_dbm);
            }
            if let Some(xa) = approx.xi {
                let realized = p.secrecy_rate(xa, &RhoSolver::exact(&p)).unwrap();
                design_gap = design_gap.max((r_exact - realized) / r_exact);
            }
        }
    }
    verdict(
        worst.0 <= 0.05,
        format!(
            "max relative gap {:.3} at tau = {:.2}, P = {} dBm; gap at tau = 0: {}; \
             exact rate at the large-N share is within {design_gap:.3} of the optimum",
            worst.0,
            worst.1,
            worst.2,
            at_zero.join(", ")
        ),
    )
}

fn rate_opt_point(config: SystemConfig, eps: f64) -> Option<(f64, f64)> {
    let p = RateProblem::new(config, eps).unwrap();
    let d = p.optimal_par(&RhoSolver::exact(&p)).unwrap();
    (d.regime == Regime::Interior).then(|| (p.kappa(), d.xi.unwrap()))
}

fn c9_rate_monotonicity() -> Verdict {
    let mut bases: Vec<RateProblem> = [(2.0, 0.01), (2.0, 0.1), (5.0, 0.01)]
        .into_iter()
        .map(|(lam, eps)| RateProblem::new(fig5(0.1, lam), eps).unwrap())
        .collect();
    bases.extend(rate_problems(5, 9, |r| r == Regime::Interior));
    let (mut v_kappa, mut v_lam, mut v_eps) = (0, 0, 0);
    let mut counts = [0usize; 3];
    for p in &bases {
        let c = p.config;
        let kappa_pts: Vec<(f64, f64)> = log_space(0.2, 5.0, 100)
            .into_iter()
            .filter_map(|f| rate_opt_point(with_kappa(c, f * c.kappa()), p.eps))
            .collect();
        let lam_pts: Vec<(f64, f64)> = log_space(0.25 * c.lambda_e, 4.0 * c.lambda_e, 100)
            .into_iter()
            .filter_map(|l| rate_opt_point(SystemConfig { lambda_e: l, ..c }, p.eps).map(|(_, x)| (l, x)))
            .collect();
        let eps_pts: Vec<(f64, f64)> = log_space(1e-3, 0.5, 100)
            .into_iter()
            .filter_map(|e| rate_opt_point(c, e).map(|(_, x)| (e, x)))
            .collect();
        counts[0] += kappa_pts.len();
        counts[1] += lam_pts.len();
        counts[2] += eps_pts.len();
        v_kappa += strict_violations(&kappa_pts, 1.0);
        v_lam += strict_violations(&lam_pts, -1.0);
        v_eps += strict_violations(&eps_pts, 1.0);
    }
    let ok = v_kappa + v_lam + v_eps == 0 && counts.iter().all(|&c| c >= 2 * bases.len());
    verdict(
        ok,
        format!(
            "{} bases, violations/interior points: kappa {v_kappa}/{}, lambda_e {v_lam}/{}, eps {v_eps}/{}",
            bases.len(),
            counts[0],
            counts[1],
            counts[2]
        ),
    )
}

/// `(tau, xi, objective)` of the transmitting rows of one series.
fn transmitting(t: &SweepTable, series: &str) -> Vec<(f64, f64, f64)> {
    t.series(series).filter_map(|r| Some((r.value, r.xi?, r.objective?))).collect()
}

fn ends_suspended(t: &SweepTable, series: &str) -> bool {
    let rows: Vec<_> = t.series(series).collect();
    let first = rows.iter().position(|r| r.regime == "suspend");
    first.is_some_and(|i| rows[i..].iter().all(|r| r.regime == "suspend"))
}

/// Whether `b - a` takes both signs over the `tau` values where both series transmit,
/// negative first.
fn crosses(a: &[(f64, f64, f64)], b: &[(f64, f64, f64)]) -> Option<f64> {
    let diff: Vec<(f64, f64)> = a
        .iter()
        .filter_map(|&(t, _, oa)| b.iter().find(|x| x.0 == t).map(|&(_, _, ob)| (t, ob - oa)))
        .collect();
    let first_neg = diff.iter().position(|d| d.1 < 0.0)?;
    diff[first_neg..].iter().find(|d| d.1 > 0.0).map(|d| d.0)
}

fn crosses_down(a: &[(f64, f64, f64)], b: &[(f64, f64, f64)]) -> Option<f64> {
    let flip = |v: &[(f64, f64, f64)]| v.iter().map(|&(t, x, o)| (t, x, -o)).collect::<Vec<_>>();
    crosses(&flip(a), &flip(b))
}

fn c10_figure_shapes() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;

    let fig2 = sweep::run_sweeps(&sweep::preset("fig2").unwrap(), 0).unwrap();
    for r in ["R_S=1", "R_S=2", "R_S=3"] {
        let rows = transmitting(&fig2, r);
        let interior: Vec<(f64, f64)> =
            fig2.series(r).filter(|x| x.regime == "interior").map(|x| (x.value, x.xi.unwrap())).collect();
        let rising = rows.windows(2).all(|w| w[1].1 >= w[0].1) && strict_violations(&interior, 1.0) == 0;
        let good = rising && interior.len() >= 2 && ends_suspended(&fig2, r);
        ok &= good;
        notes.push(format!("fig2 {r} {}", if good { "rises then suspends" } else { "wrong shape" }));
    }

    let fig3 = sweep::run_sweeps(&sweep::preset("fig3").unwrap(), 0).unwrap();
    for label in ["P=0dBm R_S=1", "P=0dBm R_S=2", "P=10dBm R_S=1", "P=10dBm R_S=2"] {
        let rows = transmitting(&fig3, label);
        let good = rows.len() >= 2 && rows.windows(2).all(|w| w[1].2 >= w[0].2);
        ok &= good;
        if !good {
            notes.push(format!("fig3 {label} not increasing"));
        }
    }
    for r in ["1", "2"] {
        let low = transmitting(&fig3, &format!("P=0dBm R_S={r}"));
        let high = transmitting(&fig3, &format!("P=10dBm R_S={r}"));
        // outage of the stronger transmitter is lower first, higher later
        match crosses(&low, &high) {
            Some(t) => notes.push(format!("fig3 R_S={r} crosses by tau = {t:.2}")),
            None => {
                ok = false;
                notes.push(format!("fig3 R_S={r} no crossing"));
            }
        }
    }

    let fig6 = sweep::run_sweeps(&sweep::preset("fig6").unwrap(), 0).unwrap();
    for label in ["P=10dBm exact", "P=30dBm exact"] {
        let rows = transmitting(&fig6, label);
        let good = rows.len() >= 2 && rows.windows(2).all(|w| w[1].2 <= w[0].2);
        ok &= good;
        if !good {
            notes.push(format!("fig6 {label} not decreasing"));
        }
    }
    let low = transmitting(&fig6, "P=10dBm exact");
    let high = transmitting(&fig6, "P=30dBm exact");
    // rate of the stronger transmitter is higher first, lower later
    match crosses_down(&low, &high) {
        Some(t) => notes.push(format!("fig6 crosses by tau = {t:.2}")),
        None => {
            ok = false;
            notes.push("fig6 no crossing".into());
        }
    }
    verdict(ok, notes.join("; "))
}

fn c11_simulator_hygiene() -> Verdict {
    let mut rng = rng(11);
    let mut fidelity_misses = 0;
    for i in 0..20u64 {
        let n = rng.random_range(2..=12);
        let config = SystemConfig {
            power: rng.random_range(2.0..50.0),
            tau: rng.random_range(0.0..0.5),
            lambda_e: rng.random_range(0.5..4.0),
            ..fig1(n)
        };
        let rate = rng.random_range(0.5..2.5);
        let omega = SopProblem::new(config, rate).unwrap().terms().omega;
        if omega >= 1.0 {
            fidelity_misses += 1;
            continue;
        }
        let xi = omega + (1.0 - omega) * rng.random_range(0.1..1.0);
        let mc = McConfig::new(20_000, 1_100 + i);
        let a = empirical_sop(&config, rate, xi, &mc).unwrap();
        let b = empirical_sop(&config, rate, xi, &mc.with_fidelity(Fidelity::SinrLevel)).unwrap();
        let pooled = 0.5 * (a.mean + b.mean);
        let se = combined_std_err(a.std_err, pooled, a.trials)
            .hypot(combined_std_err(b.std_err, pooled, b.trials));
        fidelity_misses += usize::from((a.mean - b.mean).abs() > 3.0 * se);
    }

    let spec =
        SweepSpec::new(SweepMode::McValidate, SweepVariable::Xi, GridRange::new(0.45, 1.0, 6), fig1(4))
            .with_rate(2.0)
            .with_series("det");
    let spec = SweepSpec { mc: McConfig::new(5_000, 77), ..spec };
    let one = sweep::run_sweeps(std::slice::from_ref(&spec), 1).unwrap().to_csv_string().unwrap();
    let three = sweep::run_sweeps(std::slice::from_ref(&spec), 3).unwrap().to_csv_string().unwrap();
    let deterministic = one == three;

    let mut worst_shift = 0f64;
    let config = fig1(8);
    let omega = SopProblem::new(config, 2.0).unwrap().terms().omega;
    for (k, frac) in [0.25, 0.5, 0.75].into_iter().enumerate() {
        let xi = omega + (1.0 - omega) * frac;
        let est =
            empirical_sop_nested(&config, 2.0, xi, &McConfig::new(100_000, 1_200 + k as u64), &[1.0, 2.0])
                .unwrap();
        let sigma = est[0].std_err.max(f64::MIN_POSITIVE);
        worst_shift = worst_shift.max((est[1].mean - est[0].mean).abs() / sigma);
    }
    let ok = fidelity_misses == 0 && deterministic && worst_shift < 1.0;
    verdict(
        ok,
        format!(
            "fidelity disagreements {fidelity_misses}/20, CSV identical across 1 and 3 workers: {deterministic}, \
             doubling the radius shifts by at most {worst_shift:.3} se"
        ),
    )
}
