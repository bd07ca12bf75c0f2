//! Monte-Carlo simulation of the physical model.
//!
//! Two fidelity levels are offered. [`Fidelity::ChannelLevel`] draws the
//! estimated main channel, builds the AN precoders and draws a full complex
//! channel for every eavesdropper. [`Fidelity::SinrLevel`] draws the two projected
//! gains directly, `|h^T w|^2 ~ Exp(1)` and `||h^T G||^2 ~ Gamma(N - 1, 1)`.
//!
//! Every trial owns a ChaCha8 stream selected by `(seed, trial index)`, so
//! estimates do not depend on thread scheduling and trial counts can grow without
//! replaying earlier trials.
//!
//! The legitimate receiver's SINR is deterministic (`xi * kappa`) because the
//! residual estimation error is treated as worst-case Gaussian noise; it is never
//! sampled.

pub mod channel;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Gamma, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::params::{derive, SystemConfig};

pub use channel::{build_precoders, sample_main_channel, sinr_bob, sinr_eve, MainChannel, Precoders};

/// Truncation radius policy for the eavesdropper field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusPolicy {
    /// Smallest radius beyond which a single eavesdropper is detectable with
    /// probability at most [`AUTO_RADIUS_TAIL`].
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fidelity {
    ChannelLevel,
    SinrLevel,
}

/// How the estimated main-channel gain is treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum GainMode {
    /// Hold `||h_hat||^2 = gamma_hat`, matching the closed forms.
    #[default]
    Conditioned,
    /// Draw `||h_hat||^2 ~ Gamma(N, 1)` per trial. Not covered by any closed form here.
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McConfig {
    pub trials: u64,
    pub seed: u64,
    pub radius: RadiusPolicy,
    pub fidelity: Fidelity,
    #[serde(default)]
    pub gain: GainMode,
}

impl McConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        McConfig {
            trials,
            seed,
            radius: RadiusPolicy::Auto,
            fidelity: Fidelity::ChannelLevel,
            gain: GainMode::Conditioned,
        }
    }

    pub fn with_fidelity(self, fidelity: Fidelity) -> Self {
        McConfig { fidelity, ..self }
    }

    pub fn with_radius(self, radius: RadiusPolicy) -> Self {
        McConfig { radius, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return domain("Monte-Carlo needs at least one trial");
        }
        if let RadiusPolicy::Fixed(r) = self.radius {
            if !(r > 0.0 && r.is_finite()) {
                return domain(format!("fixed radius must be positive, got {r}"));
            }
        }
        Ok(())
    }
}

/// A Monte-Carlo probability estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(trials)`.
    pub std_err: f64,
    pub trials: u64,
    pub seed: u64,
    /// Set when the legitimate link cannot carry the rate, so outage is certain
    /// and nothing was simulated.
    pub infeasible: bool,
}

impl McEstimate {
    fn from_count(hits: u64, trials: u64, seed: u64) -> Self {
        let n = trials as f64;
        let mean = hits as f64 / n;
        let std_err = if trials > 1 { (mean * (1.0 - mean) / (n - 1.0)).max(0.0).sqrt() } else { 0.0 };
        McEstimate { mean, std_err, trials, seed, infeasible: false }
    }

    /// CSV fields `mean, std_err, trials, seed`.
    pub fn csv_fields(&self) -> [String; 4] {
        [self.mean.to_string(), self.std_err.to_string(), self.trials.to_string(), self.seed.to_string()]
    }
}

/// Per-eavesdropper detection probability that [`RadiusPolicy::Auto`] leaves outside the disk.
pub const AUTO_RADIUS_TAIL: f64 = 1e-8;
const MIN_RADIUS: f64 = 1e-6;

/// Random stream for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Eavesdropper distances from a homogeneous PPP of density `lambda_e` in a disk of
/// radius `r_max`. Angles are not drawn: the model is isotropic.
pub fn sample_eves<R: Rng + ?Sized>(lambda_e: f64, r_max: f64, rng: &mut R) -> Vec<f64> {
    let mean = lambda_e * std::f64::consts::PI * r_max * r_max;
    if !(mean > 0.0) {
        return Vec::new();
    }
    let count: f64 = Poisson::new(mean).expect("positive finite Poisson mean").sample(rng);
    (0..count as usize).map(|_| r_max * rng.random::<f64>().sqrt()).collect()
}

/// Smallest radius at which one eavesdropper exceeds SINR `x` with probability at
/// most [`AUTO_RADIUS_TAIL`]:
/// `exp(-r^alpha x / (P xi)) (1 + phi x)^(1 - N) <= tail`.
pub fn auto_radius(config: &SystemConfig, xi: f64, x: f64) -> f64 {
    if !(xi > 0.0) || !(x > 0.0) {
        return MIN_RADIUS;
    }
    let n = config.n();
    let phi = (1.0 / xi - 1.0) / (n - 1.0);
    let budget = -AUTO_RADIUS_TAIL.ln() + (1.0 - n) * (phi * x).ln_1p();
    if budget <= 0.0 {
        return MIN_RADIUS;
    }
    (config.power * xi / x * budget).powf(1.0 / config.alpha).max(MIN_RADIUS)
}

/// Gains `(signal, an)` of one eavesdropper as seen through the precoders.
fn draw_gains<R: Rng + ?Sized>(
    n: usize,
    fidelity: Fidelity,
    precoders: Option<&Precoders>,
    an_gain: &Gamma<f64>,
    rng: &mut R,
) -> (f64, f64) {
    match (fidelity, precoders) {
        (Fidelity::ChannelLevel, Some(p)) => {
            let h = channel::complex_gaussian_vec(n, rng);
            p.gains(&h)
        }
        _ => {
            let s: f64 = Exp1.sample(rng);
            (s, an_gain.sample(rng))
        }
    }
}

struct TrialSetup {
    precoders: Option<Precoders>,
    kappa: f64,
}

fn setup_trial<R: Rng + ?Sized>(config: &SystemConfig, mc: &McConfig, rng: &mut R) -> TrialSetup {
    let n = config.n_antennas;
    let with_gain = |g: f64| SystemConfig { gamma_hat: g, ..*config }.kappa();
    match (mc.fidelity, mc.gain) {
        (Fidelity::ChannelLevel, gain) => {
            let h_hat = match gain {
                GainMode::Conditioned => channel::sample_estimate_with_gain(n, config.gamma_hat, rng),
                GainMode::Sampled => channel::complex_gaussian_vec(n, rng),
            };
            let g: f64 = h_hat.iter().map(|z| z.norm_sqr()).sum();
            let precoders = build_precoders(&h_hat, rng).expect("nonzero estimate");
            TrialSetup { precoders: Some(precoders), kappa: with_gain(g) }
        }
        (Fidelity::SinrLevel, GainMode::Conditioned) => TrialSetup { precoders: None, kappa: config.kappa() },
        (Fidelity::SinrLevel, GainMode::Sampled) => {
            let g = Gamma::new(n as f64, 1.0).expect("valid shape").sample(rng);
            TrialSetup { precoders: None, kappa: with_gain(g) }
        }
    }
}

/// Strongest SINR over one field realization. Stops early and returns the first
/// value above `stop_above` when given.
fn field_max_sinr<R: Rng + ?Sized>(
    config: &SystemConfig,
    xi: f64,
    r_max: f64,
    fidelity: Fidelity,
    precoders: Option<&Precoders>,
    stop_above: Option<f64>,
    rng: &mut R,
) -> f64 {
    let n = config.n_antennas;
    let an_gain = Gamma::new((n - 1) as f64, 1.0).expect("valid shape");
    let mut best = 0f64;
    for r in sample_eves(config.lambda_e, r_max, rng) {
        let (s, a) = draw_gains(n, fidelity, precoders, &an_gain, rng);
        let g = channel::sinr_from_gains(config, xi, r, s, a);
        if stop_above.is_some_and(|t| g > t) {
            return g;
        }
        best = best.max(g);
    }
    best
}

fn resolve_radius(mc: &McConfig, config: &SystemConfig, xi: f64, x: f64) -> f64 {
    match mc.radius {
        RadiusPolicy::Fixed(r) => r,
        RadiusPolicy::Auto => auto_radius(config, xi, x),
    }
}

/// Fraction of trials in which the strongest eavesdropper's capacity exceeds the
/// redundancy rate `C_B - R_S`.
pub fn empirical_sop(config: &SystemConfig, rate: f64, xi: f64, mc: &McConfig) -> Result<McEstimate> {
    mc.validate()?;
    let derived = derive(config, Some(rate), None)?;
    if !(0.0..=1.0).contains(&xi) {
        return domain(format!("power share must lie in [0, 1], got {xi}"));
    }
    let t_pow = derived.rate.expect("rate supplied").t_pow;
    let conditioned = mc.gain == GainMode::Conditioned;
    let x_fixed = (1.0 + xi * derived.kappa) / t_pow - 1.0;
    if conditioned && x_fixed <= 0.0 {
        return Ok(McEstimate {
            mean: 1.0,
            std_err: 0.0,
            trials: mc.trials,
            seed: mc.seed,
            infeasible: true,
        });
    }
    let hits: u64 = (0..mc.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(mc.seed, trial);
            let setup = setup_trial(config, mc, &mut rng);
            let x = (1.0 + xi * setup.kappa) / t_pow - 1.0;
            if x <= 0.0 {
                return 1;
            }
            let r_max = resolve_radius(mc, config, xi, x);
            let g =
                field_max_sinr(config, xi, r_max, mc.fidelity, setup.precoders.as_ref(), Some(x), &mut rng);
            u64::from(g > x)
        })
        .sum();
    Ok(McEstimate::from_count(hits, mc.trials, mc.seed))
}

/// Outage estimates for nested truncation disks from a single field draw per trial.
///
/// Each trial samples eavesdroppers out to the largest of `scales` times the
/// radius chosen by `mc.radius`; the estimate for each scale counts only those
/// within that multiple. The estimates are therefore coupled and their difference
/// isolates the contribution of the annulus between the disks.
pub fn empirical_sop_nested(
    config: &SystemConfig,
    rate: f64,
    xi: f64,
    mc: &McConfig,
    scales: &[f64],
) -> Result<Vec<McEstimate>> {
    mc.validate()?;
    if scales.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
        return domain("radius scales must be positive");
    }
    if mc.gain != GainMode::Conditioned {
        return domain("nested truncation estimates need a conditioned channel gain");
    }
    let derived = derive(config, Some(rate), None)?;
    let t_pow = derived.rate.expect("rate supplied").t_pow;
    let x = (1.0 + xi * derived.kappa) / t_pow - 1.0;
    if !(0.0..=1.0).contains(&xi) || x <= 0.0 {
        return domain(format!("power share {xi} cannot carry rate {rate}"));
    }
    let base = resolve_radius(mc, config, xi, x);
    let outer = scales.iter().copied().fold(0.0, f64::max) * base;
    let n = config.n_antennas;
    let an_gain = Gamma::new((n - 1) as f64, 1.0).expect("valid shape");
    let hits = (0..mc.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(mc.seed, trial);
            let setup = setup_trial(config, mc, &mut rng);
            let mut nearest = f64::INFINITY;
            for r in sample_eves(config.lambda_e, outer, &mut rng) {
                let (s, a) = draw_gains(n, mc.fidelity, setup.precoders.as_ref(), &an_gain, &mut rng);
                if channel::sinr_from_gains(config, xi, r, s, a) > x {
                    nearest = nearest.min(r);
                }
            }
            scales.iter().map(|&s| u64::from(nearest <= s * base)).collect::<Vec<_>>()
        })
        .reduce(
            || vec![0; scales.len()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(s, v)| *s += v);
                a
            },
        );
    Ok(hits.into_iter().map(|h| McEstimate::from_count(h, mc.trials, mc.seed)).collect())
}

/// Empirical `P{gamma_E < x}` for each `x` in `x_grid`.
pub fn empirical_gamma_e_cdf(
    config: &SystemConfig,
    xi: f64,
    x_grid: &[f64],
    mc: &McConfig,
) -> Result<Vec<McEstimate>> {
    mc.validate()?;
    config.validate()?;
    if x_grid.iter().any(|&x| !(x > 0.0)) {
        return domain("x grid must be positive");
    }
    if x_grid.is_empty() {
        return Ok(Vec::new());
    }
    let x_min = x_grid.iter().copied().fold(f64::INFINITY, f64::min);
    let x_max = x_grid.iter().copied().fold(0.0, f64::max);
    let r_max = resolve_radius(mc, config, xi, x_min);
    let counts = (0..mc.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(mc.seed, trial);
            let setup = setup_trial(config, mc, &mut rng);
            let g = field_max_sinr(
                config,
                xi,
                r_max,
                mc.fidelity,
                setup.precoders.as_ref(),
                Some(x_max),
                &mut rng,
            );
            x_grid.iter().map(|&x| u64::from(g < x)).collect::<Vec<_>>()
        })
        .reduce(
            || vec![0; x_grid.len()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(s, v)| *s += v);
                a
            },
        );
    Ok(counts.into_iter().map(|c| McEstimate::from_count(c, mc.trials, mc.seed)).collect())
}

/// Samples of the strongest eavesdropper SINR in a disk of radius `r_max`
/// (zero when the disk is empty).
pub fn sample_max_sinr(config: &SystemConfig, xi: f64, r_max: f64, mc: &McConfig) -> Result<Vec<f64>> {
    mc.validate()?;
    config.validate()?;
    Ok((0..mc.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(mc.seed, trial);
            let setup = setup_trial(config, mc, &mut rng);
            field_max_sinr(config, xi, r_max, mc.fidelity, setup.precoders.as_ref(), None, &mut rng)
        })
        .collect())
}

/// Samples of one eavesdropper's SINR at distance `r`, each with fresh precoders.
pub fn sample_eve_sinr(config: &SystemConfig, xi: f64, r: f64, mc: &McConfig) -> Result<Vec<f64>> {
    mc.validate()?;
    config.validate()?;
    let n = config.n_antennas;
    Ok((0..mc.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(mc.seed, trial);
            let setup = setup_trial(config, mc, &mut rng);
            let an_gain = Gamma::new((n - 1) as f64, 1.0).expect("valid shape");
            let (s, a) = draw_gains(n, mc.fidelity, setup.precoders.as_ref(), &an_gain, &mut rng);
            channel::sinr_from_gains(config, xi, r, s, a)
        })
        .collect())
}
