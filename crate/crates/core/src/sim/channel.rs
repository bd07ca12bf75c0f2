//! Channel-level model: estimated and true main channel, AN precoders and SINRs.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{domain, Result};
use crate::params::SystemConfig;

/// One draw from `CN(0, 1)`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn complex_gaussian_vec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    (0..n).map(|_| complex_gaussian(rng)).collect()
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `u^H v`.
fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// `h^T v` (no conjugation), the gain seen through a precoding column.
fn project(h: &[Complex64], v: &[Complex64]) -> Complex64 {
    h.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Main channel draw: estimate, estimation error and the true channel
/// `h = sqrt(1 - tau^2) h_hat + tau h_err`.
#[derive(Debug, Clone, PartialEq)]
pub struct MainChannel {
    pub h_hat: Vec<Complex64>,
    pub h_err: Vec<Complex64>,
    pub h: Vec<Complex64>,
}

pub fn sample_main_channel<R: Rng + ?Sized>(n: usize, tau: f64, rng: &mut R) -> MainChannel {
    let h_hat = complex_gaussian_vec(n, rng);
    let h_err = complex_gaussian_vec(n, rng);
    let a = (1.0 - tau * tau).sqrt();
    let h = h_hat.iter().zip(&h_err).map(|(e, r)| e * a + r * tau).collect();
    MainChannel { h_hat, h_err, h }
}

/// Channel estimate with a fixed gain `||h_hat||^2 = gamma` and isotropic direction.
pub fn sample_estimate_with_gain<R: Rng + ?Sized>(n: usize, gamma: f64, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v = complex_gaussian_vec(n, rng);
        let nv = norm(&v);
        if nv > 1e-12 {
            let s = gamma.sqrt() / nv;
            return v.into_iter().map(|z| z * s).collect();
        }
    }
}

/// Beamformer `w` matched to the estimate and an AN basis `G` spanning its null space.
#[derive(Debug, Clone, PartialEq)]
pub struct Precoders {
    pub w: Vec<Complex64>,
    /// The `N - 1` columns of `G`.
    pub g: Vec<Vec<Complex64>>,
}

impl Precoders {
    pub fn n_antennas(&self) -> usize {
        self.w.len()
    }

    /// Largest entry of `|[w G]^H [w G] - I|`.
    pub fn orthonormality_residual(&self) -> f64 {
        let cols: Vec<&[Complex64]> =
            std::iter::once(self.w.as_slice()).chain(self.g.iter().map(Vec::as_slice)).collect();
        let mut worst = 0f64;
        for (i, u) in cols.iter().enumerate() {
            for (j, v) in cols.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((inner(u, v) - want).norm());
            }
        }
        worst
    }

    /// `(|h^T w|^2, ||h^T G||^2)`.
    pub fn gains(&self, h: &[Complex64]) -> (f64, f64) {
        let signal = project(h, &self.w).norm_sqr();
        let an = self.g.iter().map(|col| project(h, col).norm_sqr()).sum();
        (signal, an)
    }
}

/// `w = conj(h_hat) / ||h_hat||`, completed to an orthonormal basis by
/// Gram-Schmidt (two passes) on random complex Gaussian columns.
pub fn build_precoders<R: Rng + ?Sized>(h_hat: &[Complex64], rng: &mut R) -> Result<Precoders> {
    let n = h_hat.len();
    let nh = norm(h_hat);
    if n < 2 || !(nh > 0.0) || !nh.is_finite() {
        return domain("beamformer needs a nonzero estimate with at least two entries");
    }
    let w: Vec<Complex64> = h_hat.iter().map(|z| z.conj() / nh).collect();
    let mut g: Vec<Vec<Complex64>> = Vec::with_capacity(n - 1);
    while g.len() < n - 1 {
        let mut v = complex_gaussian_vec(n, rng);
        for _ in 0..2 {
            for u in std::iter::once(&w).chain(g.iter()) {
                let c = inner(u, &v);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= ui * c;
                }
            }
        }
        let nv = norm(&v);
        if nv < 1e-6 {
            continue;
        }
        g.push(v.into_iter().map(|z| z / nv).collect());
    }
    Ok(Precoders { w, g })
}

/// Legitimate receiver SINR `xi * kappa` under worst-case Gaussian treatment of the
/// residual estimation error.
pub fn sinr_bob(config: &SystemConfig, xi: f64) -> f64 {
    xi * config.kappa()
}

/// SINR from the two projected gains of an eavesdropper at distance `r`.
pub fn sinr_from_gains(config: &SystemConfig, xi: f64, r: f64, signal: f64, an: f64) -> f64 {
    let p = config.power;
    let path = r.powf(-config.alpha);
    xi * p * signal * path / ((1.0 - xi) * p * an * path / (config.n() - 1.0) + 1.0)
}

/// SINR of an eavesdropper with channel `h_e` at distance `r`.
pub fn sinr_eve(h_e: &[Complex64], r: f64, precoders: &Precoders, config: &SystemConfig, xi: f64) -> f64 {
    let (signal, an) = precoders.gains(h_e);
    sinr_from_gains(config, xi, r, signal, an)
}
