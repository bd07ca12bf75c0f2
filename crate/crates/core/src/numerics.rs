//! Special functions and one-dimensional root finders used by the optimizers.

use crate::error::{domain, Error, Result};

/// Bisection tolerance used by the optimizers unless the caller overrides it.
pub const DEFAULT_TOL: f64 = 1e-10;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for positive arguments (Lanczos, g = 7, nine terms).
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("gamma_fn needs a positive finite argument, got {x}"));
    }
    if x < 0.5 {
        // reflection keeps the series in its accurate range
        let s = std::f64::consts::PI / (std::f64::consts::PI * x).sin();
        return Ok(s / gamma_fn(1.0 - x)?);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc)
}

/// Principal branch of the Lambert-W function on the nonnegative axis.
///
/// Halley iteration started from `ln(1 + x)` for small arguments and from
/// `ln x - ln ln x` above `e`.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return domain(format!("lambert_w0 is only defined here for x >= 0, got {x}"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let mut w = if x > std::f64::consts::E {
        let l = x.ln();
        l - l.ln()
    } else {
        x.ln_1p()
    };
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    Ok(w)
}

/// An interval known to enclose a sign change of some function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

fn encloses_sign_change(f_lo: f64, f_hi: f64) -> bool {
    (f_lo <= 0.0 && f_hi >= 0.0) || (f_lo >= 0.0 && f_hi <= 0.0)
}

impl Bracket {
    /// Evaluate `f` at both ends and check the bracket invariant.
    pub fn new(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<Self> {
        let b = Bracket { lo, hi, f_lo: f(lo), f_hi: f(hi) };
        b.check()?;
        Ok(b)
    }

    fn check(&self) -> Result<()> {
        if !(self.lo < self.hi) {
            return domain(format!("bracket needs lo < hi, got [{}, {}]", self.lo, self.hi));
        }
        if !encloses_sign_change(self.f_lo, self.f_hi) {
            return Err(Error::Bracket { lo: self.lo, hi: self.hi, f_lo: self.f_lo, f_hi: self.f_hi });
        }
        Ok(())
    }
}

/// Bisection on a bracketed sign change until the bracket is no wider than `tol`
/// (or cannot be split further in floating point). Returns the bracket midpoint.
pub fn bisect(mut f: impl FnMut(f64) -> f64, bracket: Bracket, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return domain(format!("bisection tolerance must be positive, got {tol}"));
    }
    bracket.check()?;
    let Bracket { mut lo, mut hi, f_lo, f_hi } = bracket;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    let lo_negative = f_lo < 0.0;
    while hi - lo > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + 0.5 * (hi - lo))
}

/// `x^3 + a x^2 + b x + c`.
pub fn cubic(a: f64, b: f64, c: f64, x: f64) -> f64 {
    ((x + a) * x + b) * x + c
}

/// Cardano's real root of `x^3 + a x^2 + b x + c`, when the cubic has exactly one
/// real root (nonnegative radicand). Cube roots are real and sign-preserving.
pub fn cardano_real_root(a: f64, b: f64, c: f64) -> Option<f64> {
    let q = a * b / 6.0 - c / 2.0 - a * a * a / 27.0;
    let h = b / 3.0 - a * a / 9.0;
    let radicand = h * h * h + q * q;
    if !(radicand >= 0.0) {
        return None;
    }
    let p = radicand.sqrt();
    Some((q + p).cbrt() + (q - p).cbrt() - a / 3.0)
}

/// Cardano's expression `cbrt(q + p) + cbrt(q - p) - a/3` with principal cube roots.
///
/// With a nonnegative radicand this is [`cardano_real_root`]. With a negative one
/// the two radicals are complex conjugates and the sum is real,
/// `2 sqrt(-h) cos(phi / 3) - a/3` with `phi = arg(q + i sqrt(-radicand))`, which is
/// the largest of the three real roots. Evaluated without complex arithmetic.
pub fn cardano_principal_root(a: f64, b: f64, c: f64) -> f64 {
    let q = a * b / 6.0 - c / 2.0 - a * a * a / 27.0;
    let h = b / 3.0 - a * a / 9.0;
    let radicand = h * h * h + q * q;
    if radicand >= 0.0 {
        let p = radicand.sqrt();
        return (q + p).cbrt() + (q - p).cbrt() - a / 3.0;
    }
    let phi = (-radicand).sqrt().atan2(q);
    2.0 * (-h).sqrt() * (phi / 3.0).cos() - a / 3.0
}

/// Root of `x^3 + a x^2 + b x + c` in `(lo, hi)` by bisection to full precision.
pub fn cubic_root_bisect(a: f64, b: f64, c: f64, lo: f64, hi: f64) -> Result<f64> {
    let k = |x| cubic(a, b, c, x);
    let bracket = Bracket::new(k, lo, hi)?;
    bisect(k, bracket, f64::EPSILON * lo.abs().max(hi.abs()).max(1.0))
}

/// Unique root of a cubic in `(lo, hi)` given `K(lo) < 0 < K(hi)` and convexity on
/// the interval.
///
/// Tries [`cardano_principal_root`] first and falls back to bisection when its value
/// lands outside the interval or its residual is too large.
pub fn cubic_root_in_interval(a: f64, b: f64, c: f64, lo: f64, hi: f64) -> Result<f64> {
    let k_lo = cubic(a, b, c, lo);
    let k_hi = cubic(a, b, c, hi);
    if !(k_lo < 0.0 && k_hi > 0.0) {
        return Err(Error::Bracket { lo, hi, f_lo: k_lo, f_hi: k_hi });
    }
    let scale = 1f64.max(k_lo.abs()).max(k_hi.abs());
    let x = cardano_principal_root(a, b, c);
    if x > lo - 1e-9 && x < hi + 1e-9 {
        let x = x.clamp(lo, hi);
        if cubic(a, b, c, x).abs() <= 1e-9 * scale {
            return Ok(x);
        }
    }
    cubic_root_bisect(a, b, c, lo, hi)
}
