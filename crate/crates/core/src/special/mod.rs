//! Classical special functions the closed forms reduce to.
//!
//! Gamma, digamma, Hurwitz zeta and the Lerch transcendent, plus the
//! odd-denominator sums S′_r and the gamma-ratio `beta_f` that serves as the
//! generating function of φ(a, b, n) in its first argument.

mod digamma;
mod gamma;
mod lerch;
mod zeta;

pub use digamma::digamma;
pub use gamma::{gamma, GAMMA_MAX_ARG};
pub use lerch::lerch_phi;
pub use zeta::{hurwitz_zeta, hurwitz_zeta_with_bound};

use crate::error::{Error, Result};

/// Euler's constant C (frozen; the unit tests recompute it from the
/// harmonic-number limit).
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_86;

/// Catalan's constant G = S′₂.
#[allow(clippy::excessive_precision)]
pub const CATALAN: f64 = 0.915_965_594_177_219_02;

pub const PI: f64 = std::f64::consts::PI;

/// S′_r = 1 − 3^{-r} + 5^{-r} − 7^{-r} + ⋯
pub fn s_prime(r: u32) -> Result<f64> {
    match r {
        0 => Err(Error::domain("s_prime", "r must be at least 1")),
        1 => Ok((digamma(0.75)? - digamma(0.25)?) / 4.0),
        _ => {
            let r_f = r as f64;
            let diff = hurwitz_zeta(r_f, 0.25)? - hurwitz_zeta(r_f, 0.75)?;
            Ok(diff * 4f64.powi(-(r as i32)))
        }
    }
}

/// f(p, a, b) = Γ(p+b) Γ(a+1) / Γ(p+a+b+1) = ∫₀¹ x^{p+b−1} (1−x)^a dx.
pub fn beta_f(p: f64, a: f64, b: f64) -> Result<f64> {
    if !(p + b > 0.0) {
        return Err(Error::domain("beta_f", format!("p + b = {} must be positive", p + b)));
    }
    if !(a > -1.0) {
        return Err(Error::domain("beta_f", format!("a = {a} must exceed -1")));
    }
    Ok(gamma(p + b)? * gamma(a + 1.0)? / gamma(p + a + b + 1.0)?)
}
