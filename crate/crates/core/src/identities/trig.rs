//! Closed forms for λ_c = ∫₀^∞ x^α sin^a x cos wx dx and
//! λ_s = ∫₀^∞ x^α sin^a x sin wx dx (Abel sense), and the cos^a x family.
//!
//! Writing (1 − e^{−2ix})^a = (2i sin x)^a e^{−iax} in the Abel integral
//! ∫ x^α e^{−2ibx} (1 − e^{−2ix})^a dx with w = 2b + a gives
//! λ_c − iλ_s = K · i^{−(a+α+1)}, where K = 2^{−a−α−1} Γ(α+1) φ(a, (w−a)/2, α):
//!
//! ```text
//! λ_c = −K sin((a+α)π/2),    λ_s = K cos((a+α)π/2).
//! ```

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::derivative::phi_da_closed;
use crate::series::{eval_phi, eval_phi_da, eval_phi_tilde};
use crate::special::gamma;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrigResult {
    pub lambda_c: f64,
    pub lambda_s: f64,
    pub a: u32,
    /// Frequency w (or v for the cos^a family).
    pub w: f64,
    pub alpha: f64,
}

fn check(a: u32, w: f64, alpha: f64, func: &'static str) -> Result<()> {
    if a == 0 {
        return Err(Error::domain(func, "a must be a positive integer"));
    }
    if !(w > a as f64) {
        return Err(Error::domain(func, format!("frequency {w} must exceed a = {a}")));
    }
    if !(alpha >= 0.0) {
        return Err(Error::domain(func, format!("alpha = {alpha} must be non-negative")));
    }
    Ok(())
}

fn prefactor(a: f64, alpha: f64) -> Result<f64> {
    Ok(2f64.powf(-a - alpha - 1.0) * gamma(alpha + 1.0)?)
}

/// Corrected λ_c, λ_s for ∫ x^α sin^a x {cos, sin}(wx) dx.
pub fn trig_lambda(a: u32, w: f64, alpha: f64) -> Result<TrigResult> {
    check(a, w, alpha, "trig_lambda")?;
    let af = a as f64;
    let k = prefactor(af, alpha)? * eval_phi(af, 0.5 * (w - af), alpha)?.value;
    let theta = 0.5 * (af + alpha) * PI;
    Ok(TrigResult {
        lambda_c: -k * theta.sin(),
        lambda_s: k * theta.cos(),
        a,
        w,
        alpha,
    })
}

/// λ_c, λ_s exactly as printed: φ evaluated at (u+a)/2 and phase (a−α)π/2.
pub fn trig_lambda_printed(a: u32, u: f64, alpha: f64) -> Result<TrigResult> {
    let af = a as f64;
    if !(alpha >= 0.0) || a == 0 {
        return Err(Error::domain("trig_lambda_printed", "need a ≥ 1 and alpha ≥ 0"));
    }
    let k = prefactor(af, alpha)? * eval_phi(af, 0.5 * (u + af), alpha)?.value;
    let theta = 0.5 * (af - alpha) * PI;
    Ok(TrigResult {
        lambda_c: k * theta.sin(),
        lambda_s: k * theta.cos(),
        a,
        w: u,
        alpha,
    })
}

/// ∫ x^α cos^a x {cos, sin}(vx) dx = ∓2^{−a−α−1} Γ(α+1) φ̃(a, (v−a)/2, α) {sin, cos}(απ/2).
pub fn trig_cos(a: u32, v: f64, alpha: f64) -> Result<TrigResult> {
    check(a, v, alpha, "trig_cos")?;
    let af = a as f64;
    let k = prefactor(af, alpha)? * eval_phi_tilde(af, 0.5 * (v - af), alpha)?.value;
    let theta = 0.5 * alpha * PI;
    Ok(TrigResult {
        lambda_c: -k * theta.sin(),
        lambda_s: k * theta.cos(),
        a,
        w: v,
        alpha,
    })
}

/// ∂φ/∂a at (a, b, α): closed form for integer α, direct series otherwise.
fn phi_da(a: f64, b: f64, alpha: f64) -> Result<f64> {
    if alpha.fract() == 0.0 && alpha < 64.0 {
        phi_da_closed(a, b, alpha as u32)
    } else {
        Ok(eval_phi_da(a, b, alpha)?.value)
    }
}

/// (∂λ_c/∂a, ∂λ_s/∂a) at fixed w: the log-sin weighted integrals.
///
/// In the Abel sense these equal ∫ x^α sin^a x · L(x) e^{−iwx} split into
/// parts, where L(x) = ln|sin x| + iπ⌊x/π⌋ continues log sin x along the
/// principal branch of (1 − e^{−2ix})^a.
pub fn log_sin_integral(a: u32, w: f64, alpha: f64) -> Result<(f64, f64)> {
    check(a, w, alpha, "log_sin_integral")?;
    let af = a as f64;
    let b = 0.5 * (w - af);
    let c = prefactor(af, alpha)?;
    let phi = eval_phi(af, b, alpha)?.value;
    let phi_b = -(alpha + 1.0) * eval_phi(af, b, alpha + 1.0)?.value;
    let phi_a = phi_da(af, b, alpha)?;
    let k = c * phi;
    // d/da at fixed w: b = (w − a)/2 moves with a
    let dk = -LN_2 * k + c * (phi_a - 0.5 * phi_b);
    let theta = 0.5 * (af + alpha) * PI;
    let (s, co) = theta.sin_cos();
    let d_c = -dk * s - k * co * 0.5 * PI;
    let d_s = dk * co - k * s * 0.5 * PI;
    Ok((d_c, d_s))
}
