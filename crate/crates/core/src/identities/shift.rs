//! The master shift identity
//!
//! ```text
//! Σ_{k=1}^{m+1} A_k^{(m+1)}(p,b) (−β)^{k−1} Ψ(p−k+1, b+k−1, β, μ+m) = Ψ(p, b, β, μ)
//! ```
//!
//! obtained by putting t = −βe^{−x} in the triangle identity, multiplying by
//! x^{μ+m} e^{−bx} and integrating. β = −1 gives the φ cases, β = +1 the φ̃
//! cases, |β| < 1 the Ψ case.

use crate::error::{Error, Result};
use crate::record::VerificationRecord;
use crate::series::{eval_psi_general, EvalResult, SeriesParams};
use crate::special::{hurwitz_zeta, lerch_phi};
use crate::sum::NeumaierSum;
use crate::triangle::CoeffTriangle;

/// Default relative tolerance for shift-identity residuals.
pub const SHIFT_REL_TOL: f64 = 1e-9;

/// Both sides of the master identity.
#[derive(Debug, Clone, Copy)]
pub struct ShiftSides {
    pub lhs: f64,
    pub rhs: f64,
    /// Propagated error estimate of lhs − rhs.
    pub error: f64,
    pub terms: u64,
}

pub fn master_shift_sides(p: f64, b: f64, beta: f64, mu: f64, m: u32) -> Result<ShiftSides> {
    if !(b > 0.0) {
        return Err(Error::domain("master_shift", format!("b = {b} must be positive")));
    }
    if !(beta.abs() <= 1.0) {
        return Err(Error::domain("master_shift", format!("|beta| = {} exceeds 1", beta.abs())));
    }
    let tri = CoeffTriangle::build(p, b, m as usize + 1)?;
    let row = tri.row(m as usize + 1);
    let alpha = mu + m as f64;
    let mut acc = NeumaierSum::new();
    let mut error = 0.0;
    let mut terms = 0;
    let mut weight = 1.0;
    for (idx, &coef) in row.iter().enumerate() {
        let k = idx as f64 + 1.0;
        let inst = SeriesParams::new(p - k + 1.0, b + k - 1.0, beta, alpha);
        let r = eval_psi_general(inst).map_err(|e| instance_error(inst, e))?;
        acc.add(coef * weight * r.value);
        error += (coef * weight).abs() * r.error_estimate();
        terms += r.terms_used;
        weight *= -beta;
    }
    let rhs_inst = SeriesParams::new(p, b, beta, mu);
    let rhs = eval_psi_general(rhs_inst).map_err(|e| instance_error(rhs_inst, e))?;
    Ok(ShiftSides {
        lhs: acc.value(),
        rhs: rhs.value,
        error: error + rhs.error_estimate(),
        terms: terms + rhs.terms_used,
    })
}

fn instance_error(p: SeriesParams, e: Error) -> Error {
    match e {
        Error::Divergent(msg) => Error::Divergent(format!(
            "instance Ψ({}, {}, {}, {}): {msg}",
            p.a, p.b, p.beta, p.alpha
        )),
        other => other,
    }
}

/// Residual record of the master identity at relative tolerance 1e-9.
pub fn master_shift(p: f64, b: f64, beta: f64, mu: f64, m: u32) -> Result<VerificationRecord> {
    master_shift_tol(p, b, beta, mu, m, SHIFT_REL_TOL)
}

pub fn master_shift_tol(p: f64, b: f64, beta: f64, mu: f64, m: u32, rel: f64) -> Result<VerificationRecord> {
    let s = master_shift_sides(p, b, beta, mu, m)?;
    let id = format!("shift p={p} b={b} beta={beta} mu={mu} m={m}");
    Ok(VerificationRecord::scaled(id, s.lhs, s.rhs, rel)
        .with_method("direct")
        .with_terms(s.terms)
        .with_note(format!("propagated error {:.1e}", s.error)))
}

/// φ(−1, b, μ) = ζ(μ+1, b) family: the master identity with p = −1, β = −1.
pub fn hurwitz_shift(b: f64, mu: f64, m: u32) -> Result<VerificationRecord> {
    master_shift(-1.0, b, -1.0, mu, m)
}

/// φ(−(m+1), b+m, μ+m) in closed form through Hurwitz zeta values:
/// m = 0: ζ(μ+1,b); m = 1: ζ(μ+1,b) − bζ(μ+2,b);
/// m = 2: ½[ζ(μ+1,b) − (2b+1)ζ(μ+2,b) + b(b+1)ζ(μ+3,b)].
pub fn hurwitz_reduction(b: f64, mu: f64, m: u32) -> Result<f64> {
    let z = |j: f64| hurwitz_zeta(mu + j, b);
    match m {
        0 => z(1.0),
        1 => Ok(z(1.0)? - b * z(2.0)?),
        2 => Ok(0.5 * (z(1.0)? - (2.0 * b + 1.0) * z(2.0)? + b * (b + 1.0) * z(3.0)?)),
        _ => Err(Error::domain("hurwitz_reduction", "closed forms are given for m ≤ 2")),
    }
}

/// The m = 2 reduction exactly as printed (without the factor ½).
pub fn hurwitz_reduction_m2_printed(b: f64, mu: f64) -> Result<f64> {
    let z = |j: f64| hurwitz_zeta(mu + j, b);
    Ok(z(1.0)? - (2.0 * b + 1.0) * z(2.0)? + b * (b + 1.0) * z(3.0)?)
}

/// Ψ(−1, b, β, μ) = Φ(−β, μ+1, b) for |β| < 1.
pub fn lerch_reduction(b: f64, beta: f64, mu: f64) -> Result<VerificationRecord> {
    let lhs = eval_psi_general(SeriesParams::new(-1.0, b, beta, mu))?;
    let rhs = lerch_phi(-beta, mu + 1.0, b)?;
    Ok(VerificationRecord::absolute(format!("lerch b={b} beta={beta} mu={mu}"), lhs.value, rhs, 1e-10)
        .with_method(lhs.method.as_str())
        .with_terms(lhs.terms_used))
}

/// φ̃(−1, b, α) = 2^{−α} φ(−1, b/2, α) − φ(−1, b, α), i.e.
/// 2^{−α} ζ(α+1, b/2) − ζ(α+1, b).
pub fn eta_reduction(b: f64, alpha: f64) -> Result<VerificationRecord> {
    if !(alpha > 0.0) {
        return Err(Error::domain("eta_reduction", format!("alpha = {alpha} must be positive")));
    }
    if !(b > 0.0) {
        return Err(Error::domain("eta_reduction", format!("b = {b} must be positive")));
    }
    let lhs: EvalResult = eval_psi_general(SeriesParams::phi_tilde(-1.0, b, alpha))?;
    let rhs = 2f64.powf(-alpha) * hurwitz_zeta(alpha + 1.0, 0.5 * b)? - hurwitz_zeta(alpha + 1.0, b)?;
    Ok(VerificationRecord::absolute(format!("eta b={b} alpha={alpha}"), lhs.value, rhs, 1e-11)
        .with_method(lhs.method.as_str())
        .with_terms(lhs.terms_used))
}
