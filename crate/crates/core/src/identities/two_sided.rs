//! The two-sided family
//!
//! ```text
//! I_k(b, β) = ∫_{−∞}^{∞} x² e^{−x(b+k−1)} / ((1 + e^{−x})(1 + βe^{−x})^k) dx,   0 < b < 1, 0 ≤ β < 1.
//! ```
//!
//! With J_j(b) = ∫ y^j e^{−by}/(1 + e^{−y}) dy, so that J_0 = π csc πb,
//! J_1 = π² csc πb cot πb and J_2 = π³ csc³ πb (2 − sin² πb), partial
//! fractions and the shift x = y + ln β give
//!
//! ```text
//! I_1 = G(b, β) = [J_2 − β^{1−b}(J_2 + 2 ln β J_1 + ln²β J_0)] / (1 − β),
//! b I_1 − β I_2 = b G + β ∂G/∂β.
//! ```

use crate::error::{Error, Result};
use crate::quadrature::integrate_two_sided;
use crate::record::VerificationRecord;
use crate::series::EvalResult;
use crate::special::PI;
use crate::triangle::CoeffTriangle;

/// Relative tolerance for comparing the family against the oracle.
pub const TWO_SIDED_REL_TOL: f64 = 1e-6;

fn check(b: f64, beta: f64, func: &'static str) -> Result<()> {
    if !(b > 0.0 && b < 1.0) {
        return Err(Error::domain(func, format!("b = {b} must lie in (0, 1)")));
    }
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::domain(func, format!("beta = {beta} must lie in [0, 1)")));
    }
    Ok(())
}

fn check_m(m: u32, func: &'static str) -> Result<()> {
    if m > 1 {
        return Err(Error::domain(func, "m must be 0 or 1"));
    }
    Ok(())
}

/// ln(1 + e^z) without overflow.
fn softplus(z: f64) -> f64 {
    z.max(0.0) + (-z.abs()).exp().ln_1p()
}

/// The integrand of I_k at x, evaluated in log form so both tails are stable.
pub fn two_sided_integrand(b: f64, beta: f64, k: u32, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let kf = k as f64;
    let mut log = 2.0 * x.abs().ln() - x * (b + kf - 1.0) - softplus(-x);
    if beta > 0.0 {
        log -= kf * softplus(beta.ln() - x);
    }
    log.exp()
}

/// I_k(b, β) by two-sided tanh-sinh quadrature.
pub fn two_sided_oracle(b: f64, beta: f64, k: u32) -> Result<EvalResult> {
    check(b, beta, "two_sided_oracle")?;
    if k == 0 {
        return Err(Error::domain("two_sided_oracle", "k must be at least 1"));
    }
    integrate_two_sided(|x| two_sided_integrand(b, beta, k, x))
}

fn base_moments(b: f64) -> [f64; 3] {
    let (s, c) = (PI * b).sin_cos();
    let csc = 1.0 / s;
    [PI * csc, PI * PI * csc * c / s, PI.powi(3) * csc.powi(3) * (2.0 - s * s)]
}

/// π³ csc πb (2 − sin² πb), the base factor of the printed family.
pub fn printed_base(b: f64) -> f64 {
    let s = (PI * b).sin();
    PI.powi(3) / s * (2.0 - s * s)
}

/// Right-hand side as printed: C/(1−β) for m = 0 and
/// C (b/(1−β) + β/(1−β)²) for m = 1, with C = π³ csc πb (2 − sin² πb).
pub fn two_sided_printed(b: f64, beta: f64, m: u32) -> Result<f64> {
    check(b, beta, "two_sided_printed")?;
    check_m(m, "two_sided_printed")?;
    let c = printed_base(b);
    let q = 1.0 - beta;
    Ok(match m {
        0 => c / q,
        _ => c * (b / q + beta / (q * q)),
    })
}

/// Closed form of I_1 for m = 0 and of b I_1 − β I_2 for m = 1.
pub fn two_sided_closed(b: f64, beta: f64, m: u32) -> Result<f64> {
    check(b, beta, "two_sided_closed")?;
    check_m(m, "two_sided_closed")?;
    let [j0, j1, j2] = base_moments(b);
    if beta == 0.0 {
        return Ok(if m == 0 { j2 } else { b * j2 });
    }
    let l = beta.ln();
    let q = 1.0 - beta;
    let shifted = j2 + 2.0 * l * j1 + l * l * j0;
    let g = (j2 - beta.powf(1.0 - b) * shifted) / q;
    if m == 0 {
        return Ok(g);
    }
    let dn = -beta.powf(-b) * ((1.0 - b) * shifted + 2.0 * j1 + 2.0 * l * j0);
    let dg = dn / q + (j2 - beta.powf(1.0 - b) * shifted) / (q * q);
    Ok(b * g + beta * dg)
}

/// Σ_k A_k^{(m+1)}(−1, b)(−β)^{k−1} I_k from oracle values of I_k.
pub fn two_sided_lhs(b: f64, beta: f64, m: u32) -> Result<EvalResult> {
    check(b, beta, "two_sided_family")?;
    check_m(m, "two_sided_family")?;
    let tri = CoeffTriangle::build(-1.0, b, m as usize + 1)?;
    let mut value = 0.0;
    let mut bound = 0.0;
    let mut evals = 0;
    let mut weight = 1.0;
    for (idx, &coef) in tri.row(m as usize + 1).iter().enumerate() {
        if weight == 0.0 {
            // I_k for k ≥ 2 diverges at β = 0 but carries weight zero
            break;
        }
        let r = two_sided_oracle(b, beta, idx as u32 + 1)?;
        value += coef * weight * r.value;
        bound += (coef * weight).abs() * r.abs_error_bound;
        evals += r.terms_used;
        weight *= -beta;
    }
    Ok(EvalResult::new(value, bound, evals, crate::series::Method::Oracle))
}

/// Oracle against the printed right-hand side at relative tolerance 1e-6.
pub fn two_sided_family(b: f64, beta: f64, m: u32) -> Result<VerificationRecord> {
    let lhs = two_sided_lhs(b, beta, m)?;
    let rhs = two_sided_printed(b, beta, m)?;
    Ok(
        VerificationRecord::relative(format!("two-sided b={b} beta={beta} m={m}"), lhs.value, rhs, TWO_SIDED_REL_TOL)
            .with_method("oracle")
            .with_terms(lhs.terms_used),
    )
}

/// Oracle against [`two_sided_closed`] at relative tolerance 1e-6.
pub fn two_sided_corrected(b: f64, beta: f64, m: u32) -> Result<VerificationRecord> {
    let lhs = two_sided_lhs(b, beta, m)?;
    let rhs = two_sided_closed(b, beta, m)?;
    Ok(VerificationRecord::relative(
        format!("two-sided corrected b={b} beta={beta} m={m}"),
        lhs.value,
        rhs,
        TWO_SIDED_REL_TOL,
    )
    .with_method("oracle")
    .with_terms(lhs.terms_used))
}
