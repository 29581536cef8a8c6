//! Closed forms for ∂φ/∂a and the harmonic-weighted sums built from it.
//!
//! Expanding f(p,a,b) = Γ(p+b)Γ(a+1)/Γ(p+a+b+1) = Σ (−p)^n φ(a,b,n) and
//! differentiating log f in a gives
//!
//! ```text
//! φ'_a(a,b,n) = (ψ(a+1) − ψ(a+b+1)) φ(a,b,n) + Σ_{k=1}^{n} ζ(k+1, a+b+1) φ(a,b,n−k)
//! ```

use crate::error::{Error, Result};
use crate::identities::ramanujan::{ramanujan_phi, ramanujan_sequence};
use crate::record::VerificationRecord;
use crate::special::{beta_f, digamma, hurwitz_zeta, EULER_GAMMA};
use crate::sum::NeumaierSum;

fn check(a: f64, b: f64, func: &'static str) -> Result<()> {
    if !(a > -1.0) {
        return Err(Error::domain(func, format!("a = {a} must exceed -1")));
    }
    if !(b > 0.0) {
        return Err(Error::domain(func, format!("b = {b} must be positive")));
    }
    Ok(())
}

/// ∂φ/∂a (a, b, n) in closed form.
pub fn phi_da_closed(a: f64, b: f64, n: u32) -> Result<f64> {
    check(a, b, "phi_da_closed")?;
    let phis = ramanujan_sequence(a, b, n)?;
    let c = a + b + 1.0;
    let mut acc = NeumaierSum::new();
    acc.add((digamma(a + 1.0)? - digamma(c)?) * phis[n as usize].value);
    for k in 1..=n as usize {
        acc.add(hurwitz_zeta(k as f64 + 1.0, c)? * phis[n as usize - k].value);
    }
    Ok(acc.value())
}

/// ∂φ/∂a (0, b, n) = −(C + ψ(b+1))/b^{n+1} + Σ_{k=1}^{n} ζ(k+1, b+1)/b^{n+1−k}.
pub fn phi_da_zero_expansion(b: f64, n: u32) -> Result<f64> {
    check(0.0, b, "phi_da_zero_expansion")?;
    let mut acc = NeumaierSum::new();
    acc.add(-(EULER_GAMMA + digamma(b + 1.0)?) / b.powi(n as i32 + 1));
    for k in 1..=n {
        acc.add(hurwitz_zeta(k as f64 + 1.0, b + 1.0)? / b.powi((n + 1 - k) as i32));
    }
    Ok(acc.value())
}

/// 1/b^n − (a/1!)(1/a)/(b+1)^n + (a(a−1)/2!)(1/a + 1/(a−1))/(b+2)^n − ⋯
/// = 1/b^n + φ'_a(a, b, n−1).
pub fn harmonic_weighted_sum(a: f64, b: f64, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("harmonic_weighted_sum", "n must be at least 1"));
    }
    Ok(b.powi(-(n as i32)) + phi_da_closed(a, b, n - 1)?)
}

/// Σ_{j≥1} 1/(j (b+j)^n) = −φ'_a(0, b, n−1).
pub fn inverse_factor_sum(b: f64, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("inverse_factor_sum", "n must be at least 1"));
    }
    Ok(-phi_da_closed(0.0, b, n - 1)?)
}

/// m-th a-derivative of φ(a, b, 0) = Γ(a+1)Γ(b)/Γ(a+b+1) by central
/// differences of the gamma ratio, with one Richardson step.
pub fn phi_a_derivative_fd(a: f64, b: f64, m: u32) -> Result<f64> {
    let f = |x: f64| beta_f(0.0, x, b);
    let diff = |h: f64| -> Result<f64> {
        // m-th central difference over m+1 points spaced h
        let mut acc = NeumaierSum::new();
        let mut binom = 1.0;
        for j in 0..=m {
            let x = a + (m as f64 / 2.0 - j as f64) * h;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc.add(sign * binom * f(x)?);
            binom *= (m - j) as f64 / (j + 1) as f64;
        }
        Ok(acc.value() / h.powi(m as i32))
    };
    let h = 1e-2;
    let d1 = diff(h)?;
    let d2 = diff(h / 2.0)?;
    Ok((4.0 * d2 - d1) / 3.0)
}

/// (−1)^m m! φ(b−1, a+1, m) against ∂^m φ(a,b,0)/∂a^m.
///
/// m = 1 uses the closed form; larger m use [`phi_a_derivative_fd`], so the
/// tolerance loosens from 1e-9 to 1e-5 (relative).
pub fn interchange_check(a: f64, b: f64, m: u32) -> Result<VerificationRecord> {
    check(a, b, "interchange_check")?;
    if m == 0 {
        return Err(Error::domain("interchange_check", "m must be at least 1"));
    }
    let swapped = ramanujan_phi(b - 1.0, a + 1.0, m)?;
    let mut fact = 1.0;
    for j in 2..=m {
        fact *= j as f64;
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let lhs = sign * fact * swapped.value;
    let id = format!("interchange a={a} b={b} m={m}");
    if m == 1 {
        let rhs = phi_da_closed(a, b, 0)?;
        Ok(VerificationRecord::scaled(id, lhs, rhs, 1e-9).with_method("closed-form"))
    } else {
        let rhs = phi_a_derivative_fd(a, b, m)?;
        Ok(VerificationRecord::scaled(id, lhs, rhs, 1e-5).with_method("finite-difference"))
    }
}
