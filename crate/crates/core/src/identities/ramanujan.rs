//! σ_k and Ramanujan's recursion n·φ(a,b,n) = Σ_{k=1}^n σ_k φ(a,b,n−k).

use crate::error::{Error, Result};
use crate::series::{EvalResult, Method};
use crate::special::{beta_f, digamma, hurwitz_zeta_with_bound};
use crate::sum::NeumaierSum;

/// Relative accuracy assumed for the gamma ratio seeding the recursion.
const SEED_REL: f64 = 1e-13;

fn check(a: f64, b: f64, func: &'static str) -> Result<()> {
    if !(b > 0.0) {
        return Err(Error::domain(func, format!("b = {b} must be positive")));
    }
    if !(a + b + 1.0 > 0.0) {
        return Err(Error::domain(func, format!("a + b + 1 = {} must be positive", a + b + 1.0)));
    }
    Ok(())
}

/// σ_k together with an absolute error bound.
fn sigma_with_bound(a: f64, b: f64, k: u32) -> Result<(f64, f64)> {
    check(a, b, "sigma")?;
    match k {
        0 => Err(Error::domain("sigma", "k must be at least 1")),
        1 => {
            let v = digamma(a + b + 1.0)? - digamma(b)?;
            Ok((v, 4e-14 * (1.0 + v.abs())))
        }
        _ => {
            let kf = k as f64;
            let (z1, e1) = hurwitz_zeta_with_bound(kf, b)?;
            let (z2, e2) = hurwitz_zeta_with_bound(kf, a + b + 1.0)?;
            let v = z1 - z2;
            Ok((v, e1 + e2 + f64::EPSILON * (z1.abs() + z2.abs())))
        }
    }
}

/// σ_1 = ψ(a+b+1) − ψ(b); σ_k = ζ(k,b) − ζ(k,a+b+1) for k ≥ 2.
pub fn sigma(a: f64, b: f64, k: u32) -> Result<f64> {
    sigma_with_bound(a, b, k).map(|(v, _)| v)
}

/// Partial sum of the interleaved series 1/b^k − 1/(a+b+1)^k + 1/(b+1)^k − ⋯
/// over `pairs` pairs. Converges slowly; used as a cross-check of [`sigma`].
pub fn sigma_interleaved(a: f64, b: f64, k: u32, pairs: u64) -> f64 {
    let mut acc = NeumaierSum::new();
    for j in 0..pairs {
        let jf = j as f64;
        acc.add((b + jf).powi(-(k as i32)) - (a + b + 1.0 + jf).powi(-(k as i32)));
    }
    acc.value()
}

/// φ(a,b,0), …, φ(a,b,n) by the recursion, with first-order error bounds.
pub fn ramanujan_sequence(a: f64, b: f64, n: u32) -> Result<Vec<EvalResult>> {
    check(a, b, "ramanujan_phi")?;
    if !(a > -1.0) {
        return Err(Error::domain("ramanujan_phi", format!("a = {a} must exceed -1")));
    }
    let phi0 = beta_f(0.0, a, b)?;
    let sigmas = (1..=n)
        .map(|k| sigma_with_bound(a, b, k))
        .collect::<Result<Vec<_>>>()?;
    let mut values = vec![phi0];
    let mut errors = vec![SEED_REL * phi0.abs()];
    for m in 1..=n as usize {
        let mut acc = NeumaierSum::new();
        let mut err = 0.0;
        let mut mag = 0.0;
        for k in 1..=m {
            let (s, ds) = sigmas[k - 1];
            let prev = values[m - k];
            acc.add(s * prev);
            err += s.abs() * errors[m - k] + ds * prev.abs();
            mag += (s * prev).abs();
        }
        let mf = m as f64;
        values.push(acc.value() / mf);
        errors.push((err + 2.0 * f64::EPSILON * mag) / mf);
    }
    Ok(values
        .into_iter()
        .zip(errors)
        .enumerate()
        .map(|(m, (v, e))| EvalResult::new(v, e, m as u64 + 1, Method::Recursion))
        .collect())
}

/// φ(a, b, n) from n·φ_n = Σ σ_k φ_{n−k}, seeded with Γ(a+1)Γ(b)/Γ(a+b+1).
pub fn ramanujan_phi(a: f64, b: f64, n: u32) -> Result<EvalResult> {
    let seq = ramanujan_sequence(a, b, n)?;
    Ok(seq[n as usize])
}
