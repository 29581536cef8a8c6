//! Hurwitz zeta ζ(s, q) for s > 1, q > 0 by Euler–Maclaurin summation.
//!
//! The first [`SHIFT`] terms are summed explicitly; the remainder at
//! N = q + SHIFT is replaced by the integral, the half-term and the Bernoulli
//! corrections through B₁₆. For x ↦ x^{-s} the truncation error has the sign
//! of, and is bounded by, the first omitted correction (B₁₈).

use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

const SHIFT: usize = 12;

/// B_{2k} / (2k)! for k = 1..=9 (the last one only feeds the error bound).
#[allow(clippy::excessive_precision)]
const BERNOULLI_OVER_FACT: [f64; 9] = [
    1.0 / 12.0,                          // B2/2!
    -1.0 / 720.0,                        // B4/4!
    1.0 / 30_240.0,                      // B6/6!
    -1.0 / 1_209_600.0,                  // B8/8!
    1.0 / 47_900_160.0,                  // B10/10!
    -691.0 / 1_307_674_368_000.0,        // B12/12!
    1.0 / 74_724_249_600.0,              // B14/14!
    -3617.0 / 10_670_622_842_880_000.0,  // B16/16!
    43_867.0 / 5_109_094_217_170_944_000.0, // B18/18!
];

/// ζ(s, q) together with the Euler–Maclaurin truncation bound.
pub fn hurwitz_zeta_with_bound(s: f64, q: f64) -> Result<(f64, f64)> {
    if !(s > 1.0) {
        return Err(Error::domain("hurwitz_zeta", format!("s = {s} must exceed 1")));
    }
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::domain("hurwitz_zeta", format!("q = {q} must be positive")));
    }
    let mut acc = NeumaierSum::new();
    for j in 0..SHIFT {
        acc.add((q + j as f64).powf(-s));
    }
    let n = q + SHIFT as f64;
    let n_pow = n.powf(-s);
    acc.add(n * n_pow / (s - 1.0));
    acc.add(0.5 * n_pow);

    // term_k = B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let inv_n2 = 1.0 / (n * n);
    let mut rising = s;
    let mut power = n_pow / n;
    let mut omitted = 0.0;
    for (k, &c) in BERNOULLI_OVER_FACT.iter().enumerate() {
        let term = c * rising * power;
        if k + 1 == BERNOULLI_OVER_FACT.len() {
            omitted = term.abs();
        } else {
            acc.add(term);
        }
        let m = 2.0 * k as f64;
        rising *= (s + m + 1.0) * (s + m + 2.0);
        power *= inv_n2;
    }
    let value = acc.value();
    let bound = omitted + 4.0 * f64::EPSILON * value.abs();
    Ok((value, bound))
}

/// ζ(s, q) = Σ_{j≥0} (q + j)^{-s}.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    hurwitz_zeta_with_bound(s, q).map(|(v, _)| v)
}
