//! Digamma ψ(x): upward shift to x ≥ 13, then the asymptotic series through x^{-12}.

use std::f64::consts::PI;

use super::gamma::sin_pi;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

/// B_{2k} / (2k) for k = 1..6.
const ASYMP: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
];

const SHIFT_TO: f64 = 13.0;

pub fn digamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("digamma", "NaN argument"));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole { func: "digamma", x });
    }
    if x < 0.0 {
        // ψ(x) = ψ(1−x) − π cot(πx)
        let cot = cos_pi(x) / sin_pi(x);
        return Ok(digamma(1.0 - x)? - PI * cot);
    }
    let mut acc = NeumaierSum::new();
    let mut y = x;
    while y < SHIFT_TO {
        acc.add(-1.0 / y);
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut p = inv2;
    let mut tail = 0.0;
    for c in ASYMP {
        tail += c * p;
        p *= inv2;
    }
    acc.add(y.ln());
    acc.add(-0.5 / y);
    acc.add(-tail);
    Ok(acc.value())
}

fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}
