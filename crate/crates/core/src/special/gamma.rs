//! Gamma function: Stirling series for x ≥ 10, upward recursion below,
//! reflection for x < 0.5.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Stirling corrections B_{2k} / (2k(2k−1)) for k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const STIRLING_FROM: f64 = 10.0;

/// Largest argument whose gamma value is representable.
pub const GAMMA_MAX_ARG: f64 = 171.6;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Γ(x) for real x.
///
/// Non-positive integers are poles; arguments above [`GAMMA_MAX_ARG`] overflow.
/// Negative non-integers go through the reflection formula.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("gamma", "NaN argument"));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { func: "gamma", x });
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow { func: "gamma", x });
    }
    if x < 0.5 {
        // Γ(x)Γ(1−x) = π / sin(πx)
        let s = sin_pi(x);
        let g = gamma_positive(1.0 - x);
        return Ok(PI / (s * g));
    }
    Ok(gamma_positive(x))
}

/// Γ(x) for x ≥ 0.5.
fn gamma_positive(x: f64) -> f64 {
    let mut y = x;
    let mut denom = 1.0;
    while y < STIRLING_FROM {
        denom *= y;
        y += 1.0;
    }
    stirling(y) / denom
}

/// Stirling series with the power split as y^{y/2} e^{-y/2}, squared.
fn stirling(y: f64) -> f64 {
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut p = inv;
    let mut corr = 0.0;
    for c in STIRLING {
        corr += c * p;
        p *= inv2;
    }
    let half = y.powf(0.5 * y) * (-0.5 * y).exp();
    (2.0 * PI * inv).sqrt() * half * half * corr.exp()
}

/// sin(πx) with exact zeros at integers and reduced argument.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor(); // r in [0, 2)
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r < 0.5 {
        (PI * r).sin()
    } else if r < 1.5 {
        (PI * (1.0 - r)).sin()
    } else {
        (PI * (r - 2.0)).sin()
    }
}
