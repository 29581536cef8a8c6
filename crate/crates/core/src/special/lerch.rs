use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

const TARGET: f64 = 1e-14;
const MAX_TERMS: usize = 10_000_000;

/// Lerch transcendent Φ(β, s, b) = Σ_{j≥0} β^j (b + j)^{-s} for |β| < 1, b > 0.
///
/// Summed directly; stops once the geometric tail bound
/// |T_N| / (1 − ρ_N) drops below 1e-14, where ρ_N bounds every later term ratio.
pub fn lerch_phi(beta: f64, s: f64, b: f64) -> Result<f64> {
    if !(beta.abs() < 1.0) {
        return Err(Error::domain("lerch_phi", format!("|beta| = {} must be < 1", beta.abs())));
    }
    if !(b > 0.0) {
        return Err(Error::domain("lerch_phi", format!("b = {b} must be positive")));
    }
    if !s.is_finite() {
        return Err(Error::domain("lerch_phi", "s must be finite"));
    }
    let mut acc = NeumaierSum::new();
    let mut weight = 1.0;
    for j in 0..MAX_TERMS {
        let base = b + j as f64;
        let term = weight * base.powf(-s);
        if term == 0.0 {
            break;
        }
        // ratio of later terms: |β| · ((b+i)/(b+i+1))^s, i ≥ j
        let growth = if s >= 0.0 { 1.0 } else { (1.0 + 1.0 / base).powf(-s) };
        let rho = beta.abs() * growth;
        if rho < 1.0 {
            let tail = term.abs() / (1.0 - rho);
            if tail <= TARGET * acc.value().abs().max(1.0) {
                break;
            }
        }
        acc.add(term);
        weight *= beta;
    }
    Ok(acc.value())
}
