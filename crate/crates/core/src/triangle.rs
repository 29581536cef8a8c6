//! The coefficient triangle A_k^{(m)}(p, b).
//!
//! Row m expresses Σ_i (−1)^i C(p,i) (b+i)^{m−1} t^i as the finite combination
//! Σ_k A_k^{(m)} t^{k−1} (1−t)^{p−k+1}. Rows are built by
//!
//! ```text
//! A_1^{(m+1)}     = b · A_1^{(m)}
//! A_k^{(m+1)}     = −(p−k+2) · A_{k−1}^{(m)} + (b+k−1) · A_k^{(m)},   2 ≤ k ≤ m
//! A_{m+1}^{(m+1)} = −(p−m+1) · A_m^{(m)}
//! ```

use crate::error::{Error, Result};
use crate::series::{EvalResult, Method};
use crate::sum::{DoubleDouble, NeumaierSum};

/// Deepest row that [`CoeffTriangle::build`] accepts.
pub const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTriangle {
    p: f64,
    b: f64,
    rows: Vec<Vec<f64>>,
}

impl CoeffTriangle {
    /// Rows 1..=depth.
    pub fn build(p: f64, b: f64, depth: usize) -> Result<Self> {
        if depth == 0 || depth > MAX_DEPTH {
            return Err(Error::domain(
                "CoeffTriangle::build",
                format!("depth {depth} outside 1..={MAX_DEPTH}"),
            ));
        }
        if !(p.is_finite() && b.is_finite()) {
            return Err(Error::domain("CoeffTriangle::build", "p and b must be finite"));
        }
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(depth);
        rows.push(vec![1.0]);
        for m in 1..depth {
            let prev = &rows[m - 1];
            let mut next = vec![0.0; m + 1];
            next[0] = b * prev[0];
            for k in 2..=m {
                let kf = k as f64;
                next[k - 1] = -(p - kf + 2.0) * prev[k - 2] + (b + kf - 1.0) * prev[k - 1];
            }
            next[m] = -(p - m as f64 + 1.0) * prev[m - 1];
            rows.push(next);
        }
        Ok(Self { p, b, rows })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of rows.
    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    /// Row m (1-based), i.e. A_1^{(m)}, …, A_m^{(m)}.
    pub fn row(&self, m: usize) -> &[f64] {
        &self.rows[m - 1]
    }

    /// A_k^{(m)}, both indices 1-based.
    pub fn get(&self, m: usize, k: usize) -> f64 {
        self.rows[m - 1][k - 1]
    }

    /// Σ_{k=1}^{m+1} A_k^{(m+1)} t^{k−1} (1−t)^{p−k+1}.
    pub fn lhs_poly(&self, m: usize, t: f64) -> Result<f64> {
        if m + 1 > self.depth() {
            return Err(Error::domain(
                "lhs_poly",
                format!("row {} not built (depth {})", m + 1, self.depth()),
            ));
        }
        if !(t <= 1.0) {
            return Err(Error::domain("lhs_poly", format!("t = {t} must not exceed 1")));
        }
        let one_minus = 1.0 - t;
        let mut acc = NeumaierSum::new();
        for (idx, &coef) in self.row(m + 1).iter().enumerate() {
            if coef == 0.0 {
                continue;
            }
            let exponent = self.p - idx as f64;
            if one_minus == 0.0 && exponent < 0.0 {
                return Err(Error::domain(
                    "lhs_poly",
                    format!("(1−t)^{exponent} is singular at t = 1"),
                ));
            }
            acc.add(coef * t.powi(idx as i32) * one_minus.powf(exponent));
        }
        Ok(acc.value())
    }
}

/// (−1)^{m−1} p (p−1) ⋯ (p−m+2): the closed form of A_m^{(m)}.
pub fn corner_coefficient(p: f64, m: usize) -> f64 {
    let mut v = 1.0;
    for j in 0..m.saturating_sub(1) {
        v *= -(p - j as f64);
    }
    v
}

/// Σ_{i≥0} (−1)^i C(p,i) (b+i)^m t^i for |t| < 1.
///
/// Terms are formed and summed in double-double, since for t < 0 they can
/// exceed the sum by many orders of magnitude.
pub fn rhs_series(p: f64, b: f64, m: u32, t: f64) -> Result<EvalResult> {
    if !(t.abs() < 1.0) {
        return Err(Error::domain("rhs_series", format!("|t| = {} must be < 1", t.abs())));
    }
    if !(p.is_finite() && b.is_finite()) {
        return Err(Error::domain("rhs_series", "p and b must be finite"));
    }
    let terminating = (p >= 0.0 && p.fract() == 0.0).then_some(p as u64);
    let mut acc = DoubleDouble::default();
    let mut abs_sum = 0.0;
    let mut c = DoubleDouble::new(1.0);
    let mut weight = DoubleDouble::new(1.0);
    let mf = m as f64;
    let floor = |abs_sum: f64, s: f64| 2.0 * f64::EPSILON * s.abs() + 64.0 * f64::EPSILON * f64::EPSILON * abs_sum;
    for n in 0..crate::series::MAX_TERMS {
        let nf = n as f64;
        if terminating.is_some_and(|k| n > k) || weight.hi == 0.0 {
            let s = acc.value();
            return Ok(EvalResult::new(s, floor(abs_sum, s), n, Method::Direct));
        }
        let term = c.mul(weight).mul(DoubleDouble::new(b + nf).powi(m));
        if nf > p && b + nf > 0.0 {
            let growth = ((b + nf + 1.0) / (b + nf)).powf(mf);
            let rho = t.abs() * ((nf - p) / (nf + 1.0)).max(1.0) * growth;
            if rho < 1.0 {
                let s = acc.value();
                let tail = term.hi.abs() / (1.0 - rho);
                let rounding = floor(abs_sum, s);
                if tail <= (1e-13 * s.abs().max(1.0)).max(rounding) {
                    return Ok(EvalResult::new(s, tail + rounding, n, Method::Direct));
                }
            }
        }
        acc = acc.add(term);
        abs_sum += term.hi.abs();
        c = c.mul_f64(nf - p).div_f64(nf + 1.0);
        weight = weight.mul_f64(t);
    }
    Err(Error::NonConvergence {
        value: acc.value(),
        bound: f64::INFINITY,
        terms: crate::series::MAX_TERMS,
    })
}
