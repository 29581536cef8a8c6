//! Double-exponential (tanh-sinh) quadrature on (0, 1).
//!
//! The node map is t = 1/(1 + e^{−2u}), u = (π/2) sinh τ, so that
//! 1 − t = 1/(1 + e^{2u}) is available to full relative precision near t = 1.
//! Integrands receive both t and 1 − t.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::series::{EvalResult, Method};

const TAU_MAX: f64 = 6.0;

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_levels: u32,
    /// Relative error estimate above which an unconverged result is an error.
    pub accept: f64,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-13,
            max_levels: 12,
            accept: 1e-10,
        }
    }
}

/// Raw outcome of a vector-valued tanh-sinh run.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Quad<const N: usize> {
    pub value: [f64; N],
    pub estimate: f64,
    pub evals: u64,
    pub converged: bool,
}

/// Integrates every component of `f(t, 1−t)` over (0, 1) with shared nodes.
pub(crate) fn tanh_sinh<const N: usize, F>(mut f: F, opts: &QuadOptions) -> Quad<N>
where
    F: FnMut(f64, f64) -> [f64; N],
{
    let mut evals = 0u64;
    let mut node_sum = |tau: f64, acc: &mut [f64; N], mag: &mut f64| {
        let u = 0.5 * PI * tau.sinh();
        let e = (-2.0 * u.abs()).exp();
        let (t, s) = if u >= 0.0 {
            (1.0 / (1.0 + e), e / (1.0 + e))
        } else {
            (e / (1.0 + e), 1.0 / (1.0 + e))
        };
        let w = PI * tau.cosh() * t * s;
        if w == 0.0 || t == 0.0 || s == 0.0 {
            return;
        }
        evals += 1;
        let v = f(t, s);
        for (a, x) in acc.iter_mut().zip(v) {
            let term = w * x;
            if term.is_finite() {
                *a += term;
                *mag += term.abs();
            }
        }
    };

    // level 0: h = 1
    // mag tracks Σ w|f|, so that cancelling integrands are judged against ∫|f|
    let mut sum = [0.0; N];
    let mut mag = 0.0;
    let mut j = -(TAU_MAX as i64);
    while j as f64 <= TAU_MAX {
        node_sum(j as f64, &mut sum, &mut mag);
        j += 1;
    }
    let mut h = 1.0;
    let mut prev = sum;
    let mut estimate = f64::INFINITY;
    let mut converged = false;
    for level in 1..=opts.max_levels {
        h *= 0.5;
        let mut fresh = [0.0; N];
        let steps = (TAU_MAX / h) as i64;
        let mut k = -steps + if steps % 2 == 0 { 1 } else { 0 };
        while k <= steps {
            node_sum(k as f64 * h, &mut fresh, &mut mag);
            k += 2;
        }
        for (s, x) in sum.iter_mut().zip(fresh) {
            *s += x;
        }
        let current: [f64; N] = std::array::from_fn(|i| sum[i] * h);
        let scale = current.iter().fold(mag * h, |m, v| m.max(v.abs()));
        estimate = current
            .iter()
            .zip(prev.iter())
            .fold(0.0f64, |m, (c, p)| m.max((c - p).abs()));
        prev = current;
        if level >= 3 && estimate <= opts.abs_tol.max(opts.rel_tol * scale) {
            converged = true;
            break;
        }
    }
    Quad {
        value: prev,
        estimate,
        evals,
        converged,
    }
}

fn finish(q: Quad<1>, opts: &QuadOptions) -> Result<EvalResult> {
    let value = q.value[0];
    if !value.is_finite() {
        return Err(Error::Quadrature {
            value,
            estimate: q.estimate,
        });
    }
    if !q.converged && q.estimate > opts.accept * value.abs().max(1.0) {
        return Err(Error::Quadrature {
            value,
            estimate: q.estimate,
        });
    }
    Ok(EvalResult::new(value, q.estimate, q.evals, Method::Oracle))
}

/// ∫₀¹ f dt, where `f(t, 1−t)` may have integrable algebraic or logarithmic
/// singularities at either end.
pub fn integrate_unit<F: FnMut(f64, f64) -> f64>(f: F) -> Result<EvalResult> {
    integrate_unit_with(f, &QuadOptions::default())
}

pub fn integrate_unit_with<F: FnMut(f64, f64) -> f64>(mut f: F, opts: &QuadOptions) -> Result<EvalResult> {
    let q = tanh_sinh(|t, s| [f(t, s)], opts);
    finish(q, opts)
}

/// A point of (0, ∞) seen through t = e^{−x}.
#[derive(Debug, Clone, Copy)]
pub struct DecayPoint {
    pub x: f64,
    /// e^{−x}
    pub t: f64,
    /// 1 − e^{−x}
    pub one_minus_t: f64,
}

impl DecayPoint {
    fn from_unit(t: f64, s: f64) -> Self {
        let x = if t < 0.5 { -t.ln() } else { -(-s).ln_1p() };
        Self { x, t, one_minus_t: s }
    }
}

/// ∫₀^∞ g(x) dx for exponentially decaying g, via t = e^{−x}.
pub fn integrate_decay<F: FnMut(DecayPoint) -> f64>(f: F) -> Result<EvalResult> {
    integrate_decay_with(f, &QuadOptions::default())
}

pub fn integrate_decay_with<F: FnMut(DecayPoint) -> f64>(mut f: F, opts: &QuadOptions) -> Result<EvalResult> {
    integrate_unit_with(
        |t, s| {
            let p = DecayPoint::from_unit(t, s);
            f(p) / t
        },
        opts,
    )
}

/// ∫_{−∞}^{∞} g(x) dx for g decaying exponentially in both directions,
/// computed as ∫₀^∞ [g(x) + g(−x)] dx.
pub fn integrate_two_sided<F: FnMut(f64) -> f64>(mut f: F) -> Result<EvalResult> {
    let opts = QuadOptions {
        accept: 1e-9,
        ..QuadOptions::default()
    };
    integrate_decay_with(|p| f(p.x) + f(-p.x), &opts)
}
