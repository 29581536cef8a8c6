//! Abel-regularized oscillatory integrals on (0, ∞).
//!
//! F(ε) = ∫₀^X f(x) e^{−εx} dx is computed panel by panel over [kπ, (k+1)π]
//! with X = horizon/ε, for ε on a geometric schedule, and the values are
//! extrapolated to ε = 0 by Neville's polynomial scheme. Panels start and
//! end at multiples of π so that log|sin x| singularities sit at panel ends.

use std::f64::consts::PI;

use super::tanh_sinh::{tanh_sinh, QuadOptions};
use crate::error::{Error, Result};
use crate::series::{EvalResult, Method};
use crate::sum::{neville_at_zero, NeumaierSum};

/// A point of a panel, with sin x and cos x computed from the panel offset.
#[derive(Debug, Clone, Copy)]
pub struct AbelPoint {
    pub x: f64,
    pub sin_x: f64,
    pub cos_x: f64,
    /// Index k of the panel [kπ, (k+1)π] holding x.
    pub panel: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct AbelSchedule {
    /// Largest damping ε₀; the schedule is ε₀·2^{−j}.
    pub eps0: f64,
    pub points: usize,
    /// Upper limit is horizon/ε.
    pub horizon: f64,
    /// Extrapolation spreads above this are reported as instability.
    pub target: f64,
}

impl Default for AbelSchedule {
    fn default() -> Self {
        Self {
            eps0: 0.2,
            points: 7,
            horizon: 40.0,
            target: 1e-3,
        }
    }
}

/// Abel value of ∫₀^∞ f(x) dx, where |f(x)| ≲ x^growth.
pub fn abel_oscillatory<F: Fn(&AbelPoint) -> f64>(f: F, growth: f64) -> Result<EvalResult> {
    let [r] = abel_vector(|p| [f(p)], growth, &AbelSchedule::default())?;
    Ok(r)
}

/// Abel values of two integrands sharing the same nodes.
pub fn abel_oscillatory_pair<F: Fn(&AbelPoint) -> [f64; 2]>(
    f: F,
    growth: f64,
) -> Result<(EvalResult, EvalResult)> {
    let [a, b] = abel_vector(f, growth, &AbelSchedule::default())?;
    Ok((a, b))
}

pub fn abel_vector<const N: usize, F>(f: F, growth: f64, sched: &AbelSchedule) -> Result<[EvalResult; N]>
where
    F: Fn(&AbelPoint) -> [f64; N],
{
    let panel_opts = QuadOptions {
        abs_tol: 1e-16,
        rel_tol: 1e-12,
        max_levels: 10,
        accept: f64::INFINITY,
    };
    let mut eps = Vec::with_capacity(sched.points);
    let mut values: Vec<[f64; N]> = Vec::with_capacity(sched.points);
    let mut quad_error = 0.0f64;
    let mut evals = 0u64;
    for j in 0..sched.points {
        let e = sched.eps0 * 0.5f64.powi(j as i32);
        let x_max = sched.horizon / e;
        let panels = (x_max / PI).ceil() as u64;
        let mut acc = [NeumaierSum::new(); N];
        for k in 0..panels {
            let x0 = k as f64 * PI;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let q = tanh_sinh(
                |t, s| {
                    let x = if t <= 0.5 { x0 + PI * t } else { x0 + PI - PI * s };
                    let sin_x = sign * (PI * t.min(s)).sin();
                    let cos_x = sign * (PI * t).cos();
                    let damp = PI * (-e * x).exp();
                    let v = f(&AbelPoint { x, sin_x, cos_x, panel: k });
                    v.map(|y| y * damp)
                },
                &panel_opts,
            );
            evals += q.evals;
            quad_error += q.estimate;
            for (a, v) in acc.iter_mut().zip(q.value) {
                a.add(v);
            }
        }
        // ∫_X^∞ x^g e^{−εx} dx ≤ X^g e^{−εX} / (ε − g/X) for εX > g
        let big_x = panels as f64 * PI;
        let denom = e - growth.max(0.0) / big_x;
        let tail = if denom > 0.0 {
            big_x.powf(growth) * (-e * big_x).exp() / denom
        } else {
            f64::INFINITY
        };
        quad_error += tail;
        eps.push(e);
        values.push(acc.map(|a| a.value()));
    }

    let mut out = [EvalResult::new(0.0, 0.0, evals, Method::Oracle); N];
    for (i, slot) in out.iter_mut().enumerate() {
        let ys: Vec<f64> = values.iter().map(|v| v[i]).collect();
        let (full, reduced) = neville_at_zero(&eps, &ys);
        let spread = (full - reduced).abs();
        if !full.is_finite() || spread > sched.target.max(sched.target * full.abs()) {
            return Err(Error::Extrapolation { value: full, spread });
        }
        *slot = EvalResult::new(full, spread + quad_error, evals, Method::Oracle);
    }
    Ok(out)
}
