//! The integral forms behind the series, each with a series-side value and
//! an independent quadrature value.

use serde::Serialize;

use super::abel::{abel_oscillatory, AbelPoint};
use super::tanh_sinh::{integrate_decay, integrate_unit};
use crate::error::{Error, Result};
use crate::identities::{log_sin_integral, trig_cos, trig_lambda, two_sided_closed, two_sided_lhs};
use crate::record::VerificationRecord;
use crate::series::{eval_phi, eval_phi_da_direct, eval_phi_tilde, eval_psi_general, EvalResult, SeriesParams};
use crate::special::{gamma, PI};

/// Tolerance of the Abel-regularized forms.
pub const ABEL_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "form")]
pub enum IntegralSpec {
    /// ∫₀^∞ x^α e^{−bx} (1 − e^{−x})^a dx = Γ(α+1) φ(a, b, α)
    F1 { a: f64, b: f64, alpha: f64 },
    /// ∫₀¹ log^n(1−t) (1−t)^{b−1} t^a dt = (−1)^n n! φ(a, b, n)
    F2 { a: f64, b: f64, n: u32 },
    /// ∫₀^∞ x^n e^{−bx} (1 − e^{−x})^a log(1 − e^{−x}) dx = n! ∂φ/∂a
    F3 { a: f64, b: f64, n: u32 },
    /// ∫₀¹ log^n(1−t) log t (1−t)^{b−1} t^a dt = (−1)^n n! ∂φ/∂a
    F4 { a: f64, b: f64, n: u32 },
    /// ∫₀^∞ x^α e^{−bx} (1 + e^{−x})^a dx = Γ(α+1) φ̃(a, b, α)
    F5 { a: f64, b: f64, alpha: f64 },
    /// ∫₀^∞ x^α e^{−bx} (1 + βe^{−x})^a dx = Γ(α+1) Ψ(a, b, β, α)
    F6 { a: f64, b: f64, beta: f64, alpha: f64 },
    /// ∫₀^∞ x^α sin^a x cos wx dx (Abel)
    F7 { a: u32, w: f64, alpha: f64 },
    /// ∫₀^∞ x^α sin^a x sin wx dx (Abel)
    F8 { a: u32, w: f64, alpha: f64 },
    /// ∫₀^∞ x^α cos^a x cos vx dx (Abel)
    F9 { a: u32, v: f64, alpha: f64 },
    /// ∫₀^∞ x^α cos^a x sin vx dx (Abel)
    F10 { a: u32, v: f64, alpha: f64 },
    /// ∫₀^∞ x^α sin^a x log sin x {cos, sin} wx dx (Abel, continued branch)
    F11 { a: u32, w: f64, alpha: f64, sine: bool },
    /// Σ_k A_k^{(m+1)}(−1, b)(−β)^{k−1} ∫_{−∞}^{∞} x² e^{−x(b+k−1)} / ((1+e^{−x})(1+βe^{−x})^k) dx
    F12 { b: f64, beta: f64, m: u32 },
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn sign(n: u32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl IntegralSpec {
    pub fn tag(&self) -> &'static str {
        match self {
            IntegralSpec::F1 { .. } => "F1",
            IntegralSpec::F2 { .. } => "F2",
            IntegralSpec::F3 { .. } => "F3",
            IntegralSpec::F4 { .. } => "F4",
            IntegralSpec::F5 { .. } => "F5",
            IntegralSpec::F6 { .. } => "F6",
            IntegralSpec::F7 { .. } => "F7",
            IntegralSpec::F8 { .. } => "F8",
            IntegralSpec::F9 { .. } => "F9",
            IntegralSpec::F10 { .. } => "F10",
            IntegralSpec::F11 { .. } => "F11",
            IntegralSpec::F12 { .. } => "F12",
        }
    }

    /// Short parameter listing, e.g. `F1 a=-0.5 b=0.25 alpha=1`.
    pub fn label(&self) -> String {
        let args = match *self {
            IntegralSpec::F1 { a, b, alpha } | IntegralSpec::F5 { a, b, alpha } => {
                format!("a={a} b={b} alpha={alpha}")
            }
            IntegralSpec::F2 { a, b, n } | IntegralSpec::F3 { a, b, n } | IntegralSpec::F4 { a, b, n } => {
                format!("a={a} b={b} n={n}")
            }
            IntegralSpec::F6 { a, b, beta, alpha } => format!("a={a} b={b} beta={beta} alpha={alpha}"),
            IntegralSpec::F7 { a, w, alpha } | IntegralSpec::F8 { a, w, alpha } => {
                format!("a={a} w={w} alpha={alpha}")
            }
            IntegralSpec::F9 { a, v, alpha } | IntegralSpec::F10 { a, v, alpha } => {
                format!("a={a} v={v} alpha={alpha}")
            }
            IntegralSpec::F11 { a, w, alpha, sine } => {
                format!("a={a} w={w} alpha={alpha} part={}", if sine { "sin" } else { "cos" })
            }
            IntegralSpec::F12 { b, beta, m } => format!("b={b} beta={beta} m={m}"),
        };
        format!("{} {args}", self.tag())
    }

    /// Checks that the integral converges (in the Abel sense for F7–F11).
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::domain("integral_spec", reason));
        match *self {
            IntegralSpec::F1 { a, b, alpha } | IntegralSpec::F5 { a, b, alpha } => {
                if !(b > 0.0) || !(alpha >= 0.0) {
                    return fail(format!("need b > 0 and alpha ≥ 0, got b = {b}, alpha = {alpha}"));
                }
                if matches!(self, IntegralSpec::F1 { .. }) && !(a + alpha > -1.0) {
                    return fail(format!("need a + alpha > -1, got {}", a + alpha));
                }
            }
            IntegralSpec::F6 { a, b, beta, alpha } => {
                if !(b > 0.0) || !(alpha >= 0.0) || !(beta.abs() <= 1.0) {
                    return fail("need b > 0, alpha ≥ 0 and |beta| ≤ 1".into());
                }
                if beta == -1.0 && !(a + alpha > -1.0) {
                    return fail(format!("need a + alpha > -1 at beta = -1, got {}", a + alpha));
                }
            }
            IntegralSpec::F2 { a, b, .. } | IntegralSpec::F4 { a, b, .. } => {
                if !(a > -1.0) || !(b > 0.0) {
                    return fail(format!("need a > -1 and b > 0, got a = {a}, b = {b}"));
                }
            }
            IntegralSpec::F3 { a, b, n } => {
                if !(a + n as f64 > -1.0) || !(b > 0.0) {
                    return fail(format!("need a + n > -1 and b > 0, got a = {a}, b = {b}"));
                }
            }
            IntegralSpec::F7 { a, w, alpha }
            | IntegralSpec::F8 { a, w, alpha }
            | IntegralSpec::F9 { a, v: w, alpha }
            | IntegralSpec::F10 { a, v: w, alpha }
            | IntegralSpec::F11 { a, w, alpha, .. } => {
                if a == 0 || !(w > a as f64) || !(alpha >= 0.0) {
                    return fail(format!("need a ≥ 1, frequency > a and alpha ≥ 0, got a = {a}, {w}, {alpha}"));
                }
            }
            IntegralSpec::F12 { b, beta, m } => {
                if !(b > 0.0 && b < 1.0) || !(0.0..1.0).contains(&beta) || m > 1 {
                    return fail("need 0 < b < 1, 0 ≤ beta < 1 and m ∈ {0, 1}".into());
                }
            }
        }
        Ok(())
    }

    /// Absolute tolerance for confronting the two routes at this instance.
    pub fn tolerance(&self, series_value: f64) -> f64 {
        match self {
            IntegralSpec::F7 { .. }
            | IntegralSpec::F8 { .. }
            | IntegralSpec::F9 { .. }
            | IntegralSpec::F10 { .. }
            | IntegralSpec::F11 { .. } => ABEL_TOL,
            IntegralSpec::F12 { .. } => 1e-6 * series_value.abs(),
            _ => 1e-9 * series_value.abs().max(1.0),
        }
    }

    /// Value through the series and its closed forms.
    pub fn series_value(&self) -> Result<f64> {
        self.validate()?;
        Ok(match *self {
            IntegralSpec::F1 { a, b, alpha } => gamma(alpha + 1.0)? * eval_phi(a, b, alpha)?.value,
            IntegralSpec::F2 { a, b, n } => sign(n) * factorial(n) * eval_phi(a, b, n as f64)?.value,
            IntegralSpec::F3 { a, b, n } => factorial(n) * eval_phi_da_direct(a, b, n)?.value,
            IntegralSpec::F4 { a, b, n } => sign(n) * factorial(n) * eval_phi_da_direct(a, b, n)?.value,
            IntegralSpec::F5 { a, b, alpha } => gamma(alpha + 1.0)? * eval_phi_tilde(a, b, alpha)?.value,
            IntegralSpec::F6 { a, b, beta, alpha } => {
                gamma(alpha + 1.0)? * eval_psi_general(SeriesParams::new(a, b, beta, alpha))?.value
            }
            IntegralSpec::F7 { a, w, alpha } => trig_lambda(a, w, alpha)?.lambda_c,
            IntegralSpec::F8 { a, w, alpha } => trig_lambda(a, w, alpha)?.lambda_s,
            IntegralSpec::F9 { a, v, alpha } => trig_cos(a, v, alpha)?.lambda_c,
            IntegralSpec::F10 { a, v, alpha } => trig_cos(a, v, alpha)?.lambda_s,
            IntegralSpec::F11 { a, w, alpha, sine } => {
                let (c, s) = log_sin_integral(a, w, alpha)?;
                if sine {
                    s
                } else {
                    c
                }
            }
            IntegralSpec::F12 { b, beta, m } => two_sided_closed(b, beta, m)?,
        })
    }

    /// Value by numerical integration of the left-hand side.
    pub fn oracle_value(&self) -> Result<EvalResult> {
        self.validate()?;
        match *self {
            IntegralSpec::F1 { a, b, alpha } => {
                integrate_decay(|p| p.x.powf(alpha) * (-b * p.x).exp() * p.one_minus_t.powf(a))
            }
            IntegralSpec::F2 { a, b, n } => {
                integrate_unit(|t, s| s.ln().powi(n as i32) * s.powf(b - 1.0) * t.powf(a))
            }
            IntegralSpec::F3 { a, b, n } => integrate_decay(|p| {
                let s = p.one_minus_t;
                p.x.powi(n as i32) * (-b * p.x).exp() * s.powf(a) * s.ln()
            }),
            IntegralSpec::F4 { a, b, n } => {
                integrate_unit(|t, s| s.ln().powi(n as i32) * t.ln() * s.powf(b - 1.0) * t.powf(a))
            }
            IntegralSpec::F5 { a, b, alpha } => {
                integrate_decay(|p| p.x.powf(alpha) * (-b * p.x).exp() * (1.0 + p.t).powf(a))
            }
            IntegralSpec::F6 { a, b, beta, alpha } => integrate_decay(|p| {
                let base = if beta == -1.0 { p.one_minus_t } else { 1.0 + beta * p.t };
                p.x.powf(alpha) * (-b * p.x).exp() * base.powf(a)
            }),
            IntegralSpec::F7 { a, w, alpha } => {
                abel_oscillatory(|p| p.x.powf(alpha) * p.sin_x.powi(a as i32) * (w * p.x).cos(), alpha)
            }
            IntegralSpec::F8 { a, w, alpha } => {
                abel_oscillatory(|p| p.x.powf(alpha) * p.sin_x.powi(a as i32) * (w * p.x).sin(), alpha)
            }
            IntegralSpec::F9 { a, v, alpha } => {
                abel_oscillatory(|p| p.x.powf(alpha) * p.cos_x.powi(a as i32) * (v * p.x).cos(), alpha)
            }
            IntegralSpec::F10 { a, v, alpha } => {
                abel_oscillatory(|p| p.x.powf(alpha) * p.cos_x.powi(a as i32) * (v * p.x).sin(), alpha)
            }
            IntegralSpec::F11 { a, w, alpha, sine } => abel_oscillatory(
                |p| {
                    let weight = p.x.powf(alpha) * p.sin_x.powi(a as i32);
                    log_sin_part(p, w, sine) * weight
                },
                alpha + 1.0,
            ),
            IntegralSpec::F12 { b, beta, m } => two_sided_lhs(b, beta, m),
        }
    }

    /// Confronts the two routes: lhs is the series value, rhs the oracle.
    pub fn verify(&self) -> Result<VerificationRecord> {
        let series = self.series_value()?;
        let oracle = self.oracle_value()?;
        let tol = self.tolerance(series);
        Ok(VerificationRecord::absolute(self.label(), series, oracle.value, tol)
            .with_method("oracle")
            .with_terms(oracle.terms_used)
            .with_note(format!("oracle error estimate {:.1e}", oracle.error_estimate())))
    }
}

/// Real or imaginary part of L(x) e^{−iwx} with L = ln|sin x| + iπ⌊x/π⌋,
/// up to the sign convention λ_c − iλ_s.
fn log_sin_part(p: &AbelPoint, w: f64, sine: bool) -> f64 {
    let l = p.sin_x.abs().ln();
    let stair = PI * p.panel as f64;
    let (s, c) = (w * p.x).sin_cos();
    if sine {
        l * s - stair * c
    } else {
        l * c + stair * s
    }
}

/// Free-function form of [`IntegralSpec::oracle_value`].
pub fn oracle_value(spec: &IntegralSpec) -> Result<EvalResult> {
    spec.oracle_value()
}
