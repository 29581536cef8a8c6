//! Direct summation of Ψ(a, b, β, α) = Σ C(a,i) β^i / (b+i)^{α+1} and of
//! its term-wise a-derivative, with rigorous tail bounds.
//!
//! Terms follow the coefficient recurrence c_{i+1} = c_i·β(a−i)/(i+1). The
//! tail bound depends on the regime:
//!
//! * |β| < 1: every later term ratio is at most ρ_N = |β|·max(1, (N−a)/(N+1)),
//!   so the tail is at most |T_N| / (1 − ρ_N).
//! * β = −1 (same-sign tail): |T_i| ≤ |T_N|·((N+κ)/(i+κ))^{σ_N} with κ = b+1,
//!   and the tail is at most |T_N|·(1 + (N+κ)/(σ_N − 1)).
//! * β = +1 (alternating tail): terms decrease in magnitude, so |T_N| bounds it.
//!
//! When the rigorous bound stalls on a slow power-law tail, partial sums at
//! N = 2^k are extrapolated with the known exponent lattice of the tail.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum::{richardson_limit, Basis, NeumaierSum};

/// Hard cap on the number of summed terms.
pub const MAX_TERMS: u64 = 10_000_000;

/// Default stopping target: tail bound ≤ max(ABS_TARGET, REL_TARGET·|S|).
pub const ABS_TARGET: f64 = 1e-12;
pub const REL_TARGET: f64 = 1e-13;
const ACCEL_FROM: u64 = 1 << 17;
const ACCEL_REL: f64 = 1e-9;
const FIRST_CHECKPOINT: u64 = 1 << 4;

/// The tuple (a, b, β, α) shared by every series in the library.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesParams {
    pub a: f64,
    pub b: f64,
    pub beta: f64,
    pub alpha: f64,
}

impl SeriesParams {
    pub fn new(a: f64, b: f64, beta: f64, alpha: f64) -> Self {
        Self { a, b, beta, alpha }
    }

    /// φ(a, b, α): β = −1.
    pub fn phi(a: f64, b: f64, alpha: f64) -> Self {
        Self::new(a, b, -1.0, alpha)
    }

    /// φ̃(a, b, α): β = +1.
    pub fn phi_tilde(a: f64, b: f64, alpha: f64) -> Self {
        Self::new(a, b, 1.0, alpha)
    }

    fn validate(&self, func: &'static str) -> Result<()> {
        let Self { a, b, beta, alpha } = *self;
        if !(a.is_finite() && beta.is_finite()) {
            return Err(Error::domain(func, "a and beta must be finite"));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::domain(func, format!("b = {b} must be positive")));
        }
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(Error::domain(func, format!("alpha = {alpha} must be non-negative")));
        }
        Ok(())
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    Accelerated,
    ClosedForm,
    Recursion,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Accelerated => "accelerated",
            Method::ClosedForm => "closed-form",
            Method::Recursion => "recursion",
            Method::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value with an absolute error bound and diagnostics.
///
/// `est_error` is set when the value is extrapolated: it is the spread of the
/// extrapolation and is usually far smaller than `abs_error_bound`, which
/// stays rigorous.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_bound: f64,
    pub terms_used: u64,
    pub method: Method,
    pub est_error: Option<f64>,
}

impl EvalResult {
    pub fn new(value: f64, abs_error_bound: f64, terms_used: u64, method: Method) -> Self {
        Self {
            value,
            abs_error_bound,
            terms_used: terms_used.max(1),
            method,
            est_error: None,
        }
    }

    /// Best available error estimate: the extrapolation spread when present.
    pub fn error_estimate(&self) -> f64 {
        self.est_error.unwrap_or(self.abs_error_bound)
    }
}

/// Convergence regime of a series instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "regime")]
pub enum Regime {
    /// `a` is a non-negative integer: `terms` = a + 1 non-zero terms.
    Finite { terms: u64 },
    /// |β| < 1.
    Geometric,
    /// |β| = 1 and a + α > −1; terms decay like i^{−exponent}.
    PowerLaw { exponent: f64 },
    Divergent,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::Finite { terms } => write!(f, "finite ({terms} terms)"),
            Regime::Geometric => f.write_str("geometric"),
            Regime::PowerLaw { exponent } => write!(f, "power-law (exponent {exponent})"),
            Regime::Divergent => f.write_str("divergent"),
        }
    }
}

fn nonneg_integer(a: f64) -> Option<u64> {
    (a >= 0.0 && a.fract() == 0.0 && a < 1e15).then_some(a as u64)
}

/// Classifies `params` without summing anything.
pub fn convergence_report(params: SeriesParams) -> Regime {
    let SeriesParams { a, beta, alpha, .. } = params;
    if let Some(k) = nonneg_integer(a) {
        return Regime::Finite { terms: k + 1 };
    }
    if beta.abs() < 1.0 {
        Regime::Geometric
    } else if beta.abs() == 1.0 && a + alpha > -1.0 {
        Regime::PowerLaw {
            exponent: a + alpha + 2.0,
        }
    } else {
        Regime::Divergent
    }
}

/// Limits for the summation loop.
///
/// Summation also stops once the tail bound falls below the rounding error
/// already accumulated, so zero targets mean "to working precision".
#[derive(Debug, Clone, Copy)]
pub struct SumOptions {
    pub max_terms: u64,
    pub accelerate: bool,
    pub abs_target: f64,
    pub rel_target: f64,
}

impl Default for SumOptions {
    fn default() -> Self {
        Self {
            max_terms: MAX_TERMS,
            accelerate: true,
            abs_target: ABS_TARGET,
            rel_target: REL_TARGET,
        }
    }
}

impl SumOptions {
    /// Sum until the tail is below the accumulated rounding error.
    pub fn full_precision() -> Self {
        Self {
            abs_target: 0.0,
            rel_target: 0.0,
            ..Self::default()
        }
    }
}

/// Ψ(a, b, β, α) by direct summation.
pub fn eval_psi_general(params: SeriesParams) -> Result<EvalResult> {
    eval_psi_with(params, SumOptions::default())
}

/// Ψ with explicit loop limits.
pub fn eval_psi_with(params: SeriesParams, opts: SumOptions) -> Result<EvalResult> {
    params.validate("eval_psi_general")?;
    let SeriesParams { a, b, beta, alpha } = params;
    let s = alpha + 1.0;
    match convergence_report(params) {
        Regime::Finite { terms } => Ok(finite_sum(a, b, beta, s, terms)),
        Regime::Divergent => Err(Error::Divergent(divergence_reason(params))),
        regime => {
            let mut src = PsiTerms::new(a, b, beta, s);
            let basis = match regime {
                Regime::PowerLaw { exponent } if opts.accelerate => {
                    Some(power_basis(exponent, beta > 0.0, false))
                }
                _ => None,
            };
            sum_terms(&mut src, basis.as_deref(), opts)
        }
    }
}

/// φ(a, b, α) = Ψ(a, b, −1, α).
pub fn eval_phi(a: f64, b: f64, alpha: f64) -> Result<EvalResult> {
    eval_psi_general(SeriesParams::phi(a, b, alpha))
}

/// φ̃(a, b, α) = Ψ(a, b, +1, α).
pub fn eval_phi_tilde(a: f64, b: f64, alpha: f64) -> Result<EvalResult> {
    eval_psi_general(SeriesParams::phi_tilde(a, b, alpha))
}

/// ∂φ/∂a (a, b, n) = Σ_{i≥1} (−1)^i ∂C(a,i)/∂a / (b+i)^{n+1}.
///
/// At a = 0 this is −Σ_{i≥1} 1/(i (b+i)^{n+1}). The series does not
/// terminate for integer a.
pub fn eval_phi_da_direct(a: f64, b: f64, n: u32) -> Result<EvalResult> {
    eval_phi_da(a, b, n as f64)
}

/// ∂φ/∂a (a, b, α) for real α ≥ 0.
pub fn eval_phi_da(a: f64, b: f64, alpha: f64) -> Result<EvalResult> {
    eval_phi_da_with(a, b, alpha, SumOptions::default())
}

pub fn eval_phi_da_with(a: f64, b: f64, alpha: f64, opts: SumOptions) -> Result<EvalResult> {
    let params = SeriesParams::phi(a, b, alpha);
    params.validate("eval_phi_da_direct")?;
    if !(a + alpha > -1.0) {
        return Err(Error::Divergent(divergence_reason(params)));
    }
    let mut src = DerivativeTerms::new(a, b, alpha + 1.0);
    let basis = power_basis(a + alpha + 2.0, false, true);
    let basis = opts.accelerate.then_some(basis);
    sum_terms(&mut src, basis.as_deref(), opts)
}

fn divergence_reason(p: SeriesParams) -> String {
    if p.beta.abs() > 1.0 {
        format!("|beta| = {} exceeds 1 with non-terminating a = {}", p.beta.abs(), p.a)
    } else {
        format!("a + alpha = {} must exceed -1 when |beta| = 1", p.a + p.alpha)
    }
}

fn finite_sum(a: f64, b: f64, beta: f64, s: f64, terms: u64) -> EvalResult {
    let mut acc = NeumaierSum::new();
    let mut abs = 0.0;
    let mut c = 1.0;
    for i in 0..terms {
        let t = c * (b + i as f64).powf(-s);
        acc.add(t);
        abs += t.abs();
        c *= beta * (a - i as f64) / (i as f64 + 1.0);
    }
    EvalResult::new(acc.value(), rounding(abs), terms, Method::Direct)
}

fn rounding(abs_sum: f64) -> f64 {
    4.0 * f64::EPSILON * abs_sum
}

/// Exponent lattice for the tail of a power-law series.
fn power_basis(sigma: f64, alternating: bool, with_logs: bool) -> Vec<Basis> {
    let lead = if alternating { -sigma } else { 1.0 - sigma };
    if with_logs {
        (0..4)
            .flat_map(|k| {
                let e = lead - k as f64;
                [Basis { exponent: e, log_power: 1 }, Basis { exponent: e, log_power: 0 }]
            })
            .collect()
    } else {
        (0..6)
            .map(|k| Basis { exponent: lead - k as f64, log_power: 0 })
            .collect()
    }
}

/// A stream of series terms with a tail bound.
trait TermSource {
    /// Returns T_n and advances to n + 1.
    fn next_term(&mut self) -> f64;
    /// Bound on |Σ_{i≥n} T_i| given T_n (the term just returned), or infinity
    /// when no bound is available yet.
    fn tail_bound(&self, n: u64, t_n: f64) -> f64;
}

struct PsiTerms {
    a: f64,
    b: f64,
    beta: f64,
    s: f64,
    c: f64,
    i: u64,
}

impl PsiTerms {
    fn new(a: f64, b: f64, beta: f64, s: f64) -> Self {
        Self { a, b, beta, s, c: 1.0, i: 0 }
    }
}

impl TermSource for PsiTerms {
    fn next_term(&mut self) -> f64 {
        let i = self.i as f64;
        let t = self.c * (self.b + i).powf(-self.s);
        self.c *= self.beta * (self.a - i) / (i + 1.0);
        self.i += 1;
        t
    }

    fn tail_bound(&self, n: u64, t_n: f64) -> f64 {
        let (a, b) = (self.a, self.b);
        let nf = n as f64;
        if nf <= a {
            return f64::INFINITY;
        }
        let abs_beta = self.beta.abs();
        if abs_beta < 1.0 {
            let rho = abs_beta * ((nf - a) / (nf + 1.0)).max(1.0);
            return if rho < 1.0 { t_n.abs() / (1.0 - rho) } else { f64::INFINITY };
        }
        let sigma_n = unit_sigma_n(a, b, self.s, nf);
        unit_tail(self.beta, b, nf, sigma_n, t_n)
    }
}

/// σ_N = a + s + 1 + min(0, a+1)·b/(N+1): decay exponent valid for all i ≥ N.
fn unit_sigma_n(a: f64, b: f64, s: f64, nf: f64) -> f64 {
    a + s + 1.0 + (a + 1.0).min(0.0) * b / (nf + 1.0)
}

fn unit_tail(beta: f64, b: f64, nf: f64, sigma_n: f64, t_n: f64) -> f64 {
    let kappa = b + 1.0;
    if beta > 0.0 {
        if sigma_n >= 0.0 {
            t_n.abs()
        } else {
            f64::INFINITY
        }
    } else if sigma_n > 1.0 {
        t_n.abs() * (1.0 + (nf + kappa) / (sigma_n - 1.0))
    } else {
        f64::INFINITY
    }
}

/// Terms of Σ ∂/∂a [C(a,i)(−1)^i] (b+i)^{−s}.
struct DerivativeTerms {
    a: f64,
    b: f64,
    s: f64,
    c: f64,
    d: f64,
    /// H_i = Σ_{j<i} 1/(a−j), tracked for the tail bound.
    h: f64,
    integer_a: bool,
    i: u64,
}

impl DerivativeTerms {
    fn new(a: f64, b: f64, s: f64) -> Self {
        Self {
            a,
            b,
            s,
            c: 1.0,
            d: 0.0,
            h: 0.0,
            integer_a: nonneg_integer(a).is_some(),
            i: 0,
        }
    }
}

impl TermSource for DerivativeTerms {
    fn next_term(&mut self) -> f64 {
        let i = self.i as f64;
        let t = self.d * (self.b + i).powf(-self.s);
        let k = -(self.a - i) / (i + 1.0);
        self.d = self.d * k - self.c / (i + 1.0);
        self.c *= k;
        if !self.integer_a {
            self.h += 1.0 / (self.a - i);
        }
        self.i += 1;
        t
    }

    fn tail_bound(&self, n: u64, t_n: f64) -> f64 {
        // `h` already includes the j = n term here; H_n excludes it.
        let (a, b) = (self.a, self.b);
        let nf = n as f64;
        if nf <= a {
            return f64::INFINITY;
        }
        let mut sigma_n = unit_sigma_n(a, b, self.s, nf);
        if !self.integer_a {
            let h_n = self.h - 1.0 / (a - nf);
            if !(h_n < 0.0) {
                return f64::INFINITY;
            }
            let kappa = b + 1.0;
            let delta = ((nf + kappa) / (nf - a)).max(1.0) / h_n.abs();
            sigma_n -= delta;
        }
        unit_tail(-1.0, b, nf, sigma_n, t_n)
    }
}

fn sum_terms<S: TermSource>(src: &mut S, basis: Option<&[Basis]>, opts: SumOptions) -> Result<EvalResult> {
    let mut acc = NeumaierSum::new();
    let mut abs_sum = 0.0;
    let mut ns: Vec<f64> = Vec::new();
    let mut sums: Vec<f64> = Vec::new();
    let mut last_bound = f64::INFINITY;
    let mut extrapolated: Option<(f64, f64)> = None;
    let cap = opts.max_terms.max(1);

    for n in 0..cap {
        let t = src.next_term();
        let tail = src.tail_bound(n, t);
        if tail.is_finite() {
            let bound = tail + rounding(abs_sum);
            let s = acc.value();
            let target = opts.abs_target.max(opts.rel_target * s.abs());
            if n > 0 && (bound <= target || tail <= rounding(abs_sum)) {
                return Ok(EvalResult::new(s, bound, n, Method::Direct));
            }
        }
        acc.add(t);
        abs_sum += t.abs();
        // the tail from n also bounds the tail from n + 1
        last_bound = tail;

        let count = n + 1;
        let Some(basis) = basis else { continue };
        if count >= FIRST_CHECKPOINT && count.is_power_of_two() {
            ns.push(count as f64);
            sums.push(acc.value());
            if count >= ACCEL_FROM {
                if let Some((lim, spread)) = richardson_limit(&ns, &sums, basis) {
                    extrapolated = Some((lim, spread));
                    if spread <= ACCEL_REL * lim.abs().max(1.0) {
                        return Ok(accelerated(lim, spread, acc.value(), last_bound, abs_sum, count));
                    }
                }
            }
        }
    }

    let s = acc.value();
    let bound = last_bound + rounding(abs_sum);
    match extrapolated {
        Some((lim, spread)) => Err(Error::NonConvergence {
            value: lim,
            bound: bound + (lim - s).abs() + spread,
            terms: cap,
        }),
        None => Err(Error::NonConvergence { value: s, bound, terms: cap }),
    }
}

fn accelerated(lim: f64, spread: f64, partial: f64, tail: f64, abs_sum: f64, terms: u64) -> EvalResult {
    let bound = tail + (lim - partial).abs() + rounding(abs_sum);
    EvalResult {
        value: lim,
        abs_error_bound: bound,
        terms_used: terms,
        method: Method::Accelerated,
        est_error: Some(spread),
    }
}
