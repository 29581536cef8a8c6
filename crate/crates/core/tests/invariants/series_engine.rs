use proptest::prelude::*;
use ramseries::error::Error;
use ramseries::series::{
    convergence_report, eval_phi, eval_phi_da_direct, eval_psi_with, Regime, SeriesParams, SumOptions,
};

use super::{ensure, forall, Check, Outcome};

pub const CHECKS: &[Check] = &[
    ("series_engine: error bounds hold", error_bounds_hold),
    ("series_engine: finite sums exact", finite_sums_are_exact),
    ("series_engine: derivative vs finite difference", derivative_matches_finite_difference),
    ("series_engine: divergent instances rejected", divergent_instances_are_rejected),
];

/// Value and claimed bound after at most `budget` terms, converged or not.
fn truncated(params: SeriesParams, budget: u64) -> (f64, f64) {
    let opts = SumOptions {
        max_terms: budget,
        accelerate: false,
        ..SumOptions::default()
    };
    match eval_psi_with(params, opts) {
        Ok(r) => (r.value, r.abs_error_bound),
        Err(Error::NonConvergence { value, bound, .. }) => (value, bound),
        Err(e) => panic!("{params:?}: {e}"),
    }
}

pub fn error_bounds_hold() -> Outcome {
    let beta = prop_oneof![Just(-1.0), Just(1.0), -0.99f64..0.99];
    let strategy = (-1.9f64..3.5, 0.1f64..5.0, beta, 0.0f64..3.0, 16u64..4096)
        .prop_filter("convergent", |&(a, b, beta, alpha, _)| {
            !matches!(convergence_report(SeriesParams::new(a, b, beta, alpha)), Regime::Divergent)
        });
    forall(500, strategy, |(a, b, beta, alpha, budget)| {
        let params = SeriesParams::new(a, b, beta, alpha);
        let (v, bound) = truncated(params, budget);
        let (reference, _) = truncated(params, 4 * budget);
        prop_assert!((v - reference).abs() <= bound, "{params:?}: |{v} − {reference}| > {bound:e}");
        Ok(())
    })
}

fn binom(a: f64, i: u32) -> f64 {
    (0..i).fold(1.0, |c, j| c * (a - j as f64) / (j as f64 + 1.0))
}

pub fn finite_sums_are_exact() -> Outcome {
    for a in 0..=6u32 {
        for b in [0.5, 1.0, 2.25] {
            for alpha in [0.0, 1.0, 2.5] {
                let term = |i: u32| binom(a as f64, i) / (b + i as f64).powf(alpha + 1.0);
                let want: f64 = (0..=a).map(|i| (-1f64).powi(i as i32) * term(i)).sum();
                let scale: f64 = (0..=a).map(|i| term(i).abs()).sum();
                let got = eval_phi(a as f64, b, alpha).unwrap().value;
                ensure((got - want).abs() <= 1e-15 * scale, || {
                    format!("a={a} b={b} alpha={alpha}: {got} vs {want}")
                })?;
            }
        }
    }
    Ok(())
}

pub fn derivative_matches_finite_difference() -> Outcome {
    forall(40, (-0.45f64..2.5, 0.25f64..3.0, 0u32..4), |(a, b, n)| {
        let h = 1e-5;
        let up = eval_phi(a + h, b, n as f64).unwrap().value;
        let down = eval_phi(a - h, b, n as f64).unwrap().value;
        let fd = (up - down) / (2.0 * h);
        let direct = eval_phi_da_direct(a, b, n).unwrap().value;
        prop_assert!((fd - direct).abs() < 1e-6, "a={a} b={b} n={n}: fd {fd} vs {direct}");
        Ok(())
    })
}

pub fn divergent_instances_are_rejected() -> Outcome {
    ensure(matches!(eval_phi(-1.5, 0.25, 0.0), Err(Error::Divergent(_))), || "φ(−1.5, ·, 0) accepted".into())?;
    let p = SeriesParams::new(0.5, 1.0, 1.5, 0.0);
    ensure(convergence_report(p) == Regime::Divergent, || format!("{p:?} not divergent"))
}
