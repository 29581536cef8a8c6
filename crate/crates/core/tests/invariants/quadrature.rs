use std::f64::consts::PI;

use proptest::prelude::*;
use ramseries::quadrature::{abel_oscillatory, integrate_decay, IntegralSpec};
use ramseries::special::gamma;

use super::{ensure, forall, Check, Outcome};

pub const CHECKS: &[Check] = &[
    ("quadrature: exact on x^k e^{-bx}", exact_on_powers_times_exponentials),
    ("quadrature: substitution consistency", substitution_consistency),
    ("quadrature: Abel closed forms", abel_matches_elementary_closed_forms),
];

pub fn exact_on_powers_times_exponentials() -> Outcome {
    for k in 0..=6 {
        for b in [0.25, 1.0, 3.0] {
            let r = integrate_decay(|p| p.x.powi(k) * (-b * p.x).exp()).unwrap();
            let want = gamma(k as f64 + 1.0).unwrap() / b.powi(k + 1);
            ensure(((r.value - want) / want).abs() < 1e-12, || format!("k={k} b={b}: {} vs {want}", r.value))?;
        }
    }
    Ok(())
}

pub fn substitution_consistency() -> Outcome {
    forall(48, (-0.9f64..2.5, 0.2f64..3.0, 0u32..4), |(a, b, n)| {
        let f1 = IntegralSpec::F1 { a, b, alpha: n as f64 }.oracle_value().unwrap().value;
        // t = 1 − e^{−x} turns x^n into (−log(1−t))^n
        let f2 = (-1f64).powi(n as i32) * IntegralSpec::F2 { a, b, n }.oracle_value().unwrap().value;
        prop_assert!(((f1 - f2) / f2).abs() < 1e-9, "a={a} b={b} n={n}: {f1} vs {f2}");
        Ok(())
    })
}

/// Abel value of ∫₀^∞ x^k e^{iωx} dx for ω ≠ 0: k!/(−iω)^{k+1}.
fn abel_exp(omega: f64, k: u32) -> (f64, f64) {
    let fact: f64 = (1..=k).map(f64::from).product();
    let m = fact / omega.abs().powi(k as i32 + 1);
    let arg = (k as f64 + 1.0) * PI / 2.0 * omega.signum();
    (m * arg.cos(), m * arg.sin())
}

/// Abel integral of x^k Π cos(ω_j x + φ_j), expanded into exponentials.
fn closed_form(freqs: &[(f64, f64)], k: u32) -> f64 {
    let n = freqs.len();
    let mut total = 0.0;
    for mask in 0..(1u32 << n) {
        let (mut omega, mut phase) = (0.0, 0.0);
        for (j, &(w, ph)) in freqs.iter().enumerate() {
            let s = if mask >> j & 1 == 1 { -1.0 } else { 1.0 };
            omega += s * w;
            phase += s * ph;
        }
        let (re, im) = abel_exp(omega, k);
        total += re * phase.cos() - im * phase.sin();
    }
    total / 2f64.powi(n as i32)
}

pub fn abel_matches_elementary_closed_forms() -> Outcome {
    // cos(ωx + φ); sin is the phase −π/2
    let s = -PI / 2.0;
    let cases: &[(&[(f64, f64)], u32)] = &[
        (&[(1.0, s)], 0),
        (&[(1.0, 0.0)], 1),
        (&[(2.0, s)], 1),
        (&[(1.0, s), (3.0, 0.0)], 0),
        (&[(1.0, s), (2.5, s)], 1),
        (&[(1.0, 0.0), (1.5, 0.0), (4.0, s)], 0),
        (&[(1.0, s), (2.0, s), (4.5, 0.0)], 1),
    ];
    for &(freqs, k) in cases {
        let want = closed_form(freqs, k);
        let got = abel_oscillatory(
            |p| {
                let prod: f64 = freqs.iter().map(|&(w, ph)| (w * p.x + ph).cos()).product();
                p.x.powi(k as i32) * prod
            },
            k as f64,
        )
        .map_err(|e| e.to_string())?;
        ensure((got.value - want).abs() < 1e-6, || format!("{freqs:?} x^{k}: {} vs {want}", got.value))?;
    }
    Ok(())
}
