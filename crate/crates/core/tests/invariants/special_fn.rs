use proptest::prelude::*;
use ramseries::series::eval_phi;
use ramseries::special::{beta_f, digamma, gamma, hurwitz_zeta, lerch_phi};

use super::{ensure, forall, Check, Outcome};

pub const CHECKS: &[Check] = &[
    ("special_fn: digamma recurrence", digamma_recurrence),
    ("special_fn: gamma recurrence", gamma_recurrence),
    ("special_fn: zeta shift", zeta_shift),
    ("special_fn: lerch at zero weight", lerch_at_zero_weight),
    ("special_fn: beta with a = 0", beta_trivial_exponent),
    ("special_fn: generating function", generating_function_oracle),
];

pub fn digamma_recurrence() -> Outcome {
    forall(1000, 1e-3f64..50.0, |x| {
        let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        prop_assert!((lhs - 1.0 / x).abs() < 1e-12, "x = {x}: {lhs} vs {}", 1.0 / x);
        Ok(())
    })
}

pub fn gamma_recurrence() -> Outcome {
    forall(1000, 1e-3f64..50.0, |x| {
        let g1 = gamma(x + 1.0).unwrap();
        let rel = (g1 - x * gamma(x).unwrap()).abs() / g1;
        prop_assert!(rel < 1e-12, "x = {x}: rel {rel:e}");
        Ok(())
    })
}

pub fn zeta_shift() -> Outcome {
    forall(500, (1.1f64..10.0, 0.1f64..5.0), |(s, q)| {
        // ζ(s, q) reaches ~1e10 here, so 1e-11 is applied relative to max(1, ζ)
        let z = hurwitz_zeta(s, q).unwrap();
        let d = z - q.powf(-s) - hurwitz_zeta(s, q + 1.0).unwrap();
        prop_assert!(d.abs() < 1e-11 * z.max(1.0), "s = {s}, q = {q}: {d:e}");
        Ok(())
    })
}

pub fn lerch_at_zero_weight() -> Outcome {
    forall(256, (0.5f64..8.0, 0.1f64..10.0), |(s, b)| {
        prop_assert_eq!(lerch_phi(0.0, s, b).unwrap(), b.powf(-s));
        let beta = 1e-9;
        let v = lerch_phi(beta, s, b).unwrap();
        let lead = b.powf(-s) + beta * (b + 1.0).powf(-s);
        prop_assert!((v - lead).abs() <= 1e-14 * v.max(1.0));
        Ok(())
    })
}

pub fn beta_trivial_exponent() -> Outcome {
    forall(256, (-0.2f64..3.0, 0.25f64..4.0), |(p, b)| {
        let v = beta_f(p, 0.0, b).unwrap();
        prop_assert!((v - 1.0 / (b + p)).abs() <= 1e-13 * v);
        Ok(())
    })
}

fn nth_difference(f: &dyn Fn(f64) -> f64, n: u32, h: f64) -> f64 {
    let mut acc = 0.0;
    let mut c = 1.0;
    for k in 0..=n {
        acc += c * f((n as f64 / 2.0 - k as f64) * h);
        c *= -((n - k) as f64) / (k as f64 + 1.0);
    }
    acc / h.powi(n as i32)
}

/// Ridders' extrapolation of central differences in h², halving from `h`
/// and keeping the entry whose neighbours agree best.
fn ridders(f: &dyn Fn(f64) -> f64, n: u32, h: f64) -> f64 {
    const LEVELS: usize = 7;
    let mut prev: Vec<f64> = Vec::new();
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..LEVELS {
        let mut row = vec![nth_difference(f, n, h / 2f64.powi(i as i32))];
        for j in 1..=i {
            let w = 4f64.powi(j as i32);
            let next = (w * row[j - 1] - prev[j - 1]) / (w - 1.0);
            let err = (next - row[j - 1]).abs().max((next - prev[j - 1]).abs());
            if err < best.0 {
                best = (err, next);
            }
            row.push(next);
        }
        if i > 0 && (row[i] - prev[i - 1]).abs() > 2.0 * best.0 {
            break;
        }
        prev = row;
    }
    best.1
}

/// (−1)^n/n! · dⁿ/dpⁿ f(p, a, b) at p = 0.
pub fn generating_function_phi(a: f64, b: f64, n: u32) -> f64 {
    let f = |p: f64| beta_f(p, a, b).unwrap();
    // gamma's ~1e-15 jitter grows like h^{-n}, so the ladder starts above 1e-2
    let d = if n == 0 { f(0.0) } else { ridders(&f, n, 8e-2) };
    let fact: f64 = (1..=n).map(f64::from).product();
    (-1f64).powi(n as i32) * d / fact
}

pub fn generating_function_oracle() -> Outcome {
    for a in [-0.5, -0.25, 0.5] {
        for b in [0.25, 1.0, 2.5] {
            for n in 0..=3 {
                let want = eval_phi(a, b, n as f64).unwrap().value;
                let got = generating_function_phi(a, b, n);
                let rel = ((got - want) / want).abs();
                ensure(rel < 1e-6, || format!("a={a} b={b} n={n}: {got} vs {want} (rel {rel:e})"))?;
            }
        }
    }
    Ok(())
}
