use proptest::prelude::*;
use ramseries::triangle::{corner_coefficient, rhs_series, CoeffTriangle};

use super::{ensure, forall, Check, Outcome};

pub const CHECKS: &[Check] = &[
    ("coeff_triangle: identity on grid", polynomial_identity_grid),
    ("coeff_triangle: identity off grid", identity_off_grid),
    ("coeff_triangle: corners", corners),
    ("coeff_triangle: integer p", integer_p_degenerates),
];

pub fn polynomial_identity_grid() -> Outcome {
    for p in [-1.0, -0.5, 0.5, 2.0] {
        for b in [0.25, 1.0, 3.0] {
            let tri = CoeffTriangle::build(p, b, 9).unwrap();
            for m in 0..=8u32 {
                for t in [-0.6, -0.1, 0.2, 0.7] {
                    let lhs = tri.lhs_poly(m as usize, t).unwrap();
                    let rhs = rhs_series(p, b, m, t).unwrap().value;
                    ensure((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()), || {
                        format!("p={p} b={b} m={m} t={t}: {lhs} vs {rhs}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

pub fn identity_off_grid() -> Outcome {
    forall(256, (-2.0f64..3.0, 0.1f64..3.0, 0u32..6, -0.5f64..0.8), |(p, b, m, t)| {
        let tri = CoeffTriangle::build(p, b, m as usize + 1).unwrap();
        let lhs = tri.lhs_poly(m as usize, t).unwrap();
        let rhs = rhs_series(p, b, m, t).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()), "{lhs} vs {rhs}");
        Ok(())
    })
}

pub fn corners() -> Outcome {
    forall(256, (-3.0f64..3.0, 0.1f64..4.0), |(p, b)| {
        let tri = CoeffTriangle::build(p, b, 10).unwrap();
        for m in 1..=10usize {
            let first = tri.get(m, 1);
            let want = b.powi(m as i32 - 1);
            prop_assert!((first - want).abs() <= 1e-14 * want, "A_1^({m}) = {first} vs {want}");
            let last = tri.get(m, m);
            let corner = corner_coefficient(p, m);
            prop_assert!((last - corner).abs() <= 1e-13 * corner.abs(), "A_{m}^({m}) = {last} vs {corner}");
        }
        Ok(())
    })
}

pub fn integer_p_degenerates() -> Outcome {
    forall(64, (0u32..5, 0.1f64..3.0), |(p, b)| {
        let tri = CoeffTriangle::build(p as f64, b, 12).unwrap();
        for m in (p as usize + 1)..=11 {
            prop_assert_eq!(tri.get(m + 1, m + 1), 0.0);
            prop_assert!(tri.lhs_poly(m, 1.0).unwrap().is_finite());
        }
        Ok(())
    })
}
