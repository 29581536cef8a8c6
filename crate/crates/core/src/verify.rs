//! Verification suites: batches of independent checks, each producing a
//! [`VerificationRecord`], run on a fixed-size worker pool with results in
//! suite order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::errata::{errata_entry, errata_keys};
use crate::error::{Error, Result};
use crate::identities::{
    eta_reduction, hurwitz_reduction, inverse_factor_sum, interchange_check, lerch_reduction, master_shift,
    phi_da_closed, phi_da_zero_expansion, ramanujan_phi, two_sided_corrected, two_sided_family,
};
use crate::quadrature::IntegralSpec;
use crate::record::VerificationRecord;
use crate::series::{convergence_report, eval_phi, eval_phi_da_direct, Regime, SeriesParams};
use crate::triangle::{rhs_series, CoeffTriangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Series,
    Shifts,
    Trig,
    TwoSided,
    Errata,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::Series,
        Suite::Shifts,
        Suite::Trig,
        Suite::TwoSided,
        Suite::Errata,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Series => "series",
            Suite::Shifts => "shifts",
            Suite::Trig => "trig",
            Suite::TwoSided => "twosided",
            Suite::Errata => "errata",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (expected all, series, shifts, trig, twosided or errata)"))
    }
}

type Job = Box<dyn Fn() -> Result<Vec<VerificationRecord>> + Send + Sync>;

/// A named unit of work yielding one or more records.
pub struct Check {
    pub id: String,
    job: Job,
}

impl Check {
    pub fn new(id: impl Into<String>, f: impl Fn() -> Result<VerificationRecord> + Send + Sync + 'static) -> Self {
        Self {
            id: id.into(),
            job: Box::new(move || f().map(|r| vec![r])),
        }
    }

    pub fn many(
        id: impl Into<String>,
        f: impl Fn() -> Result<Vec<VerificationRecord>> + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.into(),
            job: Box::new(f),
        }
    }

    /// Runs the check; an evaluation error becomes a failed record.
    pub fn run(&self) -> Vec<VerificationRecord> {
        match (self.job)() {
            Ok(v) if v.is_empty() => vec![VerificationRecord::failed(&self.id, "check produced no records")],
            Ok(v) => v,
            Err(e) => vec![VerificationRecord::failed(&self.id, e.to_string())],
        }
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("id", &self.id).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let passed = records.iter().filter(|r| r.passed()).count();
        Self {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        }
    }

    /// True when there is at least one record and none failed.
    pub fn all_passed(&self) -> bool {
        self.total > 0 && self.failed == 0
    }
}

/// Runs checks on `workers` threads; output order is the order of `checks`.
pub fn run_checks(checks: &[Check], workers: usize) -> Result<Vec<VerificationRecord>> {
    if workers == 0 {
        return Err(Error::domain("run_checks", "worker count must be at least 1"));
    }
    let per_check: Vec<Vec<VerificationRecord>> = if workers == 1 {
        checks.iter().map(Check::run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::domain("run_checks", e.to_string()))?;
        pool.install(|| checks.par_iter().map(Check::run).collect())
    };
    Ok(per_check.into_iter().flatten().collect())
}

pub fn run_suite(suite: Suite, workers: usize) -> Result<Vec<VerificationRecord>> {
    run_checks(&suite_checks(suite), workers)
}

pub fn suite_checks(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::All => [Suite::Series, Suite::Shifts, Suite::Trig, Suite::TwoSided, Suite::Errata]
            .into_iter()
            .flat_map(suite_checks)
            .collect(),
        Suite::Series => series_checks(),
        Suite::Shifts => shift_checks(),
        Suite::Trig => trig_checks(),
        Suite::TwoSided => two_sided_checks(),
        Suite::Errata => errata_checks(),
    }
}

fn converges(p: SeriesParams) -> bool {
    !matches!(convergence_report(p), Regime::Divergent)
}

fn series_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for a in [-0.9, -0.5, -0.25, 0.5, 2.0] {
        for b in [0.25, 1.0, 2.5] {
            for n in 0..=5u32 {
                if !converges(SeriesParams::phi(a, b, n as f64)) {
                    continue;
                }
                out.push(Check::new(format!("recursion a={a} b={b} n={n}"), move || {
                    let rec = ramanujan_phi(a, b, n)?;
                    let sum = eval_phi(a, b, n as f64)?;
                    Ok(VerificationRecord::relative(
                        format!("recursion a={a} b={b} n={n}"),
                        rec.value,
                        sum.value,
                        1e-8,
                    )
                    .with_method(sum.method.as_str())
                    .with_terms(sum.terms_used))
                }));
            }
        }
    }
    for a in [-0.5, -0.25, 0.5] {
        for b in [0.25, 1.0, 2.5] {
            for n in 0..=3u32 {
                out.push(Check::new(format!("derivative a={a} b={b} n={n}"), move || {
                    let direct = eval_phi_da_direct(a, b, n)?;
                    let closed = phi_da_closed(a, b, n)?;
                    Ok(
                        VerificationRecord::absolute(format!("derivative a={a} b={b} n={n}"), closed, direct.value, 1e-7)
                            .with_method(direct.method.as_str())
                            .with_terms(direct.terms_used),
                    )
                }));
            }
        }
    }
    for b in [0.5, 1.0, 2.0] {
        for n in 1..=3u32 {
            out.push(Check::many(format!("inverse-factor b={b} n={n}"), move || {
                let direct = eval_phi_da_direct(0.0, b, n - 1)?;
                let sum = -direct.value;
                Ok(vec![
                    VerificationRecord::absolute(
                        format!("inverse-factor b={b} n={n}"),
                        inverse_factor_sum(b, n)?,
                        sum,
                        1e-9,
                    )
                    .with_method(direct.method.as_str())
                    .with_terms(direct.terms_used),
                    VerificationRecord::absolute(
                        format!("zero-expansion b={b} n={n}"),
                        -phi_da_zero_expansion(b, n - 1)?,
                        sum,
                        1e-9,
                    )
                    .with_method(direct.method.as_str())
                    .with_terms(direct.terms_used),
                ])
            }));
        }
    }
    for (a, b) in [(-0.5, 0.25), (0.0, 1.0), (0.5, 1.5)] {
        out.push(Check::new(format!("interchange a={a} b={b} m=1"), move || interchange_check(a, b, 1)));
    }
    let specs = [
        IntegralSpec::F1 {
            a: -0.5,
            b: 0.25,
            alpha: 1.0,
        },
        IntegralSpec::F1 {
            a: -0.5,
            b: 0.25,
            alpha: 2.0,
        },
        IntegralSpec::F1 {
            a: 1.5,
            b: 0.5,
            alpha: 0.5,
        },
        IntegralSpec::F2 { a: -0.5, b: 0.25, n: 1 },
        IntegralSpec::F3 { a: 0.5, b: 1.0, n: 1 },
        IntegralSpec::F4 { a: -0.5, b: 0.25, n: 0 },
        IntegralSpec::F4 { a: -0.5, b: 0.25, n: 1 },
        IntegralSpec::F5 {
            a: -0.5,
            b: 1.0,
            alpha: 1.0,
        },
        IntegralSpec::F6 {
            a: 1.5,
            b: 0.5,
            beta: 0.5,
            alpha: 0.5,
        },
        IntegralSpec::F6 {
            a: -0.5,
            b: 1.0,
            beta: -0.75,
            alpha: 1.0,
        },
    ];
    for spec in specs {
        out.push(Check::new(spec.label(), move || spec.verify()));
    }
    out
}

fn shift_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for p in [-2.0, -1.0, -0.5, 0.5] {
        for beta in [-1.0, -0.5, 0.5, 1.0] {
            for b in [0.5, 1.25] {
                for mu in [0.5, 1.0] {
                    for m in 0..=2u32 {
                        let ok = (1..=m + 1).all(|k| {
                            let k = k as f64;
                            converges(SeriesParams::new(p - k + 1.0, b + k - 1.0, beta, mu + m as f64))
                        }) && converges(SeriesParams::new(p, b, beta, mu));
                        if ok {
                            let id = format!("shift p={p} b={b} beta={beta} mu={mu} m={m}");
                            out.push(Check::new(id, move || master_shift(p, b, beta, mu, m)));
                        }
                    }
                }
            }
        }
    }
    for b in [0.5, 1.0, 2.0] {
        for mu in [0.5, 1.0] {
            for m in 0..=2u32 {
                out.push(Check::new(format!("hurwitz p=-1 b={b} mu={mu} m={m}"), move || {
                    let series = eval_phi(-(m as f64) - 1.0, b + m as f64, mu + m as f64)?;
                    Ok(VerificationRecord::scaled(
                        format!("hurwitz p=-1 b={b} mu={mu} m={m}"),
                        hurwitz_reduction(b, mu, m)?,
                        series.value,
                        1e-9,
                    )
                    .with_method(series.method.as_str())
                    .with_terms(series.terms_used))
                }));
            }
        }
    }
    for b in [0.5, 1.0, 2.0] {
        for beta in [-0.5, 0.5] {
            for mu in [0.0, 1.0] {
                out.push(Check::new(format!("lerch b={b} beta={beta} mu={mu}"), move || {
                    lerch_reduction(b, beta, mu)
                }));
            }
        }
    }
    for b in [0.5, 1.0, 2.0] {
        for alpha in [1.0, 2.0] {
            out.push(Check::new(format!("eta b={b} alpha={alpha}"), move || eta_reduction(b, alpha)));
        }
    }
    for p in [-1.0, -0.5, 0.5, 2.0] {
        for b in [0.25, 1.0, 3.0] {
            out.push(Check::many(format!("triangle p={p} b={b}"), move || {
                let tri = CoeffTriangle::build(p, b, 9)?;
                let mut recs = Vec::new();
                for m in 0..=8u32 {
                    for t in [-0.6, -0.1, 0.2, 0.7] {
                        let lhs = tri.lhs_poly(m as usize, t)?;
                        let rhs = rhs_series(p, b, m, t)?;
                        recs.push(
                            VerificationRecord::absolute(
                                format!("triangle p={p} b={b} m={m} t={t}"),
                                lhs,
                                rhs.value,
                                1e-10 * (1.0 + rhs.value.abs()),
                            )
                            .with_method(rhs.method.as_str())
                            .with_terms(rhs.terms_used),
                        );
                    }
                }
                Ok(recs)
            }));
        }
    }
    out
}

fn trig_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for a in 1..=3u32 {
        for dw in [1.0, 2.0] {
            let w = a as f64 + dw;
            for alpha in [0.0, 1.0] {
                for spec in [
                    IntegralSpec::F7 { a, w, alpha },
                    IntegralSpec::F8 { a, w, alpha },
                    IntegralSpec::F9 { a, v: w, alpha },
                    IntegralSpec::F10 { a, v: w, alpha },
                ] {
                    out.push(Check::new(spec.label(), move || spec.verify()));
                }
            }
        }
    }
    for (a, w, alpha) in [(2, 3.0, 0.0), (1, 3.0, 0.0), (2, 3.0, 1.0)] {
        for sine in [false, true] {
            let spec = IntegralSpec::F11 { a, w, alpha, sine };
            out.push(Check::new(spec.label(), move || spec.verify()));
        }
    }
    out
}

fn two_sided_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for b in [0.25, 0.5, 0.75] {
        for beta in [0.0, 0.25, 0.5] {
            for m in 0..=1u32 {
                out.push(Check::new(format!("two-sided b={b} beta={beta} m={m}"), move || {
                    two_sided_family(b, beta, m)
                }));
                out.push(Check::new(format!("two-sided corrected b={b} beta={beta} m={m}"), move || {
                    two_sided_corrected(b, beta, m)
                }));
            }
        }
    }
    out
}

fn errata_checks() -> Vec<Check> {
    errata_keys()
        .iter()
        .map(|&key| {
            Check::many(format!("errata {key}"), move || {
                let entry = errata_entry(key).expect("known key")?;
                Ok(entry.records())
            })
        })
        .collect()
}
