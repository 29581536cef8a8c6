//! Invariants of every module, as plain functions so that both the
//! `properties` and `acceptance` targets can run them.

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub mod cli;
pub mod coeff_triangle;
pub mod identities;
pub mod quadrature;
pub mod series_engine;
pub mod special_fn;

pub type Outcome = Result<(), String>;
pub type Check = (&'static str, fn() -> Outcome);

/// Every invariant, grouped by module.
#[allow(dead_code)]
pub fn all() -> Vec<Check> {
    [
        special_fn::CHECKS,
        series_engine::CHECKS,
        coeff_triangle::CHECKS,
        identities::CHECKS,
        quadrature::CHECKS,
        cli::CHECKS,
    ]
    .concat()
}

/// Runs `test` on `cases` values drawn from `strategy` with a fixed seed.
pub fn forall<S>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome
where
    S: Strategy,
    S::Value: std::fmt::Debug,
    <S as Strategy>::Tree: ValueTree,
{
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    TestRunner::new_with_rng(config, rng)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}
