use thiserror::Error;

/// Errors raised by evaluation, quadrature and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {func} is singular at x = {x}")]
    Pole { func: &'static str, x: f64 },

    #[error("overflow: {func}({x}) exceeds the binary64 range")]
    Overflow { func: &'static str, x: f64 },

    #[error("domain error in {func}: {reason}")]
    Domain { func: &'static str, reason: String },

    #[error("divergent series: {0}")]
    Divergent(String),

    #[error(
        "no convergence after {terms} terms: value {value}, achieved bound {bound:e}"
    )]
    NonConvergence { value: f64, bound: f64, terms: u64 },

    #[error("quadrature did not converge: value {value}, error estimate {estimate:e}")]
    Quadrature { value: f64, estimate: f64 },

    #[error("extrapolation unstable: successive extrapolants differ by {spread:e}")]
    Extrapolation { value: f64, spread: f64 },
}

impl Error {
    pub fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
