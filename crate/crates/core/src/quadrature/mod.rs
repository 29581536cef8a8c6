//! Independent numerical-integration oracles.

mod abel;
mod spec;
mod tanh_sinh;

pub use abel::{abel_oscillatory, abel_oscillatory_pair, abel_vector, AbelPoint, AbelSchedule};
pub use tanh_sinh::{
    integrate_decay, integrate_decay_with, integrate_two_sided, integrate_unit, integrate_unit_with, DecayPoint,
    QuadOptions,
};
pub use spec::{oracle_value, IntegralSpec, ABEL_TOL};
