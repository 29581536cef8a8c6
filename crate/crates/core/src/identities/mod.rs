//! Closed-form and recursive evaluation through the series identities.

pub mod derivative;
pub mod ramanujan;
pub mod shift;
pub mod trig;
pub mod two_sided;

pub use derivative::{
    harmonic_weighted_sum, interchange_check, inverse_factor_sum, phi_a_derivative_fd, phi_da_closed,
    phi_da_zero_expansion,
};
pub use ramanujan::{ramanujan_phi, ramanujan_sequence, sigma, sigma_interleaved};
pub use shift::{
    eta_reduction, hurwitz_reduction, hurwitz_reduction_m2_printed, hurwitz_shift, lerch_reduction, master_shift,
    master_shift_sides, master_shift_tol, ShiftSides, SHIFT_REL_TOL,
};
pub use trig::{log_sin_integral, trig_cos, trig_lambda, trig_lambda_printed, TrigResult};
pub use two_sided::{
    two_sided_closed, two_sided_corrected, two_sided_family, two_sided_lhs, two_sided_oracle, two_sided_printed,
};
