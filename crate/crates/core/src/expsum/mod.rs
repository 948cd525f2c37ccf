//! Exponential sums `sum_{n <= x} e(a f(n) / b^m)` and their predicted main terms.

mod gamma;
mod phase;
mod selberg_delange;
mod sums;

pub use gamma::{complex_gamma, recip_gamma};
pub use phase::{e, e_ratio, PhaseMap};
pub use selberg_delange::{
    euler_g, local_factor, phase_prediction, sd_main_term, CoefficientSystem, SDPrediction,
    DEFAULT_PRIME_BOUND, TAIL_TOLERANCE,
};
pub use sums::{
    decay_profile, exp_sum, DecayCovariate, DecayProfile, DecayVerdict, ExpSumRecord,
    FixedComplexSum,
};

pub type ComplexValue = num_complex::Complex64;
