//! Thoma-simplex parameters, the specializations `s_λ(α, β)`, the extreme
//! measures they define, the growth sampler, and the clutching and
//! convergence experiments built on them.

mod clutch;
mod convergence;
mod params;
mod sampler;
mod specialization;

pub use clutch::{clutch_bracket, clutch_params, Bracket, Clutch};
pub use convergence::{convergence_experiment, staircase_sequence, ConvergenceRow};
pub use params::{d_inf, lipschitz_check, power_sum, LipschitzOutcome, ThomaParams};
pub use sampler::{
    extreme_measure, lln_experiment, mean_abs_deviation, GrowthSampler, GrowthState, LlnKind,
    LlnRow,
};
pub use specialization::{complete_newton, complete_product, super_schur, Specialization};
