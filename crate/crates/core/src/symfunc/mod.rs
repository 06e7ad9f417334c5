//! Schur-side evaluations: principal specializations `s_λ(1^N)`, the
//! Littlewood–Richardson and Kostka expansions behind monomial positivity,
//! and Hall–Littlewood polynomials evaluated exactly.

mod hall_littlewood;
mod kostka;
mod lr;
mod monomial;
mod weyl;

pub use hall_littlewood::{
    b_lambda, check_conj24, hl_p, hl_p_at, hl_p_poly, hl_q, hl_q_at, hl_q_poly, hl_q_symmetrization,
    sweep_conj24, HlCache, SYMMETRIZATION_MAX_VARS,
};
pub use kostka::{kostka, kostka_column, kostka_content};
pub use lr::{add_horizontal_strips, lr_coefficient, schur_product, SchurExpansion};
pub use monomial::{check_conj22, monomial_expansion, sweep_conj22, Conj22Outcome};
pub use weyl::{check_prop22, reduced_form_ordering, schur_ones, sweep_prop22};
