//! The `q = 1` and `a = 1` specializations: special polynomials, colored
//! Alexander polynomials, `α_p^τ` and the hook character identities.

mod alexander;
mod identities;
mod polynomial;

pub use alexander::{alexander, colored_alexander, hook_conjecture_check, torus_alexander_closed, AlexanderPoly};
pub use identities::{
    alpha_check, alpha_p_tau, alpha_recursion_check, gtilde_a1_check, sumchi_check, sumchi_sweep,
};
pub use polynomial::{q1_limit, special_composite_check, special_poly_check, special_polynomial};
