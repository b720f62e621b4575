//! The Hecke algebra `H_n` on positive permutation braids, Jones symmetrizers
//! and the idempotents `y_λ`.

mod algebra;
mod checks;
mod idempotent;
mod perm;

pub use algebra::{hecke_mul, jones_col, jones_row, HeckeElement};
pub use idempotent::{
    alpha, col_symmetrizer, e_lambda, idempotent_y, pi_lambda, row_group, row_symmetrizer,
    young_subgroup, Idempotent, IDEMPOTENT_CAP, SANDWICH_CAP,
};
pub use perm::{all_perms, cycle_type, perm_length, symmgroup_parity_holds, Perm};
pub use checks::{
    absorption_check, elambda_check, idempotent_check, orthogonality_check, parity_check,
    ppb_product_check, sandwich_braid_check, sandwich_check, sandwich_factorizations, sandwich_scalar, separates,
};
