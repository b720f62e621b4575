//! Row and column symmetrizers and the idempotents `y_λ = e_λ / α_λ`.

use super::algebra::{jones_col, jones_row, HeckeElement};
use super::perm::{all_perms, Perm};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{quantum_int, LaurentQA};

/// Default cap on `|λ|` for idempotent construction.
pub const IDEMPOTENT_CAP: usize = 5;
/// Default cap on `n` for exhaustive sandwich sweeps.
pub const SANDWICH_CAP: usize = 4;

fn block_product(blocks: &[u32], f: fn(usize) -> HeckeElement) -> HeckeElement {
    blocks
        .iter()
        .fold(HeckeElement::identity(0), |acc, &b| acc.tensor(&f(b as usize)))
}

/// `E_λ = a_{λ_1} ⊗ a_{λ_2} ⊗ ⋯`.
pub fn row_symmetrizer(lambda: &Partition) -> HeckeElement {
    block_product(lambda.parts(), jones_row)
}

/// `F_μ = b_{μ_1} ⊗ b_{μ_2} ⊗ ⋯`.
pub fn col_symmetrizer(mu: &Partition) -> HeckeElement {
    block_product(mu.parts(), jones_col)
}

/// `π_λ`: cell `(r, c)` of `λ`, numbered row by row, goes to the position of
/// cell `(c, r)` of `λ^∨`, numbered row by row.
pub fn pi_lambda(lambda: &Partition) -> Perm {
    let conj = lambda.conjugate();
    let conj_cells = conj.cells();
    let images: Vec<u8> = lambda
        .cells()
        .into_iter()
        .map(|(r, c)| conj_cells.iter().position(|&x| x == (c, r)).expect("transposed cell") as u8)
        .collect();
    Perm::from_zero_based(images)
}

/// Young subgroup of the consecutive blocks of sizes `blocks`.
pub fn young_subgroup(blocks: &[u32]) -> Vec<Perm> {
    let mut out = vec![Perm::identity(0)];
    for &b in blocks {
        let factor = all_perms(b as usize);
        out = out.iter().flat_map(|p| factor.iter().map(move |f| p.direct_sum(f))).collect();
    }
    out
}

/// Row group `R(λ)` of the row-numbered tableau.
pub fn row_group(lambda: &Partition) -> Vec<Perm> {
    young_subgroup(lambda.parts())
}

/// `α_λ = Π_{(i,j)} q^{j-i} [λ_i + λ^∨_j - i - j + 1]`.
pub fn alpha(lambda: &Partition) -> LaurentQA {
    lambda
        .cells()
        .into_iter()
        .zip(lambda.hook_lengths())
        .fold(LaurentQA::one(), |acc, ((i, j), h)| {
            &acc * &quantum_int(h as i64).shift(j as i64 - i as i64, 1, 0)
        })
}

/// `e_λ = E_λ T_{π_λ} F_{λ^∨} T_{π_λ}^{-1}`.
pub fn e_lambda(lambda: &Partition) -> Result<HeckeElement> {
    let n = lambda.weight() as usize;
    if n > IDEMPOTENT_CAP {
        return Err(Error::SizeCap { n, cap: IDEMPOTENT_CAP });
    }
    let pi = pi_lambda(lambda);
    let e = row_symmetrizer(lambda);
    let f = col_symmetrizer(&lambda.conjugate());
    e.mul(&HeckeElement::basis(pi.clone()))?
        .mul(&f)?
        .mul(&HeckeElement::basis_inverse(&pi))
}

/// `y_λ` kept as the pair `(e_λ, α_λ)` with `y_λ = e_λ / α_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    pub lambda: Partition,
    pub e: HeckeElement,
    pub alpha: LaurentQA,
}

impl Idempotent {
    /// `y_λ` itself when `α_λ` divides every coefficient of `e_λ`.
    pub fn as_element(&self) -> Option<HeckeElement> {
        let mut out = HeckeElement::zero(self.e.n());
        for (w, c) in self.e.terms() {
            let q = c.exact_div(&self.alpha).ok()?;
            out = &out + &HeckeElement::term(w.clone(), q);
        }
        Some(out)
    }
}

pub fn idempotent_y(lambda: &Partition) -> Result<Idempotent> {
    Ok(Idempotent { lambda: lambda.clone(), e: e_lambda(lambda)?, alpha: alpha(lambda) })
}
