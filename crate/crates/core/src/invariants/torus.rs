use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::Zero;

use super::knot::TorusKnot;
use super::unknot::unknot_colored;
use crate::combinat::{character, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{rational_to_i64, QFraction, Rational};

/// Cabling coefficient `c^Λ_{λ;r} = Σ_μ χ_λ(μ)/𝔷_μ · χ_Λ(rμ)`.
pub fn c_lambda_r(big: &Partition, lambda: &Partition, r: u32) -> Result<i64> {
    if big.weight() != r * lambda.weight() {
        return Err(Error::WeightMismatch(format!("|{big}| ≠ {r}·|{lambda}|")));
    }
    let mut acc = Rational::zero();
    for mu in partitions_of(lambda.weight()) {
        let chi = character(lambda, &mu);
        if chi == 0 {
            continue;
        }
        let big_chi = character(big, &mu.scale(r));
        acc += Rational::new((chi * big_chi).into(), mu.zmu().into());
    }
    rational_to_i64(&acc)
        .ok_or_else(|| Error::InternalDivisibility(format!("c^{big}_{{{lambda};{r}}} = {acc} is not an integer")))
}

/// `W_λ(T_{r,s}) = q^{-κ_λ w} a^{-|λ| w} Σ_Λ c^Λ_{λ;r} q^{-sκ_λ + sκ_Λ/r} W_Λ(U)`
/// with `w = s(r-1)`.
///
/// The sum runs on the `q^{1/r}` lattice; the result must have integral
/// exponents.
#[allow(non_snake_case)]
pub fn torus_colored_W(t: TorusKnot, lambda: &Partition) -> Result<QFraction> {
    static MEMO: OnceLock<RwLock<HashMap<(TorusKnot, Partition), QFraction>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (t, lambda.clone());
    if let Some(v) = memo.read().expect("torus memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    let (r, s) = (t.r(), t.s() as i64);
    let mut terms = Vec::new();
    for big in partitions_of(r * lambda.weight()) {
        let c = c_lambda_r(&big, lambda, r)?;
        if c != 0 {
            terms.push(unknot_colored(&big).shift(s * big.kappa(), r, 0).scale_int(c));
        }
    }
    let w = t.writhe();
    let kappa = lambda.kappa();
    let out = QFraction::sum(&terms).shift(-kappa * w - s * kappa, 1, -(lambda.weight() as i64) * w);
    if out.numerator().lattice() != 1 {
        return Err(Error::LatticeResidue(format!("W_{lambda}({t}) keeps exponents in q^(1/{})", out.numerator().lattice())));
    }
    memo.write().expect("torus memo poisoned").insert(key, out.clone());
    Ok(out)
}
