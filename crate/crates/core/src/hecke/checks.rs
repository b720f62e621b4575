//! Verifiers for the symmetrizer and idempotent identities.

use super::algebra::{jones_col, jones_row, HeckeElement};
use super::idempotent::{
    alpha, col_symmetrizer, idempotent_y, pi_lambda, row_group, row_symmetrizer, Idempotent,
    SANDWICH_CAP,
};
use super::perm::{all_perms, symmgroup_parity_holds, Perm};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactalg::LaurentQA;
use crate::verdict::Verdict;

fn signed_q(sign_exp: usize, qexp: i64) -> LaurentQA {
    LaurentQA::q_pow(qexp).scale_int(if sign_exp.is_multiple_of(2) { 1 } else { -1 })
}

/// `T_{s_i} a_n = a_n T_{s_i} = q a_n` and `T_{s_i} b_n = b_n T_{s_i} = -q^{-1} b_n`.
pub fn absorption_check(n: usize) -> Verdict {
    let inst = format!("n={n}");
    let a = jones_row(n);
    let b = jones_col(n);
    let q = LaurentQA::q();
    let mq = LaurentQA::q_pow(-1).scale_int(-1);
    for i in 1..n {
        let s = HeckeElement::generator(n, i);
        let checks = [
            (s.mul(&a), a.scale(&q), "T_s a_n"),
            (a.mul(&s), a.scale(&q), "a_n T_s"),
            (s.mul(&b), b.scale(&mq), "T_s b_n"),
            (b.mul(&s), b.scale(&mq), "b_n T_s"),
        ];
        for (lhs, rhs, what) in checks {
            if lhs.as_ref().ok() != Some(&rhs) {
                return Verdict::fail("absorption", inst, format!("{what} with s_{i} is not a scalar multiple"));
            }
        }
    }
    Verdict::pass("absorption", inst)
}

/// True when no two entries of a row of `T(λ)` land in one row of `T(μ)`.
pub fn separates(pi: &Perm, lambda: &Partition, mu: &Partition) -> bool {
    let row_of = |p: &Partition| -> Vec<usize> {
        p.parts().iter().enumerate().flat_map(|(r, &len)| std::iter::repeat_n(r, len as usize)).collect()
    };
    let rl = row_of(lambda);
    let rm = row_of(mu);
    let n = pi.n();
    for i in 0..n {
        for j in i + 1..n {
            if rl[i] == rl[j] && rm[pi.apply(i + 1) - 1] == rm[pi.apply(j + 1) - 1] {
                return false;
            }
        }
    }
    true
}

/// `E_λ ω_π F_μ = 0 = F_λ ω_π E_μ` whenever `π` does not separate `λ` from `μ`.
pub fn elambda_check(lambda: &Partition, mu: &Partition) -> Result<Verdict> {
    let inst = format!("λ={lambda}, μ={mu}");
    let n = lambda.weight() as usize;
    if mu.weight() as usize != n {
        return Err(Error::WeightMismatch(inst));
    }
    let el = row_symmetrizer(lambda);
    let fm = col_symmetrizer(mu);
    let fl = col_symmetrizer(lambda);
    let em = row_symmetrizer(mu);
    for pi in all_perms(n) {
        if separates(&pi, lambda, mu) {
            continue;
        }
        let w = HeckeElement::basis(pi.clone());
        if !el.mul(&w)?.mul(&fm)?.is_zero() {
            return Ok(Verdict::fail("elambda", inst, format!("E_λ ω_π F_μ ≠ 0 for π={pi}")));
        }
        if !fl.mul(&w)?.mul(&em)?.is_zero() {
            return Ok(Verdict::fail("elambda", inst, format!("F_λ ω_π E_μ ≠ 0 for π={pi}")));
        }
    }
    Ok(Verdict::pass("elambda", inst))
}

/// `e_λ² = α_λ e_λ` with the closed-form `α_λ`.
pub fn idempotent_check(lambda: &Partition) -> Result<Verdict> {
    let y = idempotent_y(lambda)?;
    let inst = format!("λ={lambda}");
    let sq = y.e.mul(&y.e)?;
    Ok(match sq.ratio_to(&y.e) {
        Some(c) if c == alpha(lambda) => Verdict::pass("idempotent", inst),
        Some(c) => Verdict::fail("idempotent", inst, format!("e² = ({c})·e but closed form α = {}", y.alpha)),
        None => Verdict::fail("idempotent", inst, "e² is not a multiple of e"),
    })
}

/// `e_λ e_μ = 0` for `λ ≠ μ` of equal weight.
pub fn orthogonality_check(lambda: &Partition, mu: &Partition) -> Result<Verdict> {
    let inst = format!("λ={lambda}, μ={mu}");
    let a = idempotent_y(lambda)?;
    let b = idempotent_y(mu)?;
    let prod = a.e.mul(&b.e)?;
    Ok(Verdict::from_bool("orthogonality", inst, prod.is_zero(), "e_λ e_μ ≠ 0"))
}

/// `ω_ρ ω_{π_λ} ω_σ` is a positive permutation braid for all `ρ ∈ R(λ)`, `σ ∈ R(λ^∨)`.
pub fn ppb_product_check(lambda: &Partition) -> Verdict {
    let inst = format!("λ={lambda}");
    let pi = pi_lambda(lambda);
    for rho in row_group(lambda) {
        for sigma in row_group(&lambda.conjugate()) {
            let prod = rho.then(&pi).then(&sigma);
            if prod.length() != rho.length() + pi.length() + sigma.length() {
                return Verdict::fail(
                    "ppb-product",
                    inst,
                    format!("lengths do not add for ρ={rho}, σ={sigma}"),
                );
            }
        }
    }
    Verdict::pass("ppb-product", inst)
}

/// The scalar `c` with `y_λ ω_π y_λ = c y_λ`.
pub fn sandwich_scalar(y: &Idempotent, pi: &Perm) -> Result<LaurentQA> {
    let lhs = y.e.mul(&HeckeElement::basis(pi.clone()))?.mul(&y.e)?;
    lhs.ratio_to(&y.e.scale(&y.alpha))
        .ok_or_else(|| Error::InternalDivisibility(format!("y ω_π y is not a multiple of y for π={pi}")))
}

/// All `(ρ, σ) ∈ R(λ) × R(λ^∨)` with `π = π_λ σ π_λ^{-1} ρ` as permutations.
///
/// With `braid_additive` set, only factorizations whose lengths add are kept,
/// i.e. those where `ω_{π_λ} ω_σ ω_{π_λ^{-1}} ω_ρ` is itself the positive
/// permutation braid `ω_π`.
pub fn sandwich_factorizations(lambda: &Partition, pi: &Perm, braid_additive: bool) -> Vec<(Perm, Perm)> {
    let pl = pi_lambda(lambda);
    let pli = pl.inverse();
    let mut out = Vec::new();
    for rho in row_group(lambda) {
        for sigma in row_group(&lambda.conjugate()) {
            let prod = pl.then(&sigma).then(&pli).then(&rho);
            if &prod != pi {
                continue;
            }
            if braid_additive && prod.length() != 2 * pl.length() + sigma.length() + rho.length() {
                continue;
            }
            out.push((rho.clone(), sigma));
        }
    }
    out
}

/// Checks `y_λ ω_π y_λ = (-1)^{l(σ)} q^{l(π) - 2l(σ)} y_λ` when
/// `π = π_λ σ π_λ^{-1} ρ` for some `ρ ∈ R(λ)`, `σ ∈ R(λ^∨)`, and `= 0` otherwise.
pub fn sandwich_check(lambda: &Partition, pi: &Perm) -> Result<Verdict> {
    let n = lambda.weight() as usize;
    if n > SANDWICH_CAP {
        return Err(Error::SizeCap { n, cap: SANDWICH_CAP });
    }
    if pi.n() != n {
        return Err(Error::StrandMismatch(pi.n(), n));
    }
    let y = idempotent_y(lambda)?;
    let observed = sandwich_scalar(&y, pi)?;
    let facts = sandwich_factorizations(lambda, pi, false);
    let predictions: Vec<LaurentQA> = facts
        .iter()
        .map(|(_, sigma)| signed_q(sigma.length(), pi.length() as i64 - 2 * sigma.length() as i64))
        .collect();
    let inst = format!("λ={lambda}, π={pi}");
    let ok = if predictions.is_empty() {
        observed.is_zero()
    } else {
        predictions.iter().all(|p| *p == observed)
    };
    if ok {
        return Ok(Verdict::pass("sandwich", inst));
    }
    let mut detail = format!("y ω_π y = ({observed})·y");
    match facts.first() {
        None => detail.push_str("; no factorization, statement predicts 0"),
        Some((rho, sigma)) => {
            let alt = signed_q(sigma.length(), rho.length() as i64 - sigma.length() as i64);
            detail.push_str(&format!(
                "; ρ={rho}, σ={sigma}: statement predicts ({}), (-1)^l(σ) q^(l(ρ)-l(σ)) = ({alt})",
                predictions[0]
            ));
        }
    }
    Ok(Verdict::fail("sandwich", inst, detail))
}

/// The scalar identity `y_λ ω_π y_λ = (-1)^{l(σ)} q^{l(ρ)-l(σ)} y_λ`, restricted
/// to `π` for which `ω_{π_λ} ω_σ ω_{π_λ^{-1}} ω_ρ` is the positive permutation
/// braid `ω_π`. No claim is made about other `π`.
pub fn sandwich_braid_check(lambda: &Partition, pi: &Perm) -> Result<Verdict> {
    let y = idempotent_y(lambda)?;
    let inst = format!("λ={lambda}, π={pi}");
    let facts = sandwich_factorizations(lambda, pi, true);
    if facts.is_empty() {
        return Ok(Verdict::pass("sandwich-braid", inst).with_detail("no braid factorization; nothing to check"));
    }
    let observed = sandwich_scalar(&y, pi)?;
    for (rho, sigma) in &facts {
        let expect = signed_q(sigma.length(), rho.length() as i64 - sigma.length() as i64);
        if expect != observed {
            return Ok(Verdict::fail(
                "sandwich-braid",
                inst,
                format!("y ω_π y = ({observed})·y, expected ({expect}) from ρ={rho}, σ={sigma}"),
            ));
        }
    }
    Ok(Verdict::pass("sandwich-braid", inst))
}

/// `l(π) + l(c(π)) ≡ n (mod 2)` over all of `S_n`.
pub fn parity_check(n: usize) -> Verdict {
    let bad = all_perms(n).into_iter().find(|p| !symmgroup_parity_holds(p));
    match bad {
        None => Verdict::pass("symmgroup-parity", format!("n={n}")),
        Some(p) => Verdict::fail("symmgroup-parity", format!("n={n}"), format!("fails at π={p}")),
    }
}
