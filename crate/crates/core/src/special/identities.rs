use super::alexander::alexander;
use crate::combinat::{character, is_prime, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{quantum_bracket, quantum_int, ring_membership, z, LaurentQA, QFraction, RingSpec};
use crate::invariants::FramedKnot;
use crate::lmov::{LmovPipeline, SeriesFlavor};
use crate::verdict::Verdict;

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `α_p^τ = (Σ_{k=0}^{p-1} q^{pτ(p-1-2k)} - p(-1)^{(p-1)τ}) / [p]²`.
pub fn alpha_p_tau(p: u32, tau: i64) -> Result<LaurentQA> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let pi = p as i64;
    let mut num = LaurentQA::from_int(-pi * sign((pi - 1) * tau));
    for k in 0..pi {
        num += &LaurentQA::q_pow(pi * tau * (pi - 1 - 2 * k));
    }
    num.exact_div(&quantum_int(pi).pow(2))
}

/// `α_p^τ ∈ ℤ[z²]`.
pub fn alpha_check(p: u32, tau: i64) -> Verdict {
    let inst = format!("p={p}, τ={tau}");
    match alpha_p_tau(p, tau) {
        Ok(alpha) => ring_membership(alpha, RingSpec::Zz2).relabel("alpha", inst),
        Err(e) => Verdict::from_error("alpha", inst, &e),
    }
}

/// `α_2^{τ+1} = α_2^τ (z² + 2) - α_2^{τ-1} + 2(-1)^τ` for `|τ| < max_tau`.
pub fn alpha_recursion_check(max_tau: i64) -> Verdict {
    let inst = format!("p=2, |τ| ≤ {max_tau}");
    let run = || -> Result<Option<i64>> {
        let z2 = z().pow(2) + LaurentQA::from_int(2);
        for tau in (1 - max_tau)..max_tau {
            let lhs = alpha_p_tau(2, tau + 1)?;
            let rhs = &(&alpha_p_tau(2, tau)? * &z2) - &alpha_p_tau(2, tau - 1)? + LaurentQA::from_int(2 * sign(tau));
            if lhs != rhs {
                return Ok(Some(tau));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => Verdict::pass("alpha-recursion", inst),
        Ok(Some(tau)) => Verdict::fail("alpha-recursion", inst, format!("recursion breaks at τ={tau}")),
        Err(e) => Verdict::from_error("alpha-recursion", inst, &e),
    }
}

/// `Σ_{a+b+1=|B|} χ_{(a|b)}(B) (-1)^b u^{a-b} = Π_j {B_j}_u / {1}_u`, with `u = q`.
pub fn sumchi_check(b: &Partition) -> Verdict {
    let inst = format!("B={b}");
    if b.is_empty() {
        return Verdict::fail("sumchi", inst, "B must be nonempty");
    }
    let n = b.weight();
    let mut lhs = LaurentQA::zero();
    for leg in 0..n {
        let arm = n - 1 - leg;
        let chi = character(&Partition::hook(arm, leg), b);
        lhs += &LaurentQA::q_pow(arm as i64 - leg as i64).scale_int(chi * sign(leg as i64));
    }
    let prod = b.parts().iter().fold(LaurentQA::one(), |acc, &part| &acc * &quantum_bracket(part as i64));
    let rhs = match prod.exact_div(&z()) {
        Ok(r) => r,
        Err(e) => return Verdict::from_error("sumchi", inst, &e),
    };
    Verdict::from_bool("sumchi", inst, lhs == rhs, format!("{lhs} ≠ {rhs}"))
}

/// [`sumchi_check`] over every `B` with `1 ≤ |B| ≤ max_weight`.
pub fn sumchi_sweep(max_weight: u32) -> Verdict {
    let inst = format!("|B| ≤ {max_weight}");
    let mut count = 0;
    for n in 1..=max_weight {
        for b in partitions_of(n) {
            let v = sumchi_check(&b);
            if !v.pass {
                return v.relabel("sumchi", inst);
            }
            count += 1;
        }
    }
    Verdict::pass("sumchi", inst).with_detail(format!("{count} cycle types"))
}

/// `g̃_{(p)}(K_w; q, 1) = (-1)^{pw} z^{-2} A(K; q^p) α_p^w`, both sides in `z^{-2} ℤ[z²]`.
///
/// The sign is the `a = 1` trace of the unit `(-1)^{pτ} a^{-pτ}` relating
/// `H_{(p)}` to `ℋ_{(p)}`.
pub fn gtilde_a1_check(k: &FramedKnot, p: u32) -> Verdict {
    let inst = format!("{k}, p={p}");
    let run = || -> Result<Verdict> {
        let pipeline = LmovPipeline::new(*k, p, SeriesFlavor::Colored)?;
        let lhs = pipeline.g_tilde(&Partition::row(p))?.eval_a1()?;
        let closed = &alexander(k.knot)?.adams(p).value().clone() * &alpha_p_tau(p, k.framing)?;
        let unit = sign(p as i64 * k.framing);
        let rhs = QFraction::from(closed.scale_int(unit)).div_bracket(1)?.div_bracket(1)?;
        if lhs != rhs {
            return Ok(Verdict::fail("gtilde-a1", inst.clone(), format!("g̃(q,1) = {lhs}, closed form = {rhs}")));
        }
        let ring = RingSpec::ZsqA { epsilon: 0, pole: 1 };
        Ok(ring_membership(lhs, ring).relabel("gtilde-a1", inst.clone()))
    };
    run().unwrap_or_else(|e| Verdict::from_error("gtilde-a1", inst.clone(), &e))
}
