use std::collections::HashMap;

use super::framed::{colored_W, framed_full_H, meridian_t, normalized_P};
use super::knot::{FramedKnot, Knot, TorusKnot};
use crate::combinat::{partitions_of, Partition};
use crate::error::Result;
use crate::exactalg::{ring_membership, QFraction, RingSpec};
use crate::verdict::Verdict;

fn instance(k: &FramedKnot, lambda: &Partition, mu: &Partition) -> String {
    if mu.is_empty() {
        format!("{k}, λ={lambda}")
    } else {
        format!("{k}, λ={lambda}, μ={mu}")
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `𝒫_{[λ,μ]}(K_τ) ∈ a^ε ℤ[q^{±2}, a^{±2}]` with `ε ≡ (|λ|+|μ|)τ (mod 2)`.
pub fn verify_strong_integrality(k: &FramedKnot, lambda: &Partition, mu: &Partition) -> Verdict {
    let inst = instance(k, lambda, mu);
    let n = (lambda.weight() + mu.weight()) as i64;
    let epsilon = (n * k.framing).rem_euclid(2) as u8;
    match normalized_P(k, lambda, mu) {
        Ok(p) => ring_membership(p, RingSpec::EvenLaurent { epsilon }).relabel("strong-integrality", inst),
        Err(e) => Verdict::from_error("strong-integrality", inst, &e),
    }
}

/// The three substitution identities for `ℋ_{[λ,μ]}(K_τ)`:
/// `q ↦ -q` gives `(-1)^{|λ|+|μ|}`, `a ↦ -a` gives `(-1)^{(|λ|+|μ|)(τ+1)}`,
/// and `q ↦ q^{-1}` gives `(-1)^{|λ|+|μ|} ℋ_{[λ^∨,μ^∨]}`.
pub fn verify_symmetries(k: &FramedKnot, lambda: &Partition, mu: &Partition) -> Verdict {
    let inst = instance(k, lambda, mu);
    let run = || -> Result<Option<String>> {
        let n = (lambda.weight() + mu.weight()) as i64;
        let h = framed_full_H(k, lambda, mu)?;
        if h.substitute_sign(true, false)? != h.scale_int(sign(n)) {
            return Ok(Some("q ↦ -q".into()));
        }
        if h.substitute_sign(false, true)? != h.scale_int(sign(n * (k.framing + 1))) {
            return Ok(Some("a ↦ -a".into()));
        }
        let dual = framed_full_H(k, &lambda.conjugate(), &mu.conjugate())?;
        if h.invert_q()? != dual.scale_int(sign(n)) {
            return Ok(Some("q ↦ q^-1 against the conjugate colors".into()));
        }
        Ok(None)
    };
    match run() {
        Ok(None) => Verdict::pass("symmetries", inst),
        Ok(Some(which)) => Verdict::fail("symmetries", inst, format!("{which} identity fails")),
        Err(e) => Verdict::from_error("symmetries", inst, &e),
    }
}

/// `W_λ(T_{r,s}) = W_λ(T_{s,r})`.
pub fn verify_torus_swap(t: TorusKnot, lambda: &Partition) -> Verdict {
    let inst = format!("{t}, λ={lambda}");
    let run = || -> Result<bool> {
        let sw = t.swapped()?;
        Ok(colored_W(Knot::Torus(t), lambda)? == colored_W(Knot::Torus(sw), lambda)?)
    };
    match run() {
        Ok(ok) => Verdict::from_bool("torus-swap", inst, ok, "W differs from the swapped presentation"),
        Err(e) => Verdict::from_error("torus-swap", inst, &e),
    }
}

/// `t_{λ,μ}` are pairwise distinct over `|λ|+|μ| ≤ max_weight`.
pub fn verify_meridian_distinct(max_weight: u32) -> Verdict {
    let inst = format!("|λ|+|μ| ≤ {max_weight}");
    let mut seen: HashMap<QFraction, (Partition, Partition)> = HashMap::new();
    for total in 0..=max_weight {
        for lw in 0..=total {
            for lambda in partitions_of(lw) {
                for mu in partitions_of(total - lw) {
                    let t = meridian_t(&lambda, &mu);
                    if let Some((l0, m0)) = seen.get(&t) {
                        return Verdict::fail(
                            "meridian-distinct",
                            inst,
                            format!("t_({lambda},{mu}) = t_({l0},{m0})"),
                        );
                    }
                    seen.insert(t, (lambda.clone(), mu));
                }
            }
        }
    }
    Verdict::pass("meridian-distinct", inst).with_detail(format!("{} eigenvalues", seen.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_checks() {
        let k = FramedKnot::diagram(Knot::torus(2, 3).unwrap());
        for l in [p(&[1]), p(&[2]), p(&[1, 1])] {
            assert!(verify_strong_integrality(&k, &l, &Partition::empty()).pass);
            assert!(verify_symmetries(&k, &l, &Partition::empty()).pass);
        }
    }

    #[test]
    fn unknot_full_checks() {
        let k = FramedKnot::unknot(1);
        let v = verify_strong_integrality(&k, &p(&[1]), &p(&[1]));
        assert!(v.pass, "{v:?}");
        let v = verify_symmetries(&k, &p(&[2]), &p(&[1]));
        assert!(v.pass, "{v:?}");
    }

    #[test]
    fn meridian_small() {
        assert!(verify_meridian_distinct(3).pass);
    }
}
