use num_traits::One;

use super::knot::{FramedKnot, Knot};
use super::torus::torus_colored_W;
use super::unknot::{unknot_colored, unknot_full_colored};
use crate::combinat::{lr_coeff, partitions_of, partitions_up_to, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{a_bracket, z, LaurentQA, QFraction, Rational};

/// Framing-independent `W_λ(K)`.
#[allow(non_snake_case)]
pub fn colored_W(knot: Knot, lambda: &Partition) -> Result<QFraction> {
    match knot {
        Knot::Unknot => Ok(unknot_colored(lambda)),
        Knot::Torus(t) => torus_colored_W(t, lambda),
    }
}

/// Twist eigenvalue `q^{(κ_λ+κ_μ)τ} a^{(|λ|+|μ|)τ}` of `Q_{λ,μ}`.
pub fn framing_factor(lambda: &Partition, mu: &Partition, framing: i64) -> LaurentQA {
    let k = lambda.kappa() + mu.kappa();
    let n = (lambda.weight() + mu.weight()) as i64;
    LaurentQA::monomial(Rational::one(), k * framing, n * framing)
}

/// `ℋ_λ(K_τ) = q^{κ_λ τ} a^{|λ| τ} W_λ(K)`.
#[allow(non_snake_case)]
pub fn framed_H(k: &FramedKnot, lambda: &Partition) -> Result<QFraction> {
    framed_full_H(k, lambda, &Partition::empty())
}

/// `ℋ_{[λ,μ]}(K_τ)`; a nonempty `μ` needs the unknot.
#[allow(non_snake_case)]
pub fn framed_full_H(k: &FramedKnot, lambda: &Partition, mu: &Partition) -> Result<QFraction> {
    let base = match k.knot {
        Knot::Unknot => unknot_full_colored(lambda, mu),
        _ if mu.is_empty() => colored_W(k.knot, lambda)?,
        _ => return Err(unsupported_full(k.knot)),
    };
    Ok(base.mul_laurent(&framing_factor(lambda, mu, k.framing)))
}

/// `𝒞_ν(U_τ)`, the composite invariant of the framed unknot.
pub fn framed_composite(k: &FramedKnot, nu: &Partition) -> Result<QFraction> {
    if k.knot != Knot::Unknot {
        return Err(Error::UnsupportedFlavor(format!("composite invariants need the unknot, got {}", k.knot)));
    }
    // Q_{λ,μ} with c^ν_{λμ} ≠ 0 share |λ|+|μ| but not κ, so twist termwise.
    let mut terms = Vec::new();
    for lambda in partitions_up_to(nu.weight()) {
        for mu in partitions_of(nu.weight() - lambda.weight()) {
            let c = lr_coeff(&lambda, &mu, nu);
            if c != 0 {
                terms.push(framed_full_H(k, &lambda, &mu)?.scale_int(c as i64));
            }
        }
    }
    Ok(QFraction::sum(&terms))
}

fn unsupported_full(knot: Knot) -> Error {
    Error::UnsupportedFlavor(format!("full colored invariants with reverse color need the unknot, got {knot}"))
}

/// `𝒫_{[λ,μ]}(K_τ) = ℋ_{[λ,μ]}(K_τ) / ℋ_{[λ,μ]}(U)` as a Laurent polynomial.
#[allow(non_snake_case)]
pub fn normalized_P(k: &FramedKnot, lambda: &Partition, mu: &Partition) -> Result<LaurentQA> {
    let num = framed_full_H(k, lambda, mu)?;
    let den = unknot_full_colored(lambda, mu);
    let p = num.div(&den)?;
    p.into_laurent()
}

/// Framing-independent `P_λ(K) = W_λ(K) / W_λ(U)`.
#[allow(non_snake_case)]
pub fn normalized_colored_P(knot: Knot, lambda: &Partition) -> Result<LaurentQA> {
    colored_W(knot, lambda)?.div(&unknot_colored(lambda))?.into_laurent()
}

/// `t_{λ,μ} = z (a Σ_{x∈λ} q^{2cn(x)} - a^{-1} Σ_{x∈μ} q^{-2cn(x)}) + (a - a^{-1})/z`.
pub fn meridian_t(lambda: &Partition, mu: &Partition) -> QFraction {
    let mut s = LaurentQA::zero();
    for c in lambda.contents() {
        s += &LaurentQA::monomial(Rational::one(), 2 * c, 1);
    }
    for c in mu.contents() {
        s -= &LaurentQA::monomial(Rational::one(), -2 * c, -1);
    }
    let tail = QFraction::from(a_bracket()).div_bracket(1).expect("{1} ≠ 0");
    &QFraction::from(&z() * &s) + &tail
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_fundamental() {
        let t = Knot::torus(2, 3).unwrap();
        let got = normalized_colored_P(t, &p(&[1])).unwrap();
        let expect = LaurentQA::monomial(Rational::one(), 2, -2) + LaurentQA::monomial(Rational::one(), -2, -2)
            - LaurentQA::a_pow(-4);
        assert_eq!(got, expect);
        let fr = normalized_P(&FramedKnot::diagram(t), &p(&[1]), &Partition::empty()).unwrap();
        assert_eq!(fr, expect.shift(0, 1, 3));
    }

    #[test]
    fn unknot_normalizes_to_one() {
        for l in partitions_up_to(3) {
            assert!(normalized_colored_P(Knot::Unknot, &l).unwrap().is_one());
        }
    }

    #[test]
    fn framing_examples() {
        let u1 = FramedKnot::unknot(1);
        let h = framed_H(&u1, &p(&[1])).unwrap();
        assert_eq!(h, unknot_colored(&p(&[1])).shift(0, 1, 1));
        let t = Knot::torus(2, 3).unwrap();
        let l = p(&[2, 1]);
        let h3 = framed_H(&FramedKnot::new(t, 3), &l).unwrap();
        assert_eq!(h3, colored_W(t, &l).unwrap().shift(3 * l.kappa(), 1, 9));
        assert!(framed_full_H(&FramedKnot::diagram(t), &p(&[1]), &p(&[1])).is_err());
    }

    #[test]
    fn meridian_examples() {
        let tail = QFraction::from(a_bracket()).div_bracket(1).unwrap();
        assert_eq!(meridian_t(&Partition::empty(), &Partition::empty()), tail);
        let za = QFraction::from(&z() * &LaurentQA::a());
        assert_eq!(meridian_t(&p(&[1]), &Partition::empty()), &za + &tail);
    }
}
