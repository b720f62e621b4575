use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentQA, QFraction};
use crate::invariants::{framed_composite, normalized_P, FramedKnot, Knot};
use crate::verdict::Verdict;

/// `𝒫(K_τ; 1, a)`.
pub fn special_polynomial(k: &FramedKnot) -> Result<LaurentQA> {
    normalized_P(k, &Partition::row(1), &Partition::empty())?.eval_q1()
}

fn instance(k: &FramedKnot, lambda: &Partition, mu: &Partition) -> String {
    if mu.is_empty() {
        format!("{k}, λ={lambda}")
    } else {
        format!("{k}, λ={lambda}, μ={mu}")
    }
}

/// `𝒫_{[λ,μ]}(K_τ; 1, a) = 𝒫(K_τ; 1, a)^{|λ|+|μ|}`.
pub fn special_poly_check(k: &FramedKnot, lambda: &Partition, mu: &Partition) -> Verdict {
    let inst = instance(k, lambda, mu);
    let run = || -> Result<(LaurentQA, LaurentQA)> {
        let lhs = normalized_P(k, lambda, mu)?.eval_q1()?;
        let rhs = special_polynomial(k)?.pow(lambda.weight() + mu.weight());
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => Verdict::from_bool("special-poly", inst, lhs == rhs, format!("{lhs} ≠ {rhs}")),
        Err(e) => Verdict::from_error("special-poly", inst, &e),
    }
}

/// `lim_{q→1} f/g`, cancelling common factors of `q - 1` first.
pub fn q1_limit(f: &QFraction, g: &QFraction) -> Result<LaurentQA> {
    let mut num = f.numerator() * &g.denominator_poly();
    let mut den = g.numerator() * &f.denominator_poly();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let qm1 = LaurentQA::q() - LaurentQA::one();
    while den.eval_q1()?.is_zero() {
        num = num.exact_div(&qm1)?;
        den = den.exact_div(&qm1)?;
    }
    num.eval_q1()?.exact_div(&den.eval_q1()?)
}

/// `𝒟_ν(U_τ) = lim_{q→1} 𝒞_ν(U_τ) / 𝒞_ν(U) = 𝒫(U_τ; 1, a)^{|ν|}`.
pub fn special_composite_check(k: &FramedKnot, nu: &Partition) -> Verdict {
    let inst = format!("{k}, ν={nu}");
    let run = || -> Result<(LaurentQA, LaurentQA)> {
        let framed = framed_composite(k, nu)?;
        let base = framed_composite(&FramedKnot::new(Knot::Unknot, 0), nu)?;
        let lhs = q1_limit(&framed, &base)?;
        let rhs = special_polynomial(k)?.pow(nu.weight());
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => Verdict::from_bool("special-composite", inst, lhs == rhs, format!("{lhs} ≠ {rhs}")),
        Err(e) => Verdict::from_error("special-composite", inst, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unknot_is_trivial() {
        assert!(special_polynomial(&FramedKnot::unknot(0)).unwrap().is_one());
        assert!(special_poly_check(&FramedKnot::unknot(0), &p(&[2, 1]), &p(&[1])).pass);
    }

    #[test]
    fn trefoil() {
        let k = FramedKnot::diagram(Knot::torus(2, 3).unwrap());
        for l in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let v = special_poly_check(&k, &l, &Partition::empty());
            assert!(v.pass, "{v:?}");
        }
    }

    #[test]
    fn composite_limits() {
        for tau in [0, 1, -2] {
            for nu in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
                let v = special_composite_check(&FramedKnot::unknot(tau), &nu);
                assert!(v.pass, "{v:?}");
            }
        }
    }

    #[test]
    fn limit_cancels_poles() {
        let f = QFraction::from(LaurentQA::q_pow(2) - LaurentQA::one());
        let g = QFraction::from(LaurentQA::q() - LaurentQA::one());
        assert_eq!(q1_limit(&f, &g).unwrap(), LaurentQA::from_int(2));
    }
}
