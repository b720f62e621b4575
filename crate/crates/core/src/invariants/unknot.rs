use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use crate::combinat::{lr_coeff, partitions_of, partitions_up_to, subpartitions, Partition};
use crate::exactalg::{LaurentQA, QFraction, Rational};

/// `W_λ(U) = Π_{x∈λ} (a q^{cn(x)} - a^{-1} q^{-cn(x)}) / {hl(x)}`.
pub fn unknot_colored(lambda: &Partition) -> QFraction {
    static MEMO: OnceLock<RwLock<HashMap<Partition, QFraction>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = memo.read().expect("unknot memo poisoned").get(lambda) {
        return v.clone();
    }
    let mut num = LaurentQA::one();
    for c in lambda.contents() {
        let f = LaurentQA::monomial(Rational::one(), c, 1) - LaurentQA::monomial(Rational::one(), -c, -1);
        num = &num * &f;
    }
    let mut out = QFraction::from(num);
    for h in lambda.hook_lengths() {
        out = out.div_bracket(h as i64).expect("hook lengths are positive");
    }
    memo.write().expect("unknot memo poisoned").insert(lambda.clone(), out.clone());
    out
}

/// `ℋ_{[λ,μ]}(U) = Σ_{σ,ρ,ν} (-1)^{|σ|} c^λ_{σ,ρ} c^μ_{σ^t,ν} W_ρ(U) W_ν(U)`.
pub fn unknot_full_colored(lambda: &Partition, mu: &Partition) -> QFraction {
    let mut terms = Vec::new();
    for sigma in subpartitions(lambda) {
        let st = sigma.conjugate();
        if !mu.contains(&st) {
            continue;
        }
        let sign = if sigma.weight() % 2 == 0 { 1 } else { -1 };
        for rho in partitions_of(lambda.weight() - sigma.weight()) {
            let c1 = lr_coeff(&sigma, &rho, lambda);
            if c1 == 0 {
                continue;
            }
            for nu in partitions_of(mu.weight() - st.weight()) {
                let c2 = lr_coeff(&st, &nu, mu);
                if c2 == 0 {
                    continue;
                }
                let w = &unknot_colored(&rho) * &unknot_colored(&nu);
                terms.push(w.scale_int(sign * (c1 * c2) as i64));
            }
        }
    }
    QFraction::sum(&terms)
}

/// `𝒞_ν(U) = Σ_{λ,μ} c^ν_{λ,μ} ℋ_{[λ,μ]}(U)`.
pub fn unknot_composite(nu: &Partition) -> QFraction {
    let mut terms = Vec::new();
    for lambda in partitions_up_to(nu.weight()) {
        for mu in partitions_of(nu.weight() - lambda.weight()) {
            let c = lr_coeff(&lambda, &mu, nu);
            if c != 0 {
                terms.push(unknot_full_colored(&lambda, &mu).scale_int(c as i64));
            }
        }
    }
    QFraction::sum(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{a_bracket, z};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w1() -> QFraction {
        QFraction::from(a_bracket()).div_bracket(1).unwrap()
    }

    #[test]
    fn colored_examples() {
        assert_eq!(unknot_colored(&Partition::empty()), QFraction::one());
        assert_eq!(unknot_colored(&p(&[1])), w1());
        let aq = LaurentQA::monomial(Rational::one(), 1, 1) - LaurentQA::monomial(Rational::one(), -1, -1);
        let expect = QFraction::from(&a_bracket() * &aq).div_bracket(1).unwrap().div_bracket(2).unwrap();
        assert_eq!(unknot_colored(&p(&[2])), expect);
    }

    #[test]
    fn full_colored_examples() {
        assert_eq!(unknot_full_colored(&p(&[2, 1]), &Partition::empty()), unknot_colored(&p(&[2, 1])));
        assert_eq!(unknot_full_colored(&p(&[1]), &p(&[1])), &w1().pow(2) - &QFraction::one());
    }

    #[test]
    fn composite_examples() {
        assert_eq!(unknot_composite(&Partition::empty()), QFraction::one());
        assert_eq!(unknot_composite(&p(&[1])), w1().scale_int(2));
        let two = &(&unknot_colored(&p(&[2])) + &unknot_full_colored(&p(&[1]), &p(&[1])))
            + &unknot_colored(&p(&[2]));
        assert_eq!(unknot_composite(&p(&[2])), two);
    }

    #[test]
    fn w1_is_a_bracket_over_z() {
        assert_eq!(w1().mul_laurent(&z()), QFraction::from(a_bracket()));
    }
}
