//! Membership tests for the coefficient rings appearing in the integrality
//! statements, with explicit rewriting into the `z²`, `a²` basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::fraction::QFraction;
use super::laurent::{z, LaurentQA, Monomial, Rational};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "ring", rename_all = "snake_case")]
pub enum RingSpec {
    /// `a^ε Z[q^{±2}, a^{±2}]`
    EvenLaurent { epsilon: u8 },
    /// `z^{-2·pole} a^ε Z[z², a^{±2}]`
    ZsqA { epsilon: u8, pole: u32 },
    /// `a^ε Z[q^{±1}, a^{±2}]`
    QIntA { epsilon: u8 },
    /// `Z[z²]`
    Zz2,
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::EvenLaurent { epsilon } => write!(f, "a^{epsilon}·Z[q^±2,a^±2]"),
            RingSpec::ZsqA { epsilon, pole } => write!(f, "z^-{}·a^{epsilon}·Z[z^2,a^±2]", 2 * pole),
            RingSpec::QIntA { epsilon } => write!(f, "a^{epsilon}·Z[q^±1,a^±2]"),
            RingSpec::Zz2 => write!(f, "Z[z^2]"),
        }
    }
}

/// `Σ N_{g,Q} z^{2g - 2·pole} a^{2Q + ε}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZARewrite {
    pub coefficients: BTreeMap<(u32, i64), BigInt>,
    pub pole: u32,
    pub epsilon: u8,
}

impl ZARewrite {
    /// Expands back into `q` and `a`.
    pub fn expand(&self) -> QFraction {
        let z2 = z().pow(2);
        let mut num = LaurentQA::zero();
        for (&(g, qq), n) in &self.coefficients {
            let term = z2.pow(g).shift(0, 1, 2 * qq + self.epsilon as i64);
            num += &term.scale(&Rational::from_integer(n.clone()));
        }
        let mut out = QFraction::from(num);
        for _ in 0..2 * self.pole {
            out = out.div_bracket(1).expect("{1} is nonzero");
        }
        out
    }

    /// Rows `(g, Q, N)`.
    pub fn rows(&self) -> Vec<(u32, i64, BigInt)> {
        self.coefficients.iter().map(|(&(g, q), n)| (g, q, n.clone())).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ZARewriteRepr {
    pole: u32,
    epsilon: u8,
    #[serde(rename = "N")]
    n: Vec<(u32, i64, serde_json::Value)>,
}

impl Serialize for ZARewrite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self
            .rows()
            .into_iter()
            .map(|(g, q, v)| {
                let val = match v.to_i64() {
                    Some(i) => serde_json::Value::from(i),
                    None => serde_json::Value::from(v.to_string()),
                };
                (g, q, val)
            })
            .collect();
        ZARewriteRepr { pole: self.pole, epsilon: self.epsilon, n }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZARewrite {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ZARewriteRepr::deserialize(d)?;
        let mut coefficients = BTreeMap::new();
        for (g, q, v) in repr.n {
            let n: BigInt = match &v {
                serde_json::Value::Number(x) => x
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("non-integer N value"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("N value must be an integer")),
            };
            coefficients.insert((g, q), n);
        }
        Ok(ZARewrite { coefficients, pole: repr.pole, epsilon: repr.epsilon })
    }
}

const CHECK: &str = "ring-membership";

fn monomial(qexp: i64, aexp: i64, coef: &Rational) -> Monomial {
    Monomial { qexp: Ratio::from_integer(qexp), aexp, coef: coef.clone() }
}

/// Tests whether `f` lies in the ring described by `spec`.
///
/// For the `z²` rings the verdict carries the full coefficient table on
/// success; on failure it names the first monomial that cannot be absorbed.
pub fn ring_membership(f: impl Into<QFraction>, spec: RingSpec) -> Verdict {
    let f: QFraction = f.into();
    let instance = spec.to_string();
    let fail = |detail: String| Verdict::fail(CHECK, instance.clone(), detail);

    // Clear the allowed pole first.
    let pole = match spec {
        RingSpec::ZsqA { pole, .. } => pole,
        _ => 0,
    };
    let cleared = if pole > 0 { f.mul_laurent(&z().pow(2 * pole)) } else { f };
    let poly = match cleared.to_laurent() {
        Ok(p) => p,
        Err(_) => return fail(format!("not a Laurent polynomial after clearing the pole: {cleared}")),
    };
    if !poly.has_integral_q() {
        let m = poly.monomials().into_iter().find(|m| !m.qexp.is_integer());
        let v = fail("fractional q-exponent".into());
        return match m {
            Some(m) => v.with_offending(m),
            None => v,
        };
    }

    match spec {
        RingSpec::EvenLaurent { epsilon } | RingSpec::QIntA { epsilon } => {
            let even_q = matches!(spec, RingSpec::EvenLaurent { .. });
            for (qe, ae, c) in poly.integral_terms() {
                let why = if even_q && qe.rem_euclid(2) != 0 {
                    Some("odd q-exponent")
                } else if (ae - epsilon as i64).rem_euclid(2) != 0 {
                    Some("a-exponent has the wrong parity")
                } else if !c.is_integer() {
                    Some("non-integer coefficient")
                } else {
                    None
                };
                if let Some(why) = why {
                    return fail(why.into()).with_offending(monomial(qe, ae, c));
                }
            }
            Verdict::pass(CHECK, instance)
        }
        RingSpec::ZsqA { epsilon, pole } => match rewrite_z2(&poly, epsilon, pole) {
            Ok(rw) => Verdict::pass(CHECK, instance).with_rewrite(rw),
            Err((why, m)) => fail(why).with_offending(m),
        },
        RingSpec::Zz2 => {
            if let Some((qe, ae, c)) = poly.integral_terms().find(|t| t.1 != 0) {
                return fail("a-dependence present".into()).with_offending(monomial(qe, ae, c));
            }
            match rewrite_z2(&poly, 0, 0) {
                Ok(rw) => Verdict::pass(CHECK, instance).with_rewrite(rw),
                Err((why, m)) => fail(why).with_offending(m),
            }
        }
    }
}

// Greedy reduction of each a-slice from its top q-degree by powers of z².
fn rewrite_z2(poly: &LaurentQA, epsilon: u8, pole: u32) -> std::result::Result<ZARewrite, (String, Monomial)> {
    let z2 = z().pow(2);
    let mut powers: Vec<LaurentQA> = vec![LaurentQA::one()];
    let mut coefficients = BTreeMap::new();

    for (ae, slice) in poly.by_a_degree() {
        let first = slice.iter().next().map(|(q, c)| (*q, c.clone())).unwrap();
        if (ae - epsilon as i64).rem_euclid(2) != 0 {
            return Err(("a-exponent has the wrong parity".into(), monomial(first.0, ae, &first.1)));
        }
        for (&qe, c) in &slice {
            if qe.rem_euclid(2) != 0 {
                return Err(("not invariant under q -> -q".into(), monomial(qe, ae, c)));
            }
            if slice.get(&-qe) != Some(c) {
                return Err(("not invariant under q -> q^-1".into(), monomial(qe, ae, c)));
            }
        }
        let mut rest = LaurentQA::from_terms(
            slice.into_iter().map(|(qe, c)| (Ratio::from_integer(qe), 0, c)),
        );
        while let Some(top) = rest.leading() {
            let e = top.qexp.to_integer();
            if !top.coef.is_integer() {
                return Err(("non-integer coefficient".into(), monomial(e, ae, &top.coef)));
            }
            if e < 0 || e % 2 != 0 {
                return Err(("not a polynomial in z^2".into(), monomial(e, ae, &top.coef)));
            }
            let g = (e / 2) as usize;
            while powers.len() <= g {
                let next = powers.last().unwrap() * &z2;
                powers.push(next);
            }
            rest -= &powers[g].scale(&top.coef);
            let n = top.coef.to_integer();
            if !n.is_zero() {
                coefficients.insert((g as u32, (ae - epsilon as i64).div_euclid(2)), n);
            }
        }
    }
    Ok(ZARewrite { coefficients, pole, epsilon })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::laurent::{a_bracket, quantum_bracket};

    fn n(g: u32, q: i64, rw: &ZARewrite) -> i64 {
        rw.coefficients.get(&(g, q)).map(|v| v.to_i64().unwrap()).unwrap_or(0)
    }

    #[test]
    fn z_squared_itself() {
        let f = LaurentQA::q_pow(2) - LaurentQA::from_int(2) + LaurentQA::q_pow(-2);
        let v = ring_membership(f.clone(), RingSpec::ZsqA { epsilon: 0, pole: 0 });
        assert!(v.pass);
        let rw = v.rewrite.unwrap();
        assert_eq!(n(1, 0, &rw), 1);
        assert_eq!(rw.coefficients.len(), 1);
        assert_eq!(rw.expand(), QFraction::from(f));
    }

    #[test]
    fn odd_exponent_fails_even_ring() {
        let v = ring_membership(LaurentQA::q(), RingSpec::EvenLaurent { epsilon: 0 });
        assert!(!v.pass);
        let m = v.offending.unwrap();
        assert_eq!(m.qexp, Ratio::from_integer(1));
        assert_eq!(m.aexp, 0);
    }

    #[test]
    fn product_with_a_bracket() {
        let z2 = z().pow(2);
        let f = &(&z2 + &LaurentQA::from_int(2)) * &a_bracket();
        let v = ring_membership(f.clone(), RingSpec::ZsqA { epsilon: 1, pole: 0 });
        assert!(v.pass);
        let rw = v.rewrite.unwrap();
        assert_eq!(n(1, 0, &rw), 1);
        assert_eq!(n(0, 0, &rw), 2);
        assert_eq!(n(1, -1, &rw), -1);
        assert_eq!(n(0, -1, &rw), -2);
        assert_eq!(rw.expand(), QFraction::from(f));
    }

    #[test]
    fn pole_is_cleared() {
        let f = QFraction::inv_bracket(1).unwrap().pow(2);
        let v = ring_membership(f.clone(), RingSpec::ZsqA { epsilon: 0, pole: 1 });
        assert!(v.pass, "{v:?}");
        let rw = v.rewrite.unwrap();
        assert_eq!(n(0, 0, &rw), 1);
        assert_eq!(rw.expand(), f);
        assert!(!ring_membership(f, RingSpec::ZsqA { epsilon: 0, pole: 0 }).pass);
    }

    #[test]
    fn asymmetric_polynomial_fails() {
        let v = ring_membership(LaurentQA::q_pow(2), RingSpec::Zz2);
        assert!(!v.pass);
        let v = ring_membership(quantum_bracket(1), RingSpec::QIntA { epsilon: 0 });
        assert!(v.pass);
        let v = ring_membership(quantum_bracket(1), RingSpec::QIntA { epsilon: 1 });
        assert!(!v.pass);
    }

    #[test]
    fn rewrite_json() {
        let f = &z().pow(4) * &LaurentQA::a_pow(3);
        let v = ring_membership(f, RingSpec::ZsqA { epsilon: 1, pole: 0 });
        let rw = v.rewrite.unwrap();
        let s = serde_json::to_string(&rw).unwrap();
        assert_eq!(s, r#"{"pole":0,"epsilon":1,"N":[[2,1,1]]}"#);
        let back: ZARewrite = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rw);
    }
}
