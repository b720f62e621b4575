use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::perm::{all_perms, Perm};
use crate::error::{Error, Result};
use crate::exactalg::{z, LaurentQA};

/// An element `Σ c_w T_w` of the Hecke algebra `H_n` with coefficients in `q`.
///
/// `T_w` is the positive permutation braid of `w`; products stack the left
/// factor on top of the right one.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, LaurentQA>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    /// `T_w`.
    pub fn basis(w: Perm) -> Self {
        Self::term(w, LaurentQA::one())
    }

    pub fn term(w: Perm, c: LaurentQA) -> Self {
        let mut out = Self::zero(w.n());
        out.add_term(w, c);
        out
    }

    /// `T_{s_i}` (1-based `i`).
    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(Perm::simple(n, i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentQA)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Perm) -> LaurentQA {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Perm, c: LaurentQA) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn scale(&self, c: &LaurentQA) -> Self {
        let mut out = Self::zero(self.n);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// `T_{s_i} · self` (0-based `i`, swapping strands `i` and `i+1`).
    fn left_generator(&self, i: usize, zz: &LaurentQA) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let sw = w.swap_positions(i);
            if w.raw()[i] < w.raw()[i + 1] {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(w.clone(), c * zz);
                out.add_term(sw, c.clone());
            }
        }
        out
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let zz = z();
        let mut out = Self::zero(self.n);
        for (u, cu) in &self.terms {
            // T_u = T_{s_{i1}} ⋯ T_{s_{ik}}; apply the generators right to left.
            let mut acc = other.clone();
            for &i in u.reduced_word().iter().rev() {
                acc = acc.left_generator(i - 1, &zz);
            }
            for (w, c) in acc.terms {
                out.add_term(w, &c * cu);
            }
        }
        Ok(out)
    }

    /// `T_w^{-1}` using `T_s^{-1} = T_s - z`.
    pub fn basis_inverse(w: &Perm) -> Self {
        let n = w.n();
        let zz = z();
        let mut acc = Self::identity(n);
        // (T_{s1}⋯T_{sk})^{-1} = T_{sk}^{-1} ⋯ T_{s1}^{-1}
        for &i in w.reduced_word().iter() {
            let inv = &Self::generator(n, i) - &Self::identity(n).scale(&zz);
            acc = inv.mul(&acc).expect("same strand count");
        }
        acc
    }

    /// Block tensor product: `self` on the first strands, `other` after.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                out.add_term(u.direct_sum(v), cu * cv);
            }
        }
        out
    }

    /// True when `self = c · other` for the given scalar.
    pub fn is_multiple_of(&self, other: &Self, c: &LaurentQA) -> bool {
        *self == other.scale(c)
    }

    /// Finds `c` with `self = c · other` when `c` is a Laurent polynomial.
    pub fn ratio_to(&self, other: &Self) -> Option<LaurentQA> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentQA::zero());
        }
        let (w, b) = other.terms.iter().next()?;
        let c = self.coeff(w).exact_div(b).ok()?;
        self.is_multiple_of(other, &c).then_some(c)
    }
}

impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, rhs.n, "strand counts differ");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})·T{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `x · y`.
pub fn hecke_mul(x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement> {
    x.mul(y)
}

/// `a_n = Σ_π q^{l(π)} T_π`.
pub fn jones_row(n: usize) -> HeckeElement {
    let mut out = HeckeElement::zero(n);
    for p in all_perms(n) {
        let l = p.length() as i64;
        out.add_term(p, LaurentQA::q_pow(l));
    }
    out
}

/// `b_n = Σ_π (-q)^{-l(π)} T_π`.
pub fn jones_col(n: usize) -> HeckeElement {
    let mut out = HeckeElement::zero(n);
    for p in all_perms(n) {
        let l = p.length() as i64;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        out.add_term(p, LaurentQA::q_pow(-l).scale_int(sign));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation() {
        let s = HeckeElement::generator(2, 1);
        let sq = s.mul(&s).unwrap();
        let expect = &s.scale(&z()) + &HeckeElement::identity(2);
        assert_eq!(sq, expect);
    }

    #[test]
    fn lengths_add() {
        let s1 = HeckeElement::generator(3, 1);
        let s2 = HeckeElement::generator(3, 2);
        let p = s1.mul(&s2).unwrap();
        assert_eq!(p, HeckeElement::basis(Perm::simple(3, 1).then(&Perm::simple(3, 2))));
        let e = HeckeElement::identity(3);
        assert_eq!(e.mul(&s1).unwrap(), s1);
    }

    #[test]
    fn braid_relation_and_associativity() {
        let s1 = HeckeElement::generator(3, 1);
        let s2 = HeckeElement::generator(3, 2);
        let l = s1.mul(&s2).unwrap().mul(&s1).unwrap();
        let r = s2.mul(&s1).unwrap().mul(&s2).unwrap();
        assert_eq!(l, r);
        let x = &jones_row(3) + &s1;
        let y = &jones_col(3) - &s2.scale(&LaurentQA::q());
        let w = &s1 + &s2;
        assert_eq!(x.mul(&y).unwrap().mul(&w).unwrap(), x.mul(&y.mul(&w).unwrap()).unwrap());
    }

    #[test]
    fn jones_small() {
        assert_eq!(jones_row(1), HeckeElement::identity(1));
        let s = Perm::simple(2, 1);
        assert_eq!(jones_row(2), &HeckeElement::identity(2) + &HeckeElement::term(s.clone(), LaurentQA::q()));
        assert_eq!(
            jones_col(2),
            &HeckeElement::identity(2) - &HeckeElement::term(s, LaurentQA::q_pow(-1))
        );
    }

    #[test]
    fn inverse_basis() {
        for w in all_perms(3) {
            let inv = HeckeElement::basis_inverse(&w);
            assert_eq!(HeckeElement::basis(w.clone()).mul(&inv).unwrap(), HeckeElement::identity(3));
            assert_eq!(inv.mul(&HeckeElement::basis(w)).unwrap(), HeckeElement::identity(3));
        }
    }

    #[test]
    fn mismatch() {
        assert!(matches!(
            HeckeElement::identity(2).mul(&HeckeElement::identity(3)),
            Err(Error::StrandMismatch(2, 3))
        ));
    }
}
