//! Exact quotients `N / Π Φ_d(q)^{m_d}` whose denominators are products of
//! cyclotomic polynomials in `q`.
//!
//! Every quantum bracket `{k} = q^{-k} Π_{d | 2k} Φ_d(q)` factors this way, so
//! the unnormalized invariants (unknot values, meridian eigenvalues, the
//! plethystic series) stay exact without general rational-function arithmetic.
//! Values are kept fully reduced: no `Φ_d` in the denominator divides the
//! numerator. Because the `Φ_d` are irreducible this makes the representation
//! canonical, so derived equality is mathematical equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::laurent::{LaurentQA, Rational};
use crate::error::{Error, Result};

/// The `d`-th cyclotomic polynomial in `q`.
pub fn cyclotomic(d: u32) -> LaurentQA {
    assert!(d >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<RwLock<HashMap<u32, LaurentQA>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("cyclotomic cache poisoned").get(&d) {
        return p.clone();
    }
    let mut p = LaurentQA::q_pow(d as i64) - LaurentQA::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.exact_div(&cyclotomic(e)).expect("q^d - 1 factors into cyclotomics");
        }
    }
    cache.write().expect("cyclotomic cache poisoned").insert(d, p.clone());
    p
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QFraction {
    num: LaurentQA,
    /// `d -> multiplicity of Φ_d(q)` in the denominator.
    den: BTreeMap<u32, u32>,
}

impl Default for QFraction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentQA> for QFraction {
    fn from(num: LaurentQA) -> Self {
        QFraction { num, den: BTreeMap::new() }
    }
}

impl QFraction {
    pub fn zero() -> Self {
        LaurentQA::zero().into()
    }

    pub fn one() -> Self {
        LaurentQA::one().into()
    }

    pub fn from_int(c: i64) -> Self {
        LaurentQA::from_int(c).into()
    }

    pub fn constant(c: Rational) -> Self {
        LaurentQA::constant(c).into()
    }

    pub fn new(num: LaurentQA, den: BTreeMap<u32, u32>) -> Self {
        let mut f = QFraction { num, den };
        f.den.retain(|_, m| *m > 0);
        f.reduce();
        f
    }

    /// `1 / {k}`.
    pub fn inv_bracket(k: i64) -> Result<Self> {
        QFraction::one().div_bracket(k)
    }

    pub fn numerator(&self) -> &LaurentQA {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    /// The denominator expanded as a polynomial in `q`.
    pub fn denominator_poly(&self) -> LaurentQA {
        let mut d = LaurentQA::one();
        for (&k, &m) in &self.den {
            d = &d * &cyclotomic(k).pow(m);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_empty()
    }

    /// Returns the Laurent polynomial when no denominator is left.
    pub fn to_laurent(&self) -> Result<LaurentQA> {
        if self.den.is_empty() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotDivisible(format!("denominator {} remains", self.den_string())))
        }
    }

    pub fn into_laurent(self) -> Result<LaurentQA> {
        if self.den.is_empty() {
            Ok(self.num)
        } else {
            Err(Error::NotDivisible(format!("denominator {} remains", self.den_string())))
        }
    }

    fn den_string(&self) -> String {
        self.den
            .iter()
            .map(|(d, m)| if *m == 1 { format!("Φ{d}") } else { format!("Φ{d}^{m}") })
            .collect::<Vec<_>>()
            .join("·")
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<u32> = self.den.keys().copied().collect();
        for d in keys {
            let phi = cyclotomic(d);
            let mut m = self.den[&d];
            while m > 0 {
                match self.num.exact_div(&phi) {
                    Ok(q) => {
                        self.num = q;
                        m -= 1;
                    }
                    Err(_) => break,
                }
            }
            if m == 0 {
                self.den.remove(&d);
            } else {
                self.den.insert(d, m);
            }
        }
    }

    /// Sums many fractions over one common denominator, reducing once.
    pub fn sum<'a, I: IntoIterator<Item = &'a QFraction>>(items: I) -> Self {
        let items: Vec<&QFraction> = items.into_iter().filter(|f| !f.is_zero()).collect();
        let mut den: BTreeMap<u32, u32> = BTreeMap::new();
        for f in &items {
            for (&d, &m) in &f.den {
                let e = den.entry(d).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let mut num = LaurentQA::zero();
        for f in items {
            let mut n = f.num.clone();
            for (&d, &m) in &den {
                let have = f.den.get(&d).copied().unwrap_or(0);
                if m > have {
                    n = &n * &cyclotomic(d).pow(m - have);
                }
            }
            num += &n;
        }
        QFraction::new(num, den)
    }

    /// Divides by `{k}`.
    pub fn div_bracket(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        let sign = if k < 0 { -1 } else { 1 };
        let k = k.abs();
        let mut den = self.den.clone();
        for d in divisors(2 * k as u32) {
            *den.entry(d).or_insert(0) += 1;
        }
        Ok(QFraction::new(self.num.shift(k, 1, 0).scale_int(sign), den))
    }

    pub fn mul_laurent(&self, g: &LaurentQA) -> Self {
        QFraction::new(&self.num * g, self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let num = self.num.scale(c);
        let den = if num.is_zero() { BTreeMap::new() } else { self.den.clone() };
        QFraction { num, den }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from_integer(c.into()))
    }

    /// Multiplies by `q^(qnum/den) a^aexp`.
    pub fn shift(&self, qnum: i64, den: u32, aexp: i64) -> Self {
        QFraction { num: self.num.shift(qnum, den, aexp), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = QFraction::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Divides by a Laurent polynomial that must divide the numerator.
    ///
    /// Used for factors coprime to every cyclotomic denominator, such as
    /// `a - a^{-1}`.
    pub fn exact_div_laurent(&self, g: &LaurentQA) -> Result<Self> {
        let q = self.num.exact_div(g)?;
        Ok(QFraction::new(q, self.den.clone()))
    }

    /// Exact quotient `self / other`, which must have a cyclotomic denominator.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut den = self.den.clone();
        let mut divisor = other.num.clone();
        if let Some((lo, hi)) = divisor.q_degree_range() {
            let span = (hi - lo).to_integer().max(0) as u32;
            // φ(d) ≥ √(d/2), so larger d cannot divide.
            for d in 1..=2 * span * span {
                let phi = cyclotomic(d);
                while let Ok(rest) = divisor.exact_div(&phi) {
                    divisor = rest;
                    *den.entry(d).or_insert(0) += 1;
                }
            }
        }
        let top = &self.num * &other.denominator_poly();
        let q = top.exact_div(&divisor)?;
        Ok(QFraction::new(q, den))
    }

    /// `q ↦ q^d`, `a ↦ a^d`.
    pub fn adams(&self, d: u32) -> Self {
        if d == 1 {
            return self.clone();
        }
        let mut num = self.num.adams(d);
        let mut den: BTreeMap<u32, u32> = BTreeMap::new();
        // 1/Φ_e(q^d) = [(q^{ed} - 1)/Φ_e(q^d)] / Π_{f | ed} Φ_f(q)
        for (&e, &m) in &self.den {
            let full = LaurentQA::q_pow((e * d) as i64) - LaurentQA::one();
            let cofactor = full
                .exact_div(&cyclotomic(e).adams_q(d))
                .expect("Φ_e(q^d) divides q^{ed} - 1");
            num = &num * &cofactor.pow(m);
            for f in divisors(e * d) {
                *den.entry(f).or_insert(0) += m;
            }
        }
        QFraction::new(num, den)
    }

    // Applies a substitution σ that maps each Φ_d to a unit multiple of
    // some Φ_{d'}; `image` returns σ(Φ_d) and `target` the index d'.
    fn substitute<F, G>(&self, num: LaurentQA, image: F, target: G) -> Result<Self>
    where
        F: Fn(&LaurentQA) -> Result<LaurentQA>,
        G: Fn(u32) -> u32,
    {
        let mut unit = LaurentQA::one();
        let mut den: BTreeMap<u32, u32> = BTreeMap::new();
        for (&d, &m) in &self.den {
            let t = target(d);
            let img = image(&cyclotomic(d))?;
            let u = img.exact_div(&cyclotomic(t))?;
            if u.len() != 1 {
                return Err(Error::InternalDivisibility(format!(
                    "image of Φ{d} is not a unit multiple of Φ{t}"
                )));
            }
            unit = &unit * &u.pow(m);
            *den.entry(t).or_insert(0) += m;
        }
        // σ(N/D) = σ(N) / (unit · Π Φ_{d'}); the unit is a monomial.
        let inv_unit = LaurentQA::one().exact_div(&unit)?;
        Ok(QFraction::new(&num * &inv_unit, den))
    }

    pub fn substitute_sign(&self, flip_q: bool, flip_a: bool) -> Result<Self> {
        let num = self.num.substitute_sign(flip_q, flip_a)?;
        if !flip_q {
            return Ok(QFraction { num, den: self.den.clone() });
        }
        self.substitute(
            num,
            |p| p.substitute_sign(true, false),
            |d| match d % 4 {
                1 | 3 => 2 * d,
                2 => d / 2,
                _ => d,
            },
        )
    }

    /// `q ↦ q^{-1}`.
    pub fn invert_q(&self) -> Result<Self> {
        self.substitute(self.num.invert_q(), |p| Ok(p.invert_q()), |d| d)
    }

    /// `a ↦ a^{-1}`.
    pub fn invert_a(&self) -> Self {
        QFraction { num: self.num.invert_a(), den: self.den.clone() }
    }

    /// Sets `a = 1`; the denominator is unaffected.
    pub fn eval_a1(&self) -> Result<Self> {
        Ok(QFraction::new(self.num.eval_a1()?, self.den.clone()))
    }

    fn common(&self, other: &Self) -> (LaurentQA, LaurentQA, BTreeMap<u32, u32>) {
        let mut den = self.den.clone();
        for (&d, &m) in &other.den {
            let e = den.entry(d).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &QFraction| {
            let mut n = f.num.clone();
            for (&d, &m) in &den {
                let have = f.den.get(&d).copied().unwrap_or(0);
                if m > have {
                    n = &n * &cyclotomic(d).pow(m - have);
                }
            }
            n
        };
        (lift(self), lift(other), den)
    }
}

impl Add<&QFraction> for &QFraction {
    type Output = QFraction;
    fn add(self, rhs: &QFraction) -> QFraction {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return QFraction::new(&self.num + &rhs.num, self.den.clone());
        }
        let (a, b, den) = self.common(rhs);
        QFraction::new(&a + &b, den)
    }
}

impl Add for QFraction {
    type Output = QFraction;
    fn add(self, rhs: QFraction) -> QFraction {
        &self + &rhs
    }
}

impl Sub<&QFraction> for &QFraction {
    type Output = QFraction;
    fn sub(self, rhs: &QFraction) -> QFraction {
        self + &(-rhs)
    }
}

impl Sub for QFraction {
    type Output = QFraction;
    fn sub(self, rhs: QFraction) -> QFraction {
        &self - &rhs
    }
}

impl Neg for &QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        QFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        -&self
    }
}

impl Mul<&QFraction> for &QFraction {
    type Output = QFraction;
    fn mul(self, rhs: &QFraction) -> QFraction {
        if self.is_zero() || rhs.is_zero() {
            return QFraction::zero();
        }
        let mut den = self.den.clone();
        for (&d, &m) in &rhs.den {
            *den.entry(d).or_insert(0) += m;
        }
        QFraction::new(&self.num * &rhs.num, den)
    }
}

impl Mul for QFraction {
    type Output = QFraction;
    fn mul(self, rhs: QFraction) -> QFraction {
        &self * &rhs
    }
}

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::laurent::{quantum_bracket, quantum_int};

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), LaurentQA::q() - LaurentQA::one());
        assert_eq!(cyclotomic(2), LaurentQA::q() + LaurentQA::one());
        assert_eq!(cyclotomic(4), LaurentQA::q_pow(2) + LaurentQA::one());
        assert_eq!(cyclotomic(6), LaurentQA::q_pow(2) - LaurentQA::q() + LaurentQA::one());
    }

    #[test]
    fn bracket_inverse() {
        for k in 1..6 {
            let f = QFraction::inv_bracket(k).unwrap().mul_laurent(&quantum_bracket(k));
            assert_eq!(f, QFraction::one());
        }
    }

    #[test]
    fn reduction_is_canonical() {
        let f = QFraction::from(quantum_bracket(6)).div_bracket(2).unwrap();
        assert!(f.is_laurent());
        assert_eq!(f.to_laurent().unwrap(), quantum_bracket(6).exact_div(&quantum_bracket(2)).unwrap());
        let g = QFraction::inv_bracket(1).unwrap();
        let h = &g + &g;
        assert_eq!(h, QFraction::inv_bracket(1).unwrap().scale_int(2));
        assert!((&h - &h).is_zero());
    }

    #[test]
    fn adams_of_fraction() {
        let f = QFraction::inv_bracket(1).unwrap();
        assert_eq!(f.adams(3), QFraction::inv_bracket(3).unwrap());
        let g = QFraction::from(quantum_int(2)).div_bracket(3).unwrap();
        let expect = QFraction::from(quantum_int(2).adams(2)).div_bracket(6).unwrap();
        assert_eq!(g.adams(2), expect);
    }

    #[test]
    fn sign_and_inversion() {
        let f = QFraction::inv_bracket(1).unwrap();
        assert_eq!(f.invert_q().unwrap(), -f.clone());
        assert_eq!(f.substitute_sign(true, false).unwrap(), -f.clone());
        let g = QFraction::from(LaurentQA::a()).div_bracket(3).unwrap();
        assert_eq!(g.substitute_sign(true, true).unwrap(), g);
        let h = QFraction::from(LaurentQA::q()).div_bracket(2).unwrap();
        assert_eq!(h.substitute_sign(true, false).unwrap(), -h.clone());
        assert_eq!(
            h.invert_q().unwrap(),
            QFraction::from(LaurentQA::q_pow(-1)).div_bracket(-2).unwrap()
        );
    }

    #[test]
    fn fraction_division() {
        let w = QFraction::from(LaurentQA::a() - LaurentQA::a_pow(-1)).div_bracket(1).unwrap();
        let sq = &w * &w;
        assert_eq!(sq.div(&w).unwrap(), w);
        assert_eq!(w.div(&w).unwrap(), QFraction::one());
    }
}
