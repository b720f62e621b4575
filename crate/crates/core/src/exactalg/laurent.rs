//! Sparse bivariate Laurent polynomials in `q` and `a` with exact rational
//! coefficients.
//!
//! The `q` exponents live on a lattice `(1/den)·Z`; all arithmetic keeps the
//! lattice as small as possible, so a value whose exponents are integral always
//! has `den == 1` and equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// A single term `coef · q^qexp · a^aexp`, used for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    #[serde(with = "ratio_i64_str")]
    pub qexp: Ratio<i64>,
    pub aexp: i64,
    #[serde(with = "rational_str")]
    pub coef: Rational,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·q^{}·a^{}", self.coef, self.qexp, self.aexp)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentQA {
    den: u32,
    // (numerator of the q exponent over `den`, a exponent) -> coefficient
    terms: BTreeMap<(i64, i64), Rational>,
}

impl Default for LaurentQA {
    fn default() -> Self {
        Self::zero()
    }
}

impl LaurentQA {
    pub fn zero() -> Self {
        LaurentQA { den: 1, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `c · q^qexp · a^aexp` with an integral q exponent.
    pub fn monomial(c: Rational, qexp: i64, aexp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qexp, aexp), c);
        }
        LaurentQA { den: 1, terms }
    }

    /// `c · q^(qnum/den) · a^aexp`.
    pub fn monomial_frac(c: Rational, qnum: i64, den: u32, aexp: i64) -> Self {
        assert!(den > 0, "lattice denominator must be positive");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qnum, aexp), c);
        }
        let mut out = LaurentQA { den, terms };
        out.reduce_lattice();
        out
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn a() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e, 0)
    }

    pub fn a_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), 0, e)
    }

    /// Builds a value from `(qexp, aexp, coef)` triples; repeated keys add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Ratio<i64>, i64, Rational)>,
    {
        let mut out = LaurentQA::zero();
        for (qe, ae, c) in terms {
            out += &Self::monomial_frac(c, *qe.numer(), *qe.denom() as u32, ae);
        }
        out
    }

    pub fn lattice(&self) -> u32 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_integral_q(&self) -> bool {
        self.den == 1
    }

    /// Iterates `(qexp, aexp, coef)` in increasing `(qexp, aexp)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Ratio<i64>, i64, &Rational)> + '_ {
        let den = self.den as i64;
        self.terms
            .iter()
            .map(move |(&(qn, ae), c)| (Ratio::new(qn, den), ae, c))
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.terms()
            .map(|(qexp, aexp, c)| Monomial { qexp, aexp, coef: c.clone() })
            .collect()
    }

    /// Coefficient of `q^qexp a^aexp`; zero when absent.
    pub fn coeff(&self, qexp: Ratio<i64>, aexp: i64) -> Rational {
        let den = self.den as i64;
        if (qexp * den).is_integer() {
            let qn = (qexp * den).to_integer();
            self.terms.get(&(qn, aexp)).cloned().unwrap_or_else(Rational::zero)
        } else {
            Rational::zero()
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest `(qexp, aexp)` term in lexicographic order.
    pub fn leading(&self) -> Option<Monomial> {
        let den = self.den as i64;
        self.terms.iter().next_back().map(|(&(qn, ae), c)| Monomial {
            qexp: Ratio::new(qn, den),
            aexp: ae,
            coef: c.clone(),
        })
    }

    pub fn q_degree_range(&self) -> Option<(Ratio<i64>, Ratio<i64>)> {
        let den = self.den as i64;
        let lo = self.terms.keys().map(|k| k.0).min()?;
        let hi = self.terms.keys().map(|k| k.0).max()?;
        Some((Ratio::new(lo, den), Ratio::new(hi, den)))
    }

    pub fn a_degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|k| k.1).min()?;
        let hi = self.terms.keys().map(|k| k.1).max()?;
        Some((lo, hi))
    }

    /// True when no term carries a power of `a`.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    fn reduce_lattice(&mut self) {
        if self.den == 1 {
            return;
        }
        let mut g = self.den as i64;
        for &(qn, _) in self.terms.keys() {
            g = g.gcd(&qn);
            if g == 1 {
                return;
            }
        }
        if self.terms.is_empty() {
            self.den = 1;
            return;
        }
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms.into_iter().map(|((qn, ae), c)| ((qn / g, ae), c)).collect();
        self.den /= g as u32;
    }

    fn rescaled(&self, den: u32) -> BTreeMap<(i64, i64), Rational> {
        debug_assert!(den.is_multiple_of(self.den));
        let k = (den / self.den) as i64;
        if k == 1 {
            return self.terms.clone();
        }
        self.terms.iter().map(|(&(qn, ae), c)| ((qn * k, ae), c.clone())).collect()
    }

    fn common_lattice(&self, other: &Self) -> u32 {
        self.den.lcm(&other.den)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQA {
            den: self.den,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    /// Multiplies by `q^(qnum/den) a^aexp`.
    pub fn shift(&self, qnum: i64, den: u32, aexp: i64) -> Self {
        let l = self.den.lcm(&den);
        let k_self = (l / self.den) as i64;
        let shift_q = qnum * (l / den) as i64;
        let mut out = LaurentQA {
            den: l,
            terms: self
                .terms
                .iter()
                .map(|(&(qn, ae), c)| ((qn * k_self + shift_q, ae + aexp), c.clone()))
                .collect(),
        };
        out.reduce_lattice();
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Adams operation: `q ↦ q^d`, `a ↦ a^d`.
    pub fn adams(&self, d: u32) -> Self {
        assert!(d >= 1, "Adams index must be positive");
        let d = d as i64;
        let mut out = LaurentQA {
            den: self.den,
            terms: self.terms.iter().map(|(&(qn, ae), c)| ((qn * d, ae * d), c.clone())).collect(),
        };
        out.reduce_lattice();
        out
    }

    /// `q ↦ q^d` only.
    pub fn adams_q(&self, d: u32) -> Self {
        let d = d as i64;
        let mut out = LaurentQA {
            den: self.den,
            terms: self.terms.iter().map(|(&(qn, ae), c)| ((qn * d, ae), c.clone())).collect(),
        };
        out.reduce_lattice();
        out
    }

    /// `q ↦ q^{-1}`.
    pub fn invert_q(&self) -> Self {
        LaurentQA {
            den: self.den,
            terms: self.terms.iter().map(|(&(qn, ae), c)| ((-qn, ae), c.clone())).collect(),
        }
    }

    /// `a ↦ a^{-1}`.
    pub fn invert_a(&self) -> Self {
        LaurentQA {
            den: self.den,
            terms: self.terms.iter().map(|(&(qn, ae), c)| ((qn, -ae), c.clone())).collect(),
        }
    }

    /// `q ↦ ±q`, `a ↦ ±a`.
    pub fn substitute_sign(&self, flip_q: bool, flip_a: bool) -> Result<Self> {
        if flip_q && self.den != 1 {
            return Err(Error::FractionalExponent(format!(
                "q -> -q requested on lattice 1/{}",
                self.den
            )));
        }
        Ok(LaurentQA {
            den: self.den,
            terms: self
                .terms
                .iter()
                .map(|(&(qn, ae), c)| {
                    let odd = (flip_q && qn.rem_euclid(2) == 1) ^ (flip_a && ae.rem_euclid(2) == 1);
                    ((qn, ae), if odd { -c.clone() } else { c.clone() })
                })
                .collect(),
        })
    }

    /// Sets `q = 1`, leaving a Laurent polynomial in `a`.
    pub fn eval_q1(&self) -> Result<Self> {
        if self.den != 1 {
            return Err(Error::FractionalExponent(format!(
                "q = 1 requested on lattice 1/{}",
                self.den
            )));
        }
        let mut out = LaurentQA::zero();
        for (&(_, ae), c) in &self.terms {
            out.add_term(0, ae, c.clone());
        }
        Ok(out)
    }

    /// Sets `a = 1`, leaving a Laurent polynomial in `q`.
    pub fn eval_a1(&self) -> Result<Self> {
        if self.den != 1 {
            return Err(Error::FractionalExponent(format!(
                "a = 1 requested on lattice 1/{}",
                self.den
            )));
        }
        let mut out = LaurentQA::zero();
        for (&(qn, _), c) in &self.terms {
            out.add_term(qn, 0, c.clone());
        }
        Ok(out)
    }

    // Adds a term on the current lattice.
    fn add_term(&mut self, qn: i64, ae: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((qn, ae)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs leading-term division in lexicographic `(q, a)` order. A Laurent
    /// quotient, when it exists, has its exponents inside the box spanned by
    /// the degree differences of the operands, so any step leaving that box
    /// proves non-divisibility.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let l = self.common_lattice(divisor);
        let mut rem = self.rescaled(l);
        let div = divisor.rescaled(l);

        if div.len() == 1 {
            let (&(dq, da), dc) = div.iter().next().unwrap();
            let terms = rem.into_iter().map(|((qn, ae), c)| ((qn - dq, ae - da), c / dc)).collect();
            let mut out = LaurentQA { den: l, terms };
            out.reduce_lattice();
            return Ok(out);
        }

        let q_lo = rem.keys().map(|k| k.0).min().unwrap() - div.keys().map(|k| k.0).min().unwrap();
        let q_hi = rem.keys().map(|k| k.0).max().unwrap() - div.keys().map(|k| k.0).max().unwrap();
        let a_lo = rem.keys().map(|k| k.1).min().unwrap() - div.keys().map(|k| k.1).min().unwrap();
        let a_hi = rem.keys().map(|k| k.1).max().unwrap() - div.keys().map(|k| k.1).max().unwrap();
        let (&(lead_q, lead_a), lead_c) = div.iter().next_back().unwrap();
        let lead_c = lead_c.clone();

        let mut quotient: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
        while let Some((&(rq, ra), rc)) = rem.iter().next_back() {
            let tq = rq - lead_q;
            let ta = ra - lead_a;
            if tq < q_lo || tq > q_hi || ta < a_lo || ta > a_hi {
                return Err(Error::NotDivisible(format!(
                    "remainder term {}·q^{}·a^{} cannot be cancelled",
                    rc,
                    Ratio::new(rq, l as i64),
                    ra
                )));
            }
            let tc = rc / &lead_c;
            for (&(dq, da), dc) in &div {
                let key = (dq + tq, da + ta);
                let delta = dc * &tc;
                use std::collections::btree_map::Entry;
                match rem.entry(key) {
                    Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient.insert((tq, ta), tc);
        }
        let mut out = LaurentQA { den: l, terms: quotient };
        out.reduce_lattice();
        Ok(out)
    }

    /// Replaces rational coefficients by integers; `None` if any is fractional.
    pub fn integer_coefficients(&self) -> Option<BTreeMap<(i64, i64), BigInt>> {
        self.terms
            .iter()
            .map(|(k, c)| if c.is_integer() { Some((*k, c.to_integer())) } else { None })
            .collect()
    }

    /// Coefficients grouped by `a` exponent: `aexp -> (qnum -> coef)`.
    pub(crate) fn by_a_degree(&self) -> BTreeMap<i64, BTreeMap<i64, Rational>> {
        let mut out: BTreeMap<i64, BTreeMap<i64, Rational>> = BTreeMap::new();
        for (&(qn, ae), c) in &self.terms {
            out.entry(ae).or_default().insert(qn, c.clone());
        }
        out
    }

    /// q exponent of the term as an `i64`; panics on a fractional lattice.
    pub(crate) fn integral_terms(&self) -> impl Iterator<Item = (i64, i64, &Rational)> + '_ {
        assert_eq!(self.den, 1, "integral exponents required");
        self.terms.iter().map(|(&(qn, ae), c)| (qn, ae, c))
    }
}

/// `q^n - q^{-n}`.
pub fn quantum_bracket(n: i64) -> LaurentQA {
    LaurentQA::q_pow(n) - LaurentQA::q_pow(-n)
}

/// `[n] = {n}/{1}`.
pub fn quantum_int(n: i64) -> LaurentQA {
    quantum_bracket(n)
        .exact_div(&quantum_bracket(1))
        .expect("{1} divides every {n}")
}

/// `z = q - q^{-1}`.
pub fn z() -> LaurentQA {
    quantum_bracket(1)
}

/// `a - a^{-1}`.
pub fn a_bracket() -> LaurentQA {
    LaurentQA::a() - LaurentQA::a_pow(-1)
}

pub fn exact_div(f: &LaurentQA, g: &LaurentQA) -> Result<LaurentQA> {
    f.exact_div(g)
}

impl AddAssign<&LaurentQA> for LaurentQA {
    fn add_assign(&mut self, rhs: &LaurentQA) {
        if rhs.is_zero() {
            return;
        }
        let l = self.common_lattice(rhs);
        if l != self.den {
            self.terms = self.rescaled(l);
            self.den = l;
        }
        let k = (l / rhs.den) as i64;
        for (&(qn, ae), c) in &rhs.terms {
            self.add_term(qn * k, ae, c.clone());
        }
        self.reduce_lattice();
    }
}

impl SubAssign<&LaurentQA> for LaurentQA {
    fn sub_assign(&mut self, rhs: &LaurentQA) {
        *self += &(-rhs);
    }
}

impl Add<&LaurentQA> for &LaurentQA {
    type Output = LaurentQA;
    fn add(self, rhs: &LaurentQA) -> LaurentQA {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentQA {
    type Output = LaurentQA;
    fn add(mut self, rhs: LaurentQA) -> LaurentQA {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentQA> for &LaurentQA {
    type Output = LaurentQA;
    fn sub(self, rhs: &LaurentQA) -> LaurentQA {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentQA {
    type Output = LaurentQA;
    fn sub(mut self, rhs: LaurentQA) -> LaurentQA {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentQA {
    type Output = LaurentQA;
    fn neg(self) -> LaurentQA {
        LaurentQA {
            den: self.den,
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentQA {
    type Output = LaurentQA;
    fn neg(self) -> LaurentQA {
        -&self
    }
}

impl Mul<&LaurentQA> for &LaurentQA {
    type Output = LaurentQA;
    fn mul(self, rhs: &LaurentQA) -> LaurentQA {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQA::zero();
        }
        let l = self.common_lattice(rhs);
        let ks = (l / self.den) as i64;
        let kr = (l / rhs.den) as i64;
        let mut out = LaurentQA { den: l, terms: BTreeMap::new() };
        for (&(q1, a1), c1) in &self.terms {
            for (&(q2, a2), c2) in &rhs.terms {
                out.add_term(q1 * ks + q2 * kr, a1 + a2, c1 * c2);
            }
        }
        out.reduce_lattice();
        out
    }
}

impl Mul for LaurentQA {
    type Output = LaurentQA;
    fn mul(self, rhs: LaurentQA) -> LaurentQA {
        &self * &rhs
    }
}

impl fmt::Display for LaurentQA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (qe, ae, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let bare = qe.is_zero() && ae == 0;
            if !mag.is_one() || bare {
                write!(f, "{}", mag)?;
            }
            if !qe.is_zero() {
                if !mag.is_one() {
                    write!(f, "*")?;
                }
                if qe.is_one() {
                    write!(f, "q")?;
                } else if qe.is_integer() {
                    write!(f, "q^{}", qe)?;
                } else {
                    write!(f, "q^({})", qe)?;
                }
            }
            if ae != 0 {
                if !mag.is_one() || !qe.is_zero() {
                    write!(f, "*")?;
                }
                if ae == 1 {
                    write!(f, "a")?;
                } else {
                    write!(f, "a^{}", ae)?;
                }
            }
        }
        Ok(())
    }
}

// ---- JSON encoding -------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermRecord {
    qexp: String,
    aexp: i64,
    coef: String,
}

impl Serialize for LaurentQA {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms()
            .map(|(qe, ae, c)| TermRecord { qexp: qe.to_string(), aexp: ae, coef: c.to_string() })
            .collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentQA {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut terms = Vec::with_capacity(records.len());
        for r in records {
            let qe: Ratio<i64> = r.qexp.parse().map_err(|_| D::Error::custom(format!("bad qexp {:?}", r.qexp)))?;
            let c: Rational = r.coef.parse().map_err(|_| D::Error::custom(format!("bad coef {:?}", r.coef)))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in encoding"));
            }
            terms.push((qe, r.aexp, c));
        }
        Ok(LaurentQA::from_terms(terms))
    }
}

pub(crate) mod rational_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) mod ratio_i64_str {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Converts a small integer coefficient to `i64` when it fits.
pub fn rational_to_i64(c: &Rational) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}
