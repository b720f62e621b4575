use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{quantum_bracket, LaurentQA};
use crate::invariants::{normalized_colored_P, Knot, TorusKnot};
use crate::verdict::Verdict;

/// A Laurent polynomial in `q` alone, invariant under `q ↦ q^{-1}` and `q ↦ -q`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlexanderPoly(LaurentQA);

impl AlexanderPoly {
    pub fn new(value: LaurentQA) -> Result<Self> {
        if !value.is_q_only() {
            return Err(Error::Invalid(format!("Alexander polynomial depends on a: {value}")));
        }
        if value.invert_q() != value || value.substitute_sign(true, false)? != value {
            return Err(Error::Invalid(format!("Alexander polynomial is not a polynomial in z²: {value}")));
        }
        Ok(AlexanderPoly(value))
    }

    pub fn value(&self) -> &LaurentQA {
        &self.0
    }

    /// `A(q^d)`.
    pub fn adams(&self, d: u32) -> Self {
        AlexanderPoly(self.0.adams_q(d))
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `A_λ(K; q)`: the normalized colored invariant at `a = 1`.
pub fn colored_alexander(knot: Knot, lambda: &Partition) -> Result<AlexanderPoly> {
    AlexanderPoly::new(normalized_colored_P(knot, lambda)?.eval_a1()?)
}

/// `{d}{drs} / ({dr}{ds})` with `d = m + n + 1`.
pub fn torus_alexander_closed(r: u32, s: u32, m: u32, n: u32) -> Result<AlexanderPoly> {
    if num_integer::gcd(r, s) != 1 || r == 0 || s == 0 {
        return Err(Error::Invalid(format!("torus parameters ({r},{s}) must be positive and coprime")));
    }
    let d = (m + n + 1) as i64;
    let (r, s) = (r as i64, s as i64);
    let num = &quantum_bracket(d) * &quantum_bracket(d * r * s);
    let den = &quantum_bracket(d * r) * &quantum_bracket(d * s);
    AlexanderPoly::new(num.exact_div(&den)?)
}

/// `A(K; q)`, the classical Alexander polynomial.
pub fn alexander(knot: Knot) -> Result<AlexanderPoly> {
    match knot {
        Knot::Unknot => AlexanderPoly::new(LaurentQA::one()),
        Knot::Torus(t) => torus_alexander_closed(t.r(), t.s(), 0, 0),
    }
}

/// For every hook `(m|n)` of weight `d`, the colored Alexander polynomial
/// equals the closed form and `A(T; q^d)`.
pub fn hook_conjecture_check(t: TorusKnot, d: u32) -> Verdict {
    let inst = format!("{t}, d={d}");
    let run = || -> Result<Option<String>> {
        let target = alexander(Knot::Torus(t))?.adams(d);
        for n in 0..d {
            let m = d - 1 - n;
            let hook = Partition::hook(m, n);
            let colored = colored_alexander(Knot::Torus(t), &hook)?;
            let closed = torus_alexander_closed(t.r(), t.s(), m, n)?;
            if colored != target || closed != target {
                return Ok(Some(format!("λ={hook}: A_λ = {colored}, closed = {closed}, A(q^{d}) = {target}")));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => Verdict::pass("hook-alexander", inst),
        Ok(Some(why)) => Verdict::fail("hook-alexander", inst, why),
        Err(e) => Verdict::from_error("hook-alexander", inst, &e),
    }
}
