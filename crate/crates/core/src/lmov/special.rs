use super::functions::{build_partition_function, lmov_g_tilde, SeriesFlavor};
use super::series::series_log;
use crate::combinat::{is_prime, mobius, partitions_of, theta, PPartition, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{a_bracket, ring_membership, z, LaurentQA, QFraction, Rational, RingSpec};
use crate::invariants::{framed_H, FramedKnot};
use crate::verdict::Verdict;

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One-variable series `𝒵 = 1 + Σ_r S_r x^r` with `S_r = H_{(r)}(K_τ)`,
/// its plain logarithm `ℱ` and the special LMOV functions `𝔣_n`.
#[derive(Clone, Debug)]
pub struct SpecialSeries {
    pub knot: FramedKnot,
    /// `S_1..=S_D`, index `r - 1`.
    pub s: Vec<QFraction>,
    /// `ℱ_1..=ℱ_D`, index `r - 1`.
    pub log: Vec<QFraction>,
}

impl SpecialSeries {
    pub fn new(knot: FramedKnot, d: u32) -> Result<Self> {
        let s = (1..=d)
            .map(|r| {
                let h = framed_H(&knot, &Partition::row(r))?;
                let n = r as i64 * knot.framing;
                Ok(h.shift(0, 1, -n).scale_int(sign(n)))
            })
            .collect::<Result<Vec<_>>>()?;
        // ℱ_m = Σ_{Λ ⊢ m} Θ_Λ Π_i S_{Λ_i}, blocks being single rows.
        let log = (1..=d)
            .map(|m| {
                let terms: Vec<QFraction> = partitions_of(m)
                    .into_iter()
                    .map(|lam| {
                        let blocks = lam.parts().iter().map(|&r| Partition::row(r)).collect();
                        let big = PPartition::new(blocks).expect("rows are nonempty");
                        let prod = lam.parts().iter().fold(QFraction::one(), |acc, &r| &acc * &s[r as usize - 1]);
                        prod.scale(&theta(&big))
                    })
                    .collect();
                QFraction::sum(&terms)
            })
            .collect();
        Ok(SpecialSeries { knot, s, log })
    }

    pub fn truncation(&self) -> u32 {
        self.s.len() as u32
    }

    /// `𝔣_n = Σ_{d|n} (μ̈(d)/d) ℱ_{n/d}(q^d, a^d)`.
    pub fn f(&self, n: u32) -> Result<QFraction> {
        if n == 0 || n > self.truncation() {
            return Err(Error::Invalid(format!("n={n} outside the window 1..={}", self.truncation())));
        }
        let terms: Vec<QFraction> = (1..=n)
            .filter(|d| n.is_multiple_of(*d) && mobius(*d) != 0)
            .map(|d| self.log[(n / d) as usize - 1].adams(d).scale(&Rational::new(mobius(d).into(), (d as i64).into())))
            .collect();
        Ok(QFraction::sum(&terms))
    }

    /// `(q - q^{-1}) 𝔣_n ∈ a^ε ℤ[q^{±1}, a^{±2}]` with `ε = n mod 2`.
    pub fn check(&self, n: u32) -> Verdict {
        let inst = format!("{}, n={n}", self.knot);
        match self.f(n) {
            Ok(f) => ring_membership(f.mul_laurent(&z()), RingSpec::QIntA { epsilon: (n % 2) as u8 })
                .relabel("special-lmov", inst),
            Err(e) => Verdict::from_error("special-lmov", inst, &e),
        }
    }
}

/// `𝔣_n(K_τ)` from a freshly built series of truncation `d`.
pub fn special_lmov(k: &FramedKnot, n: u32, d: u32) -> Result<QFraction> {
    SpecialSeries::new(*k, d)?.f(n)
}

pub fn check_special_lmov(k: &FramedKnot, n: u32) -> Verdict {
    match SpecialSeries::new(*k, n) {
        Ok(s) => s.check(n),
        Err(e) => Verdict::from_error("special-lmov", format!("{k}, n={n}"), &e),
    }
}

/// `g̃_p` from hook data:
/// `(-1)^{pτ} a^{-pτ} [ℋ(K⋆P_p) - (-1)^{(p-1)τ} Ψ_p ℋ_{(1)}(K_τ)] / ((a - a^{-1}) {p})`
/// with `ℋ(K⋆P_p) = Σ_{m+n+1=p} (-1)^n ℋ_{(m|n)}(K_τ)`.
pub fn prime_special_gtilde(k: &FramedKnot, p: u32) -> Result<QFraction> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let mut terms = Vec::new();
    for n in 0..p {
        let hook = Partition::hook(p - 1 - n, n);
        terms.push(framed_H(k, &hook)?.scale_int(sign(n as i64)));
    }
    let tau = k.framing;
    let adams = framed_H(k, &Partition::row(1))?.adams(p);
    terms.push(adams.scale_int(-sign((p as i64 - 1) * tau)));
    let pt = p as i64 * tau;
    QFraction::sum(&terms)
        .mul_laurent(&LaurentQA::a_pow(-pt).scale_int(sign(pt)))
        .div_bracket(p as i64)?
        .exact_div_laurent(&a_bracket())
}

/// `prime_special_gtilde` equals the pipeline's `g̃_{(p)}` and lies in
/// `z^{-2} a^ε ℤ[z², a^{±2}]` with `ε = 1` exactly when `p = 2`.
pub fn check_prime_special(k: &FramedKnot, p: u32) -> Verdict {
    let inst = format!("{k}, p={p}");
    let run = || -> Result<Verdict> {
        let hook_route = prime_special_gtilde(k, p)?;
        let z = build_partition_function(k, p, SeriesFlavor::Colored)?;
        let series_route = lmov_g_tilde(&Partition::row(p), &series_log(&z))?;
        if hook_route != series_route {
            return Ok(Verdict::fail("prime-special", inst.clone(), "hook route and series route disagree"));
        }
        let epsilon = u8::from(p == 2);
        Ok(ring_membership(hook_route, RingSpec::ZsqA { epsilon, pole: 1 }).relabel("prime-special", inst.clone()))
    };
    run().unwrap_or_else(|e| Verdict::from_error("prime-special", inst.clone(), &e))
}
