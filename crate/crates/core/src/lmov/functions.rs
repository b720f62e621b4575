use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::series::{series_exp, series_log, series_log_oracle, PowerSumSeries, SeriesKind};
use crate::combinat::{character, mobius, partition_divisors, partition_quotient, partitions_of, partitions_up_to, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{a_bracket, ring_membership, QFraction, Rational, RingSpec};
use crate::invariants::{framed_H, framed_composite, FramedKnot, Knot};
use crate::verdict::Verdict;

/// Which family of framed invariants feeds the partition function.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesFlavor {
    /// `H_λ(K_τ)`.
    Colored,
    /// `C_ν(K_τ)`, unknot only.
    Composite,
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `H_λ(K_τ) = (-1)^{|λ|τ} a^{-|λ|τ} ℋ_λ(K_τ)`, or the composite analogue.
pub fn framed_series_value(k: &FramedKnot, lambda: &Partition, flavor: SeriesFlavor) -> Result<QFraction> {
    let raw = match flavor {
        SeriesFlavor::Colored => framed_H(k, lambda)?,
        SeriesFlavor::Composite => framed_composite(k, lambda)?,
    };
    let n = lambda.weight() as i64 * k.framing;
    Ok(raw.shift(0, 1, -n).scale_int(sign(n)))
}

/// `Z_μ = Σ_{|λ|=|μ|} χ_λ(μ)/𝔷_μ · H_λ(K_τ)` for `1 ≤ |μ| ≤ D`.
pub fn build_partition_function(k: &FramedKnot, d: u32, flavor: SeriesFlavor) -> Result<PowerSumSeries> {
    if flavor == SeriesFlavor::Composite && k.knot != Knot::Unknot {
        return Err(Error::UnsupportedFlavor(format!("composite series need the unknot, got {}", k.knot)));
    }
    let colors: Vec<Partition> = partitions_up_to(d).into_iter().skip(1).collect();
    let values: Vec<(Partition, QFraction)> = colors
        .into_par_iter()
        .map(|l| framed_series_value(k, &l, flavor).map(|v| (l, v)))
        .collect::<Result<_>>()?;
    let mut z = PowerSumSeries::new(SeriesKind::Z, d);
    for mu in partitions_up_to(d).into_iter().skip(1) {
        let zmu = Rational::new(1.into(), mu.zmu().into());
        let terms: Vec<QFraction> = values
            .iter()
            .filter(|(l, _)| l.weight() == mu.weight())
            .filter_map(|(l, h)| {
                let chi = character(l, &mu);
                (chi != 0).then(|| h.scale_int(chi))
            })
            .collect();
        z.set(mu, QFraction::sum(&terms).scale(&zmu));
    }
    Ok(z)
}

/// `Σ_{d|μ} (μ̈(d)/d) F_{μ/d}(q^d, a^d)`.
fn mobius_adams(mu: &Partition, f: &PowerSumSeries) -> QFraction {
    let terms: Vec<QFraction> = partition_divisors(mu)
        .into_iter()
        .filter(|&d| mobius(d) != 0)
        .map(|d| {
            let inner = partition_quotient(mu, d).expect("d divides every part");
            f.get(&inner).adams(d).scale(&Rational::new(mobius(d).into(), (d as i64).into()))
        })
        .collect();
    QFraction::sum(&terms)
}

/// `{μ} = Π_j {μ_j}` as a divisor.
fn div_brackets(x: QFraction, mu: &Partition) -> Result<QFraction> {
    mu.parts().iter().try_fold(x, |acc, &m| acc.div_bracket(m as i64))
}

/// `f_λ = Σ_{|μ|=|λ|} χ_λ(μ) Σ_{d|μ} (μ̈(d)/d) F_{μ/d}(q^d, a^d)`.
pub fn lmov_f(lambda: &Partition, f: &PowerSumSeries) -> QFraction {
    let terms: Vec<QFraction> = partitions_of(lambda.weight())
        .into_iter()
        .filter_map(|mu| {
            let chi = character(lambda, &mu);
            (chi != 0).then(|| mobius_adams(&mu, f).scale_int(chi))
        })
        .collect();
    QFraction::sum(&terms)
}

/// `g_μ = (𝔷_μ / {μ}) Σ_{d|μ} (μ̈(d)/d) F_{μ/d}(q^d, a^d)`.
pub fn lmov_g(mu: &Partition, f: &PowerSumSeries) -> Result<QFraction> {
    let zmu = Rational::from_integer(mu.zmu().into());
    div_brackets(mobius_adams(mu, f).scale(&zmu), mu)
}

/// `g_μ = {μ}^{-1} Σ_λ χ_λ(μ) f_λ`.
pub fn lmov_g_from_f(mu: &Partition, f: &PowerSumSeries) -> Result<QFraction> {
    let terms: Vec<QFraction> = partitions_of(mu.weight())
        .into_iter()
        .filter_map(|l| {
            let chi = character(&l, mu);
            (chi != 0).then(|| lmov_f(&l, f).scale_int(chi))
        })
        .collect();
    div_brackets(QFraction::sum(&terms), mu)
}

/// `g̃_μ = g_μ / (a - a^{-1})`.
pub fn lmov_g_tilde(mu: &Partition, f: &PowerSumSeries) -> Result<QFraction> {
    lmov_g(mu, f)?.exact_div_laurent(&a_bracket())
}

/// `ε = (|μ| - 1) mod 2`.
pub fn refined_epsilon(mu: &Partition) -> u8 {
    ((mu.weight() as i64 - 1).rem_euclid(2)) as u8
}

/// Partition function and F-invariants of one framed knot, built once.
#[derive(Clone, Debug)]
pub struct LmovPipeline {
    pub knot: FramedKnot,
    pub flavor: SeriesFlavor,
    pub z: PowerSumSeries,
    pub f: PowerSumSeries,
}

impl LmovPipeline {
    pub fn new(knot: FramedKnot, d: u32, flavor: SeriesFlavor) -> Result<Self> {
        let z = build_partition_function(&knot, d, flavor)?;
        let f = series_log(&z);
        Ok(LmovPipeline { knot, flavor, z, f })
    }

    pub fn truncation(&self) -> u32 {
        self.z.truncation()
    }

    fn instance(&self, mu: &Partition) -> String {
        match self.flavor {
            SeriesFlavor::Colored => format!("{}, μ={mu}", self.knot),
            SeriesFlavor::Composite => format!("{} composite, μ={mu}", self.knot),
        }
    }

    fn in_window(&self, mu: &Partition) -> Result<()> {
        if mu.is_empty() || mu.weight() > self.truncation() {
            return Err(Error::Invalid(format!("μ={mu} outside the window 1..={}", self.truncation())));
        }
        Ok(())
    }

    pub fn g_tilde(&self, mu: &Partition) -> Result<QFraction> {
        self.in_window(mu)?;
        lmov_g_tilde(mu, &self.f)
    }

    /// `g̃_μ ∈ z^{-2} a^ε ℤ[z², a^{±2}]` with the integer table `Ñ_{μ,g,Q}`.
    pub fn refined(&self, mu: &Partition) -> Verdict {
        let inst = self.instance(mu);
        match self.g_tilde(mu) {
            Ok(g) => ring_membership(g, RingSpec::ZsqA { epsilon: refined_epsilon(mu), pole: 1 })
                .relabel("refined-lmov", inst),
            Err(e) => Verdict::from_error("refined-lmov", inst, &e),
        }
    }

    /// Θ-logarithm against the power-series logarithm, and `exp(log Z) = Z`.
    pub fn log_oracle_check(&self) -> Verdict {
        let inst = format!("{}, D={}", self.knot, self.truncation());
        let oracle = series_log_oracle(&self.z);
        if let Some(mu) = self.f.first_difference(&oracle) {
            return Verdict::fail("log-oracle", inst, format!("F and log Z differ at μ={mu}"));
        }
        let back = series_exp(&self.f);
        if let Some(mu) = back.first_difference(&self.z) {
            return Verdict::fail("log-oracle", inst, format!("exp(F) and Z differ at μ={mu}"));
        }
        Verdict::pass("log-oracle", inst)
    }

    /// `g_μ` from `F` directly equals `g_μ` through `f_λ`.
    pub fn g_routes_check(&self, mu: &Partition) -> Verdict {
        let inst = self.instance(mu);
        let run = || -> Result<bool> { Ok(lmov_g(mu, &self.f)? == lmov_g_from_f(mu, &self.f)?) };
        match run() {
            Ok(ok) => Verdict::from_bool("g-routes", inst, ok, "the two g_μ routes disagree"),
            Err(e) => Verdict::from_error("g-routes", inst, &e),
        }
    }

    /// `g̃_μ(q,-a) = (-1)^{|μ|-1} g̃_μ`, `g̃_μ(-q,a) = g̃_μ`, `g̃_μ(q^{-1},a) = g̃_μ`.
    pub fn g_tilde_symmetry_check(&self, mu: &Partition) -> Verdict {
        let inst = self.instance(mu);
        let run = || -> Result<Option<&'static str>> {
            let g = self.g_tilde(mu)?;
            if g.substitute_sign(false, true)? != g.scale_int(sign(mu.weight() as i64 - 1)) {
                return Ok(Some("a ↦ -a"));
            }
            if g.substitute_sign(true, false)? != g {
                return Ok(Some("q ↦ -q"));
            }
            if g.invert_q()? != g {
                return Ok(Some("q ↦ q^-1"));
            }
            Ok(None)
        };
        match run() {
            Ok(None) => Verdict::pass("g-tilde-symmetry", inst),
            Ok(Some(w)) => Verdict::fail("g-tilde-symmetry", inst, format!("{w} identity fails")),
            Err(e) => Verdict::from_error("g-tilde-symmetry", inst, &e),
        }
    }
}

/// Builds the pipeline for `K` and checks `g̃_μ`.
pub fn check_refined_lmov(k: &FramedKnot, mu: &Partition, d: u32) -> Verdict {
    match LmovPipeline::new(*k, d, SeriesFlavor::Colored) {
        Ok(p) => p.refined(mu),
        Err(e) => Verdict::from_error("refined-lmov", format!("{k}, μ={mu}"), &e),
    }
}

/// Unframed unknot: `g̃_{(1)} = z^{-2}` and `g̃_μ = 0` for `2 ≤ |μ| ≤ D`.
pub fn unknot_gtilde_check(d: u32) -> Verdict {
    let inst = format!("unknot (τ=0), D={d}");
    let run = || -> Result<Option<String>> {
        let pipeline = LmovPipeline::new(FramedKnot::unknot(0), d, SeriesFlavor::Colored)?;
        for mu in partitions_up_to(d).into_iter().skip(1) {
            let g = pipeline.g_tilde(&mu)?;
            let expect = if mu.weight() == 1 { z_inv_sq() } else { QFraction::zero() };
            if g != expect {
                return Ok(Some(format!("g̃_{mu} = {g}, expected {expect}")));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => Verdict::pass("unknot-gtilde", inst),
        Ok(Some(why)) => Verdict::fail("unknot-gtilde", inst, why),
        Err(e) => Verdict::from_error("unknot-gtilde", inst, &e),
    }
}

/// `z^{-2}` as a fraction.
pub fn z_inv_sq() -> QFraction {
    QFraction::one().div_bracket(1).and_then(|x| x.div_bracket(1)).expect("{1} ≠ 0")
}
