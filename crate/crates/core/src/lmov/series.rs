use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combinat::{partitions_up_to, ppartitions_of, theta, Partition};
use crate::exactalg::{QFraction, Rational};

/// Provenance of a [`PowerSumSeries`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SeriesKind {
    /// A partition function `Z = 1 + Σ Z_μ p_μ`; the constant 1 is implicit.
    Z,
    /// `log Z` computed by the power-series logarithm.
    LogZ,
    /// F-invariants `log Z = Σ F_μ p_μ` computed from 𝒫-partitions.
    F,
}

/// A truncated series `Σ_{1 ≤ |μ| ≤ D} c_μ p_μ` in power-sum coordinates.
///
/// Only nonzero coefficients are stored, so equal series compare equal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PowerSumSeries {
    kind: SeriesKind,
    truncation: u32,
    coeffs: BTreeMap<Partition, QFraction>,
}

impl PowerSumSeries {
    pub fn new(kind: SeriesKind, truncation: u32) -> Self {
        PowerSumSeries { kind, truncation, coeffs: BTreeMap::new() }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn with_kind(mut self, kind: SeriesKind) -> Self {
        self.kind = kind;
        self
    }

    /// Coefficient of `p_μ`; zero outside the window.
    pub fn get(&self, mu: &Partition) -> QFraction {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    /// Sets the coefficient of `p_μ`; weights outside `1..=D` are dropped.
    pub fn set(&mut self, mu: Partition, c: QFraction) {
        if mu.is_empty() || mu.weight() > self.truncation {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&mu);
        } else {
            self.coeffs.insert(mu, c);
        }
    }

    fn add_to(&mut self, mu: Partition, c: &QFraction) {
        let cur = self.get(&mu);
        self.set(mu, &cur + c);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &QFraction)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same coefficients, ignoring the provenance tag.
    pub fn same_coefficients(&self, other: &Self) -> bool {
        self.truncation == other.truncation && self.coeffs == other.coeffs
    }

    /// First `μ` where the coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<Partition> {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .find(|mu| self.get(mu) != other.get(mu))
            .cloned()
    }

    /// Truncated product using `p_μ p_ν = p_{μ∪ν}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new(self.kind, self.truncation.min(other.truncation));
        for (m, a) in &self.coeffs {
            for (n, b) in &other.coeffs {
                if m.weight() + n.weight() <= out.truncation {
                    out.add_to(m.union(n), &(a * b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_to(mu.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new(self.kind, self.truncation);
        for (mu, v) in &self.coeffs {
            out.set(mu.clone(), v.scale(c));
        }
        out
    }
}

impl fmt::Display for PowerSumSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, c) in &self.coeffs {
            writeln!(f, "p{mu}: {c}")?;
        }
        Ok(())
    }
}

/// `F_μ = Σ_{|Λ| = μ} Θ_Λ Π_{B ∈ Λ} Z_B`.
pub fn series_log(z: &PowerSumSeries) -> PowerSumSeries {
    let mut out = PowerSumSeries::new(SeriesKind::F, z.truncation);
    for mu in partitions_up_to(z.truncation).into_iter().skip(1) {
        let mut terms = Vec::new();
        for big in ppartitions_of(&mu) {
            let mut prod = QFraction::one();
            for b in big.blocks() {
                prod = &prod * &z.get(b);
                if prod.is_zero() {
                    break;
                }
            }
            if !prod.is_zero() {
                terms.push(prod.scale(&theta(&big)));
            }
        }
        out.set(mu, QFraction::sum(&terms));
    }
    out
}

/// `log(1 + u) = Σ_k (-1)^{k+1} u^k / k` on the truncated series.
pub fn series_log_oracle(z: &PowerSumSeries) -> PowerSumSeries {
    let d = z.truncation;
    let u = z.clone().with_kind(SeriesKind::LogZ);
    let mut out = PowerSumSeries::new(SeriesKind::LogZ, d);
    let mut power = u.clone();
    for k in 1..=d as i64 {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&Rational::new(sign.into(), k.into())));
        power = power.mul(&u);
        if power.is_empty() {
            break;
        }
    }
    out
}

/// `exp(F) - 1` on the truncated series.
pub fn series_exp(f: &PowerSumSeries) -> PowerSumSeries {
    let d = f.truncation;
    let mut out = PowerSumSeries::new(SeriesKind::Z, d);
    let mut power = f.clone().with_kind(SeriesKind::Z);
    let mut fact = Rational::one();
    for k in 1..=d as i64 {
        fact *= Rational::from_integer(k.into());
        out = out.add(&power.scale(&fact.recip()));
        power = power.mul(f);
        if power.is_empty() {
            break;
        }
    }
    out
}
