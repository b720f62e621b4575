//! Bookkeeping for plethystic logarithms: 𝒫-partitions, Θ weights, Möbius.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// A multiset of nonempty partitions, stored sorted non-increasingly.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PPartition {
    blocks: Vec<Partition>,
}

impl PPartition {
    pub fn new(mut blocks: Vec<Partition>) -> Result<Self> {
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::Invalid("𝒫-partition blocks must be nonempty".into()));
        }
        blocks.sort_by(|a, b| b.cmp(a));
        Ok(PPartition { blocks })
    }

    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    pub fn length(&self) -> usize {
        self.blocks.len()
    }

    /// Union of all blocks.
    pub fn support(&self) -> Partition {
        self.blocks.iter().fold(Partition::empty(), |acc, b| acc.union(b))
    }

    /// `|Aut(Λ)| = Π m!` over multiplicities of equal blocks.
    pub fn automorphisms(&self) -> BigInt {
        let mut out = BigInt::from(1);
        let mut run = 0u32;
        for (i, b) in self.blocks.iter().enumerate() {
            run = if i > 0 && &self.blocks[i - 1] == b { run + 1 } else { 1 };
            out *= run;
        }
        out
    }
}

impl fmt::Display for PPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `Θ_Λ = (-1)^{l-1} (l-1)! / |Aut Λ|`.
pub fn theta(big_lambda: &PPartition) -> Rational {
    let l = big_lambda.length();
    if l == 0 {
        return Rational::from_integer(0.into());
    }
    let fact: BigInt = (1..l).map(BigInt::from).product();
    let sign = if (l - 1).is_multiple_of(2) { 1 } else { -1 };
    Rational::new(fact * sign, big_lambda.automorphisms())
}

// Sub-multisets of `mu` (as multiplicity vectors over its distinct parts).
fn sub_multisets(mu: &Partition) -> Vec<Partition> {
    let mult = mu.multiplicities();
    let mut out = vec![Vec::new()];
    for (part, m) in mult {
        let mut next = Vec::new();
        for base in &out {
            for k in 0..=m {
                let mut v: Vec<u32> = base.clone();
                v.extend(std::iter::repeat_n(part, k as usize));
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Partition::from_unsorted).filter(|p| !p.is_empty()).collect()
}

fn remove_multiset(mu: &Partition, sub: &Partition) -> Partition {
    let mut rest = mu.clone();
    for &p in sub.parts() {
        rest = rest.without_part(p).expect("sub-multiset");
    }
    rest
}

/// All 𝒫-partitions `Λ` with `|Λ| = μ`, in canonical order.
pub fn ppartitions_of(mu: &Partition) -> Vec<PPartition> {
    fn rec(rest: &Partition, bound: Option<&Partition>, cur: &mut Vec<Partition>, out: &mut Vec<PPartition>) {
        if rest.is_empty() {
            out.push(PPartition { blocks: cur.clone() });
            return;
        }
        for b in sub_multisets(rest) {
            if bound.map(|x| &b > x).unwrap_or(false) {
                continue;
            }
            let next = remove_multiset(rest, &b);
            cur.push(b.clone());
            rec(&next, Some(&b), cur, out);
            cur.pop();
        }
    }
    if mu.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(mu, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The Möbius function.
pub fn mobius(d: u32) -> i64 {
    assert!(d >= 1, "Möbius function needs a positive argument");
    let mut n = d;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// All `d ≥ 1` dividing every part of `μ`.
pub fn partition_divisors(mu: &Partition) -> Vec<u32> {
    let g = mu.parts().iter().fold(0u32, |acc, &p| acc.gcd(&p));
    if g == 0 {
        return vec![1];
    }
    (1..=g).filter(|d| g % d == 0).collect()
}

/// `μ/d`, dividing every part by `d`.
pub fn partition_quotient(mu: &Partition, d: u32) -> Result<Partition> {
    if d == 0 || mu.parts().iter().any(|p| p % d != 0) {
        return Err(Error::NotDivisor { d, partition: mu.to_string() });
    }
    Ok(Partition::from_unsorted(mu.parts().iter().map(|p| p / d).collect()))
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
