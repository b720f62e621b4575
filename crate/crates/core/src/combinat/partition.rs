use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its non-increasing positive parts.
///
/// Ordering is by weight first, then lexicographic on the parts, which gives
/// a deterministic enumeration order for every sweep and report.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `2,1`, `(2,1)`, `[2,1]`, or an empty string / `()` for ∅.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Invalid(format!("bad partition part {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Partition {
    /// Validates that the parts are positive and non-increasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not non-increasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(m|n) = (m+1, 1^n)`.
    pub fn hook(m: u32, n: u32) -> Self {
        let mut parts = vec![m + 1];
        parts.extend(std::iter::repeat_n(1, n as usize));
        Partition(parts)
    }

    /// The single row `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Arm and leg `(m|n)` if the partition is a hook.
    pub fn as_hook(&self) -> Option<(u32, u32)> {
        match self.0.split_first() {
            Some((&first, rest)) if rest.iter().all(|&p| p == 1) => Some((first - 1, rest.len() as u32)),
            _ => None,
        }
    }

    pub fn is_hook(&self) -> bool {
        self.as_hook().is_some()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Cells `(i, j)`, 1-based, row by row.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
            .collect()
    }

    /// `cn(x) = j - i` for every cell, in cell order.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().into_iter().map(|(i, j)| j as i64 - i as i64).collect()
    }

    /// `hl(x) = λ_i + λ^∨_j - i - j + 1` for every cell, in cell order.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|(i, j)| self.part(i as usize) + conj.part(j as usize) + 1 - i - j)
            .collect()
    }

    /// `κ_λ = Σ_j λ_j(λ_j - 2j + 1)`.
    pub fn kappa(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &p)| p as i64 * (p as i64 - 2 * (j as i64 + 1) + 1))
            .sum()
    }

    /// Multiplicities `m_j(λ)` as `(j, m_j)` pairs with `m_j > 0`, increasing in `j`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((j, m)) if *j == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `𝔷_λ = Π_j j^{m_j} m_j!`.
    pub fn zmu(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(j, m)| (j as u128).pow(m) * (1..=m as u128).product::<u128>())
            .product()
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// `rλ = (rλ_1, rλ_2, ...)`.
    pub fn scale(&self, r: u32) -> Self {
        assert!(r > 0, "scale factor must be positive");
        Partition(self.0.iter().map(|p| p * r).collect())
    }

    /// Adds a part.
    pub fn with_part(&self, p: u32) -> Self {
        let mut parts = self.0.clone();
        parts.push(p);
        Partition::from_unsorted(parts)
    }

    /// Removes one copy of `p`, if present.
    pub fn without_part(&self, p: u32) -> Option<Self> {
        let idx = self.0.iter().position(|&x| x == p)?;
        let mut parts = self.0.clone();
        parts.remove(idx);
        Some(Partition(parts))
    }

    /// True when `other` fits inside this diagram.
    pub fn contains(&self, other: &Self) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

/// All partitions of `n`, in increasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of weight at most `n`, including ∅.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions contained in `outer`.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &Partition, i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if i >= outer.length() {
            return;
        }
        for p in 1..=max.min(outer.parts()[i]) {
            cur.push(p);
            rec(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 0, u32::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `(-1)^{|λ|} = (-1)^{Σ_x hl(x) + cn(x)}`.
pub fn parity_identity_holds(lambda: &Partition) -> bool {
    let s: i64 = lambda
        .hook_lengths()
        .iter()
        .zip(lambda.contents())
        .map(|(&h, c)| h as i64 + c)
        .sum();
    (s - lambda.weight() as i64).rem_euclid(2) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn basic_data() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2]).contents(), vec![0, 1]);
        let mut h = p(&[2, 1]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(p(&[1]).kappa(), 0);
        assert_eq!(p(&[2]).kappa(), 2);
        assert_eq!(p(&[1, 1]).kappa(), -2);
        assert_eq!(p(&[1]).zmu(), 1);
        assert_eq!(p(&[2, 1]).zmu(), 2);
        assert_eq!(p(&[1, 1, 1]).zmu(), 6);
    }

    #[test]
    fn kappa_antisymmetric() {
        for n in 0..=8 {
            for l in partitions_of(n) {
                assert_eq!(l.kappa(), -l.conjugate().kappa());
                assert_eq!(l.kappa() % 2, 0);
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(3), vec![p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]);
        assert_eq!(subpartitions(&p(&[2, 1])).len(), 5);
    }

    #[test]
    fn parsing_and_json() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn hooks() {
        assert_eq!(Partition::hook(1, 2), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).as_hook(), Some((1, 2)));
        assert_eq!(p(&[2, 2]).as_hook(), None);
    }

    #[test]
    fn parity() {
        for n in 0..=8 {
            for l in partitions_of(n) {
                assert!(parity_identity_holds(&l), "{l}");
            }
        }
    }
}
