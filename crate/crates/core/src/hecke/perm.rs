use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored 0-based as its one-line images.
///
/// As a braid, `π` sends the strand starting at position `i` to position
/// `π(i)`. Composition follows stacking: `x.then(y)` is `x` on top of `y`,
/// i.e. `i ↦ y(x(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        Perm(images)
    }

    /// The simple transposition `s_i` swapping `i` and `i+1` (1-based `i`).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "simple transposition out of range");
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based image of 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `i ↦ other(self(i))`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "permutation sizes differ");
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Swaps the images at positions `i`, `i+1` (0-based), i.e. `s_{i+1}.then(self)`.
    pub(crate) fn swap_positions(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Perm(v)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// A reduced word `[i_1, …, i_k]` (1-based) with
    /// `self = s_{i_1}.then(s_{i_2})…then(s_{i_k})`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = self.clone();
        while let Some(i) = (0..cur.n().saturating_sub(1)).find(|&i| cur.0[i] > cur.0[i + 1]) {
            word.push(i + 1);
            cur = cur.swap_positions(i);
        }
        word
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// Block sum: `self` on the first strands, `other` on the following ones.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let k = self.n() as u8;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + k));
        Perm(v)
    }
}

/// All of `S_n`, in lexicographic order of one-line notation.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(n: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(Perm(cur.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x as u8);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn perm_length(p: &Perm) -> usize {
    p.length()
}

pub fn cycle_type(p: &Perm) -> Partition {
    p.cycle_type()
}

/// `l(π) + l(c(π)) ≡ n (mod 2)`.
pub fn symmgroup_parity_holds(p: &Perm) -> bool {
    (p.length() + p.cycle_type().length() + p.n()).is_multiple_of(2)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_images(&v).map_err(serde::de::Error::custom)
    }
}
