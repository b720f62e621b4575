use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The torus knot `T_{r,s}`, the closure of `(σ_1 ⋯ σ_{r-1})^s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawTorus")]
pub struct TorusKnot {
    r: u32,
    s: u32,
}

#[derive(Deserialize)]
struct RawTorus {
    r: u32,
    s: u32,
}

impl TryFrom<RawTorus> for TorusKnot {
    type Error = Error;
    fn try_from(raw: RawTorus) -> Result<Self> {
        TorusKnot::new(raw.r, raw.s)
    }
}

impl TorusKnot {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r < 2 || s < 1 {
            return Err(Error::Invalid(format!("torus knot needs r ≥ 2, s ≥ 1, got ({r},{s})")));
        }
        if r.gcd(&s) != 1 {
            return Err(Error::Invalid(format!("torus knot needs gcd(r,s) = 1, got ({r},{s})")));
        }
        Ok(TorusKnot { r, s })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Writhe `s(r-1)` of the standard braid closure.
    pub fn writhe(&self) -> i64 {
        self.s as i64 * (self.r as i64 - 1)
    }

    /// `T_{s,r}`, the same knot as the closure of an `s`-strand braid.
    pub fn swapped(&self) -> Result<Self> {
        TorusKnot::new(self.s, self.r)
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "torus:{},{}", self.r, self.s)
    }
}

/// A knot from one of the computable families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Knot {
    Unknot,
    Torus(TorusKnot),
}

impl Knot {
    pub fn torus(r: u32, s: u32) -> Result<Self> {
        Ok(Knot::Torus(TorusKnot::new(r, s)?))
    }

    /// Writhe of the standard diagram.
    pub fn writhe(&self) -> i64 {
        match self {
            Knot::Unknot => 0,
            Knot::Torus(t) => t.writhe(),
        }
    }
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Knot::Unknot => write!(f, "unknot"),
            Knot::Torus(t) => t.fmt(f),
        }
    }
}

impl FromStr for Knot {
    type Err = Error;
    /// Accepts `unknot` and `torus:r,s`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("unknot") {
            return Ok(Knot::Unknot);
        }
        let bad = || Error::Invalid(format!("knot `{s}` is not `unknot` or `torus:r,s`"));
        let rest = s.strip_prefix("torus:").ok_or_else(bad)?;
        let (r, t) = rest.split_once(',').ok_or_else(bad)?;
        let r = r.trim().parse().map_err(|_| bad())?;
        let t = t.trim().parse().map_err(|_| bad())?;
        Knot::torus(r, t)
    }
}

/// A knot together with a framing `τ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FramedKnot {
    pub knot: Knot,
    pub framing: i64,
}

impl FramedKnot {
    pub fn new(knot: Knot, framing: i64) -> Self {
        FramedKnot { knot, framing }
    }

    /// The knot framed by the writhe of its standard diagram.
    pub fn diagram(knot: Knot) -> Self {
        FramedKnot { knot, framing: knot.writhe() }
    }

    pub fn unknot(framing: i64) -> Self {
        FramedKnot { knot: Knot::Unknot, framing }
    }
}

impl fmt::Display for FramedKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (τ={})", self.knot, self.framing)
    }
}
