//! Exact computation of colored HOMFLY-PT invariants for the unknot family and
//! torus knots, their LMOV integrality data and their `q = 1` / `a = 1`
//! specializations, together with machine checks of the associated
//! integrality, symmetry and character identities.

pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod hecke;
pub mod invariants;
pub mod lmov;
pub mod special;
pub mod suites;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::Verdict;

/// Version tag stamped into reports and cache files.
pub const ENGINE_VERSION: &str = concat!("homfly-core ", env!("CARGO_PKG_VERSION"));
