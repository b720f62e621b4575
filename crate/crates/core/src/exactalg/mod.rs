//! Exact arithmetic in `q` and `a`.

mod fraction;
mod laurent;
mod ring;

pub use fraction::{cyclotomic, QFraction};
pub use laurent::{
    a_bracket, exact_div, quantum_bracket, quantum_int, rational_to_i64, z, LaurentQA, Monomial,
    Rational,
};
pub use ring::{ring_membership, RingSpec, ZARewrite};
