//! Closed-form colored invariants of the unknot family and torus knots,
//! framing, normalization and the integrality and symmetry verifiers.

mod cache;
mod framed;
mod knot;
mod torus;
mod unknot;
mod verify;

pub use cache::{Flavor, InvariantCache, InvariantKey};
pub use framed::{
    colored_W, framed_H, framed_composite, framed_full_H, framing_factor, meridian_t, normalized_P,
    normalized_colored_P,
};
pub use knot::{FramedKnot, Knot, TorusKnot};
pub use torus::{c_lambda_r, torus_colored_W};
pub use unknot::{unknot_colored, unknot_composite, unknot_full_colored};
pub use verify::{verify_meridian_distinct, verify_strong_integrality, verify_symmetries, verify_torus_swap};
