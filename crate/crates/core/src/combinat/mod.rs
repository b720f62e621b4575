//! Partitions, symmetric-group characters, Littlewood–Richardson coefficients
//! and plethystic bookkeeping.

mod character;
mod lr;
pub mod oracle;
mod partition;
mod plethysm;

pub use character::character;
pub use lr::{lr_coeff, lr_product};
pub use oracle::{character_oracle, schur_product_expansion};
pub use partition::{parity_identity_holds, partitions_of, partitions_up_to, subpartitions, Partition};
pub use plethysm::{
    is_prime, mobius, partition_divisors, partition_quotient, ppartitions_of, theta, PPartition,
};
