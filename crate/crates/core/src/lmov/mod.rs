//! Plethystic LMOV pipeline: partition functions in power-sum coordinates,
//! F-invariants, LMOV functions and their integrality verifiers.

mod functions;
mod series;
mod special;

pub use functions::{
    build_partition_function, check_refined_lmov, framed_series_value, lmov_f, lmov_g, lmov_g_from_f,
    lmov_g_tilde, refined_epsilon, unknot_gtilde_check, z_inv_sq, LmovPipeline, SeriesFlavor,
};
pub use series::{series_exp, series_log, series_log_oracle, PowerSumSeries, SeriesKind};
pub use special::{check_prime_special, check_special_lmov, prime_special_gtilde, special_lmov, SpecialSeries};
