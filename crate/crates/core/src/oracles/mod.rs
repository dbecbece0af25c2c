//! Verification routes that share no code with the series modules.
//!
//! [`quad`] integrates the defining integrals directly; [`trunc_series`]
//! produces Taylor coefficients by explicit power-series composition.

pub mod quad;
pub mod trunc_series;

pub use quad::{quad_finite, quad_full_line, quad_half_line, QuadResult};
pub use trunc_series::{series_pow_binomial, TruncSeries, DEFAULT_ORDER};
