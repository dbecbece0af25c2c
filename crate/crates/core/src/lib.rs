//! Generalized Hermite polynomials, generalized Gamma functions and
//! elliptic-type integrals.
//!
//! The crate evaluates integrals of negative powers of polynomials,
//! `∫ (1 + b x + a x^m)^{−ν} dx` over the full line, the half line and
//! finite intervals, together with the cubic hyper-elliptic family, through
//! series in Gould–Hopper polynomials `H_n^(m)` and the generalized Gamma
//! functions `Γ(x₁, x_m | ν; m)`. Every series is paired with an
//! independent quadrature or power-series route in [`oracles`].
//!
//! ## Modules
//!
//! * [`hermite`]: `H_n^(m)`, its generating function and the Gamma-weighted `H̃_n^(2)`
//! * [`qpoly`]: `Q_n(a, b | ν, m)`, the Taylor series of `(1 + b x + a x^m)^{−ν}`
//!   and the incomplete integral
//! * [`gengamma`]: two- and three-variable generalized Gamma functions and
//!   generalized Hermite functions
//! * [`integrals`]: closed forms, umbral and hyper-elliptic series, and the
//!   peak (Laplace-type) approximation
//! * [`oracles`]: double-exponential quadrature and truncated power series
//! * [`cli`]: record formatting and parameter sweeps behind the `hermell` binary

// `!(x > 0.0)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod gengamma;
pub mod hermite;
pub mod integrals;
pub mod oracles;
pub mod qpoly;
pub mod report;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use report::{EvalReport, Method};
pub use series::SeriesValue;

/// Default requested tolerance for series and quadrature.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Switches between the series route and the quadrature route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    /// Series first, quadrature when the series is unreliable.
    #[default]
    Auto,
    Series,
    Quadrature,
}

/// Knobs shared by the evaluation routines that can take either route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub tol: f64,
    pub max_terms: usize,
    pub method: MethodChoice,
    /// Fall back to quadrature when `|x₁| / x_m^{1/m}` exceeds this.
    pub fallback_ratio: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: DEFAULT_TOL,
            max_terms: series::DEFAULT_MAX_TERMS,
            method: MethodChoice::Auto,
            fallback_ratio: 8.0,
        }
    }
}

impl EvalOptions {
    pub fn with_tol(tol: f64) -> Self {
        EvalOptions {
            tol,
            ..Default::default()
        }
    }

    pub(crate) fn policy(&self) -> series::SeriesPolicy {
        series::SeriesPolicy::new(self.tol, self.max_terms)
    }
}
