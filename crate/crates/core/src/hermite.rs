//! Gould–Hopper generalized Hermite polynomials
//!
//! `H_n^(m)(x, y) = n! Σ_{r=0}^{⌊n/m⌋} x^{n−mr} y^r / ((n−mr)! r!)`,
//! generated by `exp(x t + y t^m)`, plus the Gamma-weighted `H̃_n^(2)`
//! that appears in the cubic hyper-elliptic series.

use crate::error::{Error, Result};
use crate::series::{self, NeumaierSum, SeriesValue};
use crate::special;

/// Highest supported polynomial degree.
pub const MAX_DEGREE: usize = 300;

/// Degree `n` and superscript order `m` of `H_n^(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyIndex {
    n: usize,
    m: usize,
}

impl PolyIndex {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("hermite_gh", "order m must be at least 1"));
        }
        if n > MAX_DEGREE {
            return Err(Error::range(
                "hermite_gh",
                format!("degree {n} exceeds the supported maximum {MAX_DEGREE}"),
            ));
        }
        Ok(PolyIndex { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Last summation index `⌊n/m⌋`.
    pub fn last_r(&self) -> usize {
        self.n / self.m
    }
}

/// `H_n^(m)(x, y)`.
///
/// The factorial ratio `n!/((n−mr)! r!)` is carried as a running multiplier,
/// so no factorial is ever formed on its own.
pub fn hermite_gh(idx: PolyIndex, x: f64, y: f64) -> f64 {
    let PolyIndex { n, m } = idx;
    let mut acc = NeumaierSum::new();
    let mut mult = 1.0f64;
    for r in 0..=idx.last_r() {
        if r > 0 {
            // n!/((n−mr)! r!) from n!/((n−m(r−1))! (r−1)!)
            let top = n - m * (r - 1);
            for j in 0..m {
                mult *= (top - j) as f64;
            }
            mult /= r as f64;
        }
        acc.add(mult * x.powi((n - m * r) as i32) * y.powi(r as i32));
    }
    acc.value()
}

/// `H_n^(m)(x, y) / n!`, i.e. the `t^n` coefficient of `exp(x t + y t^m)`.
///
/// Works in log-magnitude form so it stays finite well past `n = 170`.
pub fn hermite_gh_coefficient(idx: PolyIndex, x: f64, y: f64) -> f64 {
    let PolyIndex { n, m } = idx;
    let (lx, sx) = series::ln_abs(x);
    let (ly, sy) = series::ln_abs(y);
    let mut acc = NeumaierSum::new();
    for r in 0..=idx.last_r() {
        let k = n - m * r;
        let sign = series::pow_sign(sx, k) * series::pow_sign(sy, r);
        let ln_mag = series::pow_ln(lx, k) + series::pow_ln(ly, r)
            - special::ln_factorial(k)
            - special::ln_factorial(r);
        acc.add(series::from_log(sign, ln_mag));
    }
    acc.value()
}

/// Partial sum `Σ_{n=0}^{N} t^n/n! · H_n^(m)(x, y)` of the generating function.
pub fn hermite_gf_partial(t: f64, x: f64, y: f64, m: usize, last: usize) -> Result<SeriesValue> {
    if m == 0 {
        return Err(Error::domain(
            "hermite_gf_partial",
            "order m must be at least 1",
        ));
    }
    if last >= MAX_DEGREE {
        return Err(Error::range(
            "hermite_gf_partial",
            format!("truncation order {last} leaves no room below degree cap {MAX_DEGREE}"),
        ));
    }
    let term = |n: usize| {
        let idx = PolyIndex { n, m };
        t.powi(n as i32) * hermite_gh_coefficient(idx, x, y)
    };
    Ok(series::partial_sum(last, crate::DEFAULT_TOL, term))
}

/// Gamma-weighted polynomial
/// `H̃_n^(2)(x, y) = n! Σ_{r=0}^{⌊n/2⌋} x^{n−2r} y^r / ((n−2r)! r!) · Γ((2n + 3(ν−r) − 1)/3)`.
pub fn hermite_weighted(n: usize, x: f64, y: f64, nu: f64) -> Result<f64> {
    let idx = PolyIndex::new(n, 2)?;
    let mut acc = NeumaierSum::new();
    let mut mult = 1.0f64;
    for r in 0..=idx.last_r() {
        let arg = weighted_gamma_arg(n, r, nu);
        if special::is_gamma_pole(arg) {
            return Err(Error::Pole {
                op: "hermite_weighted",
                r,
                arg,
            });
        }
        if r > 0 {
            let top = n - 2 * (r - 1);
            mult *= (top * (top - 1)) as f64 / r as f64;
        }
        acc.add(mult * x.powi((n - 2 * r) as i32) * y.powi(r as i32) * special::gamma(arg));
    }
    Ok(acc.value())
}

/// Gamma argument `(2n + 3(ν − r) − 1)/3` of the weighted polynomial.
#[inline]
pub(crate) fn weighted_gamma_arg(n: usize, r: usize, nu: f64) -> f64 {
    (2.0 * n as f64 + 3.0 * (nu - r as f64) - 1.0) / 3.0
}
