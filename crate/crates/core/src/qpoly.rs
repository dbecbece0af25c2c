//! Q-polynomials and the Taylor series of `G(a, b; x | ν, m) = (1 + b x + a x^m)^{−ν}`.
//!
//! `Q_n(a, b | ν, m) = (−1)^n n!/Γ(ν) Σ_{r=0}^{⌊n/m⌋} (−1)^{(m−1)r}
//! Γ(n − (m−1)r + ν) b^{n−mr} a^r / ((n−mr)! r!)` so that
//! `G = Σ x^n/n! · Q_n`.
//!
//! Gamma ratios `Γ(k + ν)/Γ(ν)` are always formed as rising factorials.

use crate::error::{Error, Result};
use crate::series::{self, NeumaierSum, SeriesValue};
use crate::EvalOptions;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QPolyParams {
    pub a: f64,
    pub b: f64,
    pub nu: f64,
    pub m: usize,
}

impl QPolyParams {
    pub fn new(a: f64, b: f64, nu: f64, m: usize) -> Result<Self> {
        if !(nu > 0.0) {
            return Err(Error::domain(
                "q_poly",
                format!("ν must be positive, got {nu}"),
            ));
        }
        if m == 0 {
            return Err(Error::domain("q_poly", "m must be at least 1"));
        }
        Ok(QPolyParams { a, b, nu, m })
    }

    /// Region where the series is guaranteed to converge: `|x| < 1`, `|b| ≤ |a|`.
    fn check_series_domain(&self, op: &'static str, x: f64) -> Result<()> {
        if !(x.abs() < 1.0) {
            return Err(Error::domain(
                op,
                format!("series needs |x| < 1, got x = {x}"),
            ));
        }
        if self.b.abs() > self.a.abs() {
            return Err(Error::domain(
                op,
                format!("series needs |b| ≤ |a|, got a = {}, b = {}", self.a, self.b),
            ));
        }
        Ok(())
    }

    /// `G(a, b; x | ν, m)` evaluated directly.
    pub fn integrand(&self, x: f64) -> f64 {
        (1.0 + self.b * x + self.a * x.powi(self.m as i32)).powf(-self.nu)
    }
}

/// Signed summands of `Q_n`, one per `r = 0..=⌊n/m⌋`.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolyCoeffs {
    pub n: usize,
    pub coeffs: Vec<(usize, f64)>,
}

impl QPolyCoeffs {
    pub fn sum(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|&(_, c)| c)
            .collect::<NeumaierSum>()
            .value()
    }
}

/// `(ν)_k / k! = Π_{j<k} (ν + j)/(j + 1)` for `k = 0..len`.
fn rising_over_factorial(nu: f64, len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(len);
    let mut v = 1.0;
    for j in 0..len {
        out.push(v);
        v *= (nu + j as f64) / (j as f64 + 1.0);
    }
    out
}

fn binomial(k: usize, r: usize) -> f64 {
    let r = r.min(k - r);
    (1..=r).fold(1.0, |acc, i| acc * (k - r + i) as f64 / i as f64)
}

#[inline]
fn alternation(n: usize, m: usize, r: usize) -> f64 {
    if (n + (m - 1) * r).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// The summands of `Q_n`.
pub fn q_poly_coeffs(n: usize, p: &QPolyParams) -> QPolyCoeffs {
    let m = p.m;
    let mut coeffs = Vec::with_capacity(n / m + 1);
    // n!/((n−mr)! r!) as a running multiplier
    let mut mult = 1.0f64;
    for r in 0..=n / m {
        if r > 0 {
            let top = n - m * (r - 1);
            for j in 0..m {
                mult *= (top - j) as f64;
            }
            mult /= r as f64;
        }
        let k = n - (m - 1) * r;
        let rising: f64 = (0..k).map(|j| p.nu + j as f64).product();
        let c = alternation(n, m, r)
            * rising
            * mult
            * p.b.powi((n - m * r) as i32)
            * p.a.powi(r as i32);
        coeffs.push((r, c));
    }
    QPolyCoeffs { n, coeffs }
}

/// `Q_n(a, b | ν, m)`. A polynomial identity: no restriction on `a`, `b`.
pub fn q_poly(n: usize, p: &QPolyParams) -> f64 {
    q_poly_coeffs(n, p).sum()
}

/// Taylor coefficients `c_n = Q_n/n!`, built without any factorial so the
/// series can run to the term cap.
struct TaylorCoeffs {
    p: QPolyParams,
    rof: Vec<f64>,
}

impl TaylorCoeffs {
    fn new(p: QPolyParams) -> Self {
        TaylorCoeffs {
            p,
            rof: rising_over_factorial(p.nu, 64),
        }
    }

    /// `c_n · x^n`, folding `x^n` into each summand so large `b^{n−mr} a^r`
    /// never appear on their own.
    fn term(&mut self, n: usize, x: f64) -> f64 {
        if self.rof.len() <= n {
            self.rof = rising_over_factorial(self.p.nu, 2 * n + 1);
        }
        let m = self.p.m;
        let mut acc = NeumaierSum::new();
        for r in 0..=n / m {
            let k = n - (m - 1) * r;
            let bx = (self.p.b * x).powi((n - m * r) as i32);
            let ax = (self.p.a * x.powi(m as i32)).powi(r as i32);
            acc.add(alternation(n, m, r) * self.rof[k] * binomial(k, r) * bx * ax);
        }
        acc.value()
    }
}

fn policy(p: &QPolyParams, opts: &EvalOptions) -> series::SeriesPolicy {
    // b = 0 leaves only every m-th coefficient non-zero
    opts.policy().with_window(p.m)
}

/// `G(a, b; x | ν, m) = Σ x^n/n! · Q_n`, summed to tolerance.
pub fn g_series(p: &QPolyParams, x: f64, tol: f64) -> Result<SeriesValue> {
    g_series_with(p, x, &EvalOptions::with_tol(tol))
}

pub fn g_series_with(p: &QPolyParams, x: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    p.check_series_domain("g_series", x)?;
    let mut tc = TaylorCoeffs::new(*p);
    Ok(series::sum_series(policy(p, opts), |n| tc.term(n, x)))
}

/// `∫₀^x G(a, b; ξ | ν, m) dξ = Σ x^{n+1}/(n+1)! · Q_n`.
pub fn incomplete_integral(p: &QPolyParams, x: f64, tol: f64) -> Result<SeriesValue> {
    incomplete_integral_with(p, x, &EvalOptions::with_tol(tol))
}

pub fn incomplete_integral_with(
    p: &QPolyParams,
    x: f64,
    opts: &EvalOptions,
) -> Result<SeriesValue> {
    p.check_series_domain("incomplete_integral", x)?;
    let mut tc = TaylorCoeffs::new(*p);
    Ok(series::sum_series(policy(p, opts), |n| {
        tc.term(n, x) * x / (n as f64 + 1.0)
    }))
}

/// Partial sum `Σ_{n=0}^{last} x^n/n! · Q_n`, no domain check.
pub fn g_series_partial(p: &QPolyParams, x: f64, last: usize) -> SeriesValue {
    let mut tc = TaylorCoeffs::new(*p);
    series::partial_sum(last, crate::DEFAULT_TOL, |n| tc.term(n, x))
}

/// Partial sum `Σ_{n=0}^{last} x^{n+1}/(n+1)! · Q_n`, no domain check.
pub fn incomplete_partial(p: &QPolyParams, x: f64, last: usize) -> SeriesValue {
    let mut tc = TaylorCoeffs::new(*p);
    series::partial_sum(last, crate::DEFAULT_TOL, |n| {
        tc.term(n, x) * x / (n as f64 + 1.0)
    })
}
