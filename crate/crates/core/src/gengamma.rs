//! Generalized Gamma functions and generalized Hermite functions.
//!
//! ```text
//! Γ(x₁, x_m | ν; m) = ∫₀^∞ exp(−x₁t − x_m t^m) t^{ν−1} dt
//!                   = (1/m) Σ_r (−x₁)^r/r! · x_m^{−(ν+r)/m} Γ((ν+r)/m)
//! Γ(x₁, x₂, x₃ | ν) = ∫₀^∞ exp(−x₁t − x₂t² − x₃t³) t^{ν−1} dt
//!                   = (1/3) Σ_r H_r^(2)(−x₁, −x₂)/r! · x₃^{−(r+ν)/3} Γ((r+ν)/3)
//! ```
//!
//! The Hermite functions are `H_ν^(m)(x₁, x_m) = Γ(x₁, x_m | −ν; m)/Γ(−ν)`
//! for `ν < 0`; with `H_ν(x) = H_ν^(2)(2x, 1)`.

use crate::error::{Error, Result};
use crate::hermite::{self, PolyIndex};
use crate::oracles::{quad_half_line, QuadResult};
use crate::report::{self, EvalReport, Method};
use crate::series::{self, SeriesValue};
use crate::special;
use crate::EvalOptions;

/// Tolerance used by the routines that return a bare `f64`.
const TIGHT_TOL: f64 = 1e-15;

/// Arguments of `Γ(x₁, x_m | ν; m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaArgs2 {
    pub x1: f64,
    pub xm: f64,
    pub nu: f64,
    pub m: f64,
}

impl GammaArgs2 {
    pub fn new(x1: f64, xm: f64, nu: f64, m: f64) -> Result<Self> {
        if !(xm > 0.0) {
            return Err(Error::domain(
                "gengamma2",
                format!("x_m must be positive, got {xm}"),
            ));
        }
        if !(m >= 1.0) {
            return Err(Error::domain(
                "gengamma2",
                format!("m must be at least 1, got {m}"),
            ));
        }
        if !x1.is_finite() || !nu.is_finite() {
            return Err(Error::domain("gengamma2", "x₁ and ν must be finite"));
        }
        Ok(GammaArgs2 { x1, xm, nu, m })
    }

    /// The integrand `exp(−x₁t − x_m t^m) t^{ν−1}`.
    pub fn integrand(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        (-self.x1 * t - self.xm * t.powf(self.m) + (self.nu - 1.0) * t.ln()).exp()
    }

    /// `|x₁| / x_m^{1/m}`, the size of the alternating series terms.
    pub fn cancellation_ratio(&self) -> f64 {
        self.x1.abs() / self.xm.powf(1.0 / self.m)
    }
}

/// Arguments of `Γ(x₁, x₂, x₃ | ν)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaArgs3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub nu: f64,
}

impl GammaArgs3 {
    pub fn new(x1: f64, x2: f64, x3: f64, nu: f64) -> Result<Self> {
        if !(x3 > 0.0) {
            return Err(Error::domain(
                "gengamma3",
                format!("x₃ must be positive, got {x3}"),
            ));
        }
        if !(nu > 0.0) {
            return Err(Error::domain(
                "gengamma3",
                format!("ν must be positive, got {nu}"),
            ));
        }
        if !x1.is_finite() || !x2.is_finite() {
            return Err(Error::domain("gengamma3", "x₁ and x₂ must be finite"));
        }
        Ok(GammaArgs3 { x1, x2, x3, nu })
    }

    pub fn integrand(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        let poly = t * (self.x1 + t * (self.x2 + t * self.x3));
        (-poly + (self.nu - 1.0) * t.ln()).exp()
    }
}

/// `coef · Γ(s) · base^{−s}`; falls back to log magnitudes when the direct
/// product would overflow or lose the coefficient to underflow.
fn gamma_power_term(coef: f64, s: f64, base: f64) -> f64 {
    if coef == 0.0 {
        return 0.0;
    }
    if s <= 170.0 && coef.abs() > 1e-280 {
        let direct = coef * special::gamma(s) * base.powf(-s);
        if direct.is_finite() && direct != 0.0 {
            return direct;
        }
    }
    let (lg, sg) = special::ln_gamma_signed(s);
    series::from_log(coef.signum() * sg, coef.abs().ln() + lg - s * base.ln())
}

/// Same as [`gamma_power_term`] with the coefficient given as `sign · exp(ln_coef)`.
fn gamma_power_term_ln(sign: f64, ln_coef: f64, s: f64, base: f64) -> f64 {
    if sign == 0.0 {
        return 0.0;
    }
    let (lg, sg) = special::ln_gamma_signed(s);
    series::from_log(sign * sg, ln_coef + lg - s * base.ln())
}

fn check_pole(op: &'static str, r: usize, s: f64) -> Result<()> {
    if special::is_gamma_pole(s) {
        Err(Error::Pole { op, r, arg: s })
    } else {
        Ok(())
    }
}

/// Series route for `Γ(x₁, x_m | ν; m)`.
///
/// At `m = 1` the series is the binomial series of `Γ(ν)(x₁ + x_m)^{−ν}`
/// and is summed in that closed form, which also covers `|x₁| ≥ x_m`.
pub fn gengamma2_series(g: &GammaArgs2, tol: f64) -> Result<SeriesValue> {
    gengamma2_series_with(g, &EvalOptions::with_tol(tol))
}

pub fn gengamma2_series_with(g: &GammaArgs2, opts: &EvalOptions) -> Result<SeriesValue> {
    const OP: &str = "gengamma2_series";
    let GammaArgs2 { x1, xm, nu, m } = *g;
    check_pole(OP, 0, nu / m)?;
    if m == 1.0 {
        let base = x1 + xm;
        if !(base > 0.0) {
            return Err(Error::domain(OP, "x₁ + x_m must be positive when m = 1"));
        }
        return Ok(SeriesValue::exact(special::gamma(nu) * base.powf(-nu)));
    }
    if x1 != 0.0 {
        // every later term carries a Gamma factor; check them before summing
        for r in 1..opts.max_terms {
            check_pole(OP, r, (nu + r as f64) / m)?;
        }
    }
    let ln_x1 = x1.abs().ln();
    let neg_x1_sign = -x1.signum();
    let mut coef = 1.0 / m;
    Ok(series::sum_series(opts.policy(), |r| {
        let s = (nu + r as f64) / m;
        if r == 0 {
            return gamma_power_term(coef, s, xm);
        }
        if x1 == 0.0 {
            return 0.0;
        }
        coef *= -x1 / r as f64;
        if coef != 0.0 && coef.abs() > 1e-280 {
            gamma_power_term(coef, s, xm)
        } else {
            let ln_coef = r as f64 * ln_x1 - special::ln_factorial(r) - m.ln();
            gamma_power_term_ln(series::pow_sign(neg_x1_sign, r), ln_coef, s, xm)
        }
    }))
}

/// Quadrature of `Γ(x₁, x_m | ν; m)` after rescaling to
/// `σ^{−ν} Γ(x₁/σ, x_m/σ^m | ν; m)` with `σ = max(|x₁|, x_m^{1/m})`, which
/// keeps the peak of the integrand near `t = 1` for extreme arguments.
fn scaled_quad(g: &GammaArgs2, tol: f64) -> QuadResult {
    let sigma = g.x1.abs().max(g.xm.powf(1.0 / g.m));
    if !(sigma > 0.0) || !sigma.is_finite() || (1e-3..=1e3).contains(&sigma) {
        return quad_half_line(|t| g.integrand(t), tol);
    }
    let unit = GammaArgs2 {
        x1: g.x1 / sigma,
        xm: g.xm / sigma.powf(g.m),
        ..*g
    };
    let q = quad_half_line(|t| unit.integrand(t), tol);
    let factor = (-g.nu * sigma.ln()).exp();
    QuadResult {
        value: q.value * factor,
        abs_err_est: q.abs_err_est * factor,
        ..q
    }
}

/// Quadrature route for `Γ(x₁, x_m | ν; m)`; needs `ν > 0`.
pub fn gengamma2_quad(g: &GammaArgs2, tol: f64) -> Result<EvalReport> {
    if !(g.nu > 0.0) {
        return Err(Error::domain(
            "gengamma2_quad",
            format!("the integral needs ν > 0, got {}", g.nu),
        ));
    }
    report::quad_report("gengamma2_quad", scaled_quad(g, tol))
}

/// `Γ(x₁, x_m | ν; m)`: series unless `|x₁|/x_m^{1/m}` exceeds
/// `opts.fallback_ratio` or the series cancels, then quadrature.
pub fn gengamma2(g: &GammaArgs2, opts: &EvalOptions) -> Result<EvalReport> {
    let ratio = g.cancellation_ratio();
    let avoid = (ratio > opts.fallback_ratio && g.m != 1.0).then(|| {
        format!(
            "|x₁|/x_m^(1/m) = {ratio:.3} exceeds {}",
            opts.fallback_ratio
        )
    });
    let quad = (g.nu > 0.0).then_some(|| scaled_quad(g, opts.tol));
    report::route(
        "gengamma2",
        opts,
        Method::Series,
        avoid,
        || gengamma2_series_with(g, opts),
        quad,
    )
}

fn gengamma2_value(op: &'static str, g: &GammaArgs2) -> Result<f64> {
    let r = gengamma2(g, &EvalOptions::with_tol(TIGHT_TOL))?;
    if !r.converged {
        return Err(Error::NotConverged {
            op,
            estimate: r.value,
            abs_err: r.abs_err_est,
        });
    }
    Ok(r.value)
}

/// Series route for `Γ(x₁, x₂, x₃ | ν)` with `H_r^(2)(−x₁, −x₂)` weights.
/// Limited to the Hermite degree cap.
pub fn gengamma3(g: &GammaArgs3, tol: f64) -> Result<SeriesValue> {
    gengamma3_with(g, &EvalOptions::with_tol(tol))
}

pub fn gengamma3_with(g: &GammaArgs3, opts: &EvalOptions) -> Result<SeriesValue> {
    let GammaArgs3 { x1, x2, x3, nu } = *g;
    let mut policy = opts.policy();
    policy.max_terms = policy.max_terms.min(hermite::MAX_DEGREE + 1);
    Ok(series::sum_series(policy, |r| {
        let idx = PolyIndex::new(r, 2).expect("degree within cap");
        let coef = if r <= 170 {
            hermite::hermite_gh(idx, -x1, -x2) / special::factorial(r)
        } else {
            hermite::hermite_gh_coefficient(idx, -x1, -x2)
        };
        gamma_power_term(coef / 3.0, (r as f64 + nu) / 3.0, x3)
    }))
}

/// Quadrature route for `Γ(x₁, x₂, x₃ | ν)`.
pub fn gengamma3_quad(g: &GammaArgs3, tol: f64) -> Result<EvalReport> {
    report::quad_report("gengamma3_quad", quad_half_line(|t| g.integrand(t), tol))
}

/// Hermite function
/// `H_ν(x) = (1/Γ(−ν)) ∫₀^∞ exp(−2xt − t²) t^{−ν−1} dt` for `ν < 0`.
pub fn hermite_fn(nu: f64, x: f64) -> Result<f64> {
    if !(nu < 0.0) {
        return Err(Error::domain(
            "hermite_fn",
            format!("order must be negative, got ν = {nu}"),
        ));
    }
    let g = GammaArgs2::new(2.0 * x, 1.0, -nu, 2.0)?;
    Ok(gengamma2_value("hermite_fn", &g)? / special::gamma(-nu))
}

/// `H_ν^(m)(x₁, x_m) = Γ(x₁, x_m | −ν; m)/Γ(−ν)` for `ν < 0`.
pub fn hermite_fn_m(nu: f64, x1: f64, xm: f64, m: f64) -> Result<f64> {
    if !(nu < 0.0) {
        return Err(Error::domain(
            "hermite_fn_m",
            format!("order must be negative, got ν = {nu}"),
        ));
    }
    let g = GammaArgs2::new(x1, xm, -nu, m)?;
    Ok(gengamma2_value("hermite_fn_m", &g)? / special::gamma(-nu))
}

/// `H_{−(n+1)}^(m)(x₁, x_m) = (1/n!) ∫₀^∞ t^n exp(−x₁t − x_m t^m) dt`.
pub fn h_minus_order(n: usize, x1: f64, xm: f64, m: f64) -> Result<f64> {
    if n > 170 {
        return Err(Error::range(
            "h_minus_order",
            format!("order n = {n} exceeds 170"),
        ));
    }
    let g = GammaArgs2::new(x1, xm, n as f64 + 1.0, m)?;
    Ok(gengamma2_value("h_minus_order", &g)? / special::factorial(n))
}

/// The same quantity as [`h_minus_order`], reached by differentiating the
/// series of `H_{−1}^(m)` n times in `x₁`:
/// `((−1)^n/n!) ∂ⁿ_{x₁} H_{−1}^(m)(x₁, x_m)`.
///
/// Differentiation shifts the coefficients `d_r = (−1)^r Γ((1+r)/m) x_m^{−(1+r)/m}/m`
/// of `Σ d_r x₁^r/r!` down by n. Not valid at `m = 1` beyond `|x₁| < x_m`.
pub fn h_minus_order_by_derivative(
    n: usize,
    x1: f64,
    xm: f64,
    m: f64,
    tol: f64,
) -> Result<SeriesValue> {
    GammaArgs2::new(x1, xm, 1.0, m)?;
    if n > 170 {
        return Err(Error::range(
            "h_minus_order_by_derivative",
            format!("order n = {n} exceeds 170"),
        ));
    }
    let d = |r: usize| {
        let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
        gamma_power_term(sign / m, (1.0 + r as f64) / m, xm)
    };
    let prefactor = if n.is_multiple_of(2) { 1.0 } else { -1.0 } / special::factorial(n);
    let mut x_pow = 1.0;
    let sv = series::sum_series(
        series::SeriesPolicy::new(tol, series::DEFAULT_MAX_TERMS),
        |j| {
            if j > 0 {
                x_pow *= x1 / j as f64;
            }
            prefactor * d(n + j) * x_pow
        },
    );
    Ok(sv)
}

/// Partial sum `Σ_{n=0}^{N} zⁿ H_{−n−1}^(m)(x₁, x_m)`, which generates
/// `H_{−1}^(m)(x₁ − z, x_m)`.
pub fn h_minus1_gf_partial(z: f64, x1: f64, xm: f64, m: f64, last: usize) -> Result<SeriesValue> {
    if last >= 170 {
        return Err(Error::range(
            "h_minus1_gf_partial",
            format!("truncation order {last} exceeds 169"),
        ));
    }
    let terms = (0..=last + 1)
        .map(|n| Ok(z.powi(n as i32) * h_minus_order(n, x1, xm, m)?))
        .collect::<Result<Vec<f64>>>()?;
    Ok(series::partial_sum(last, crate::DEFAULT_TOL, |n| terms[n]))
}

/// `H_{−1}^(2)(x₁, x₂) = ½ √(π/x₂) · exp(x₁²/(4x₂)) · erfc(x₁/(2√x₂))`.
pub fn h_minus1_erf_form(x1: f64, x2: f64) -> Result<f64> {
    if !(x2 > 0.0) {
        return Err(Error::domain(
            "h_minus1_erf_form",
            format!("x₂ must be positive, got {x2}"),
        ));
    }
    let z = x1 / (2.0 * x2.sqrt());
    Ok(0.5 * (std::f64::consts::PI / x2).sqrt() * special::erfcx(z))
}

/// Quadrature cross-check used by tests and the CLI.
pub fn quad_gengamma2(g: &GammaArgs2, tol: f64) -> QuadResult {
    scaled_quad(g, tol)
}
