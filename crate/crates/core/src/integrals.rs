//! Elliptic-type integrals of negative polynomial powers.
//!
//! | kind | integral | route |
//! |------|----------|-------|
//! | full-line quadratic | `∫_ℝ (1 + a x²)^{−ν}` | closed form |
//! | full-line quadratic + linear | `∫_ℝ (1 + b x + a x²)^{−ν}` | closed form |
//! | half-line monomial | `∫₀^∞ (1 + a x^m)^{−ν}` | closed form |
//! | half-line general | `∫₀^∞ (1 + b x + a x^m)^{−ν}` | umbral series |
//! | cubic hyper-elliptic | `∫₀^∞ (1 + a₁x + a₂x² + a₃x³)^{−ν}` | `H̃`-weighted series |
//! | incomplete | `∫₀^x (1 + b ξ + a ξ^m)^{−ν}` | Q-polynomial series |
//!
//! The series routes fall back to quadrature when they cancel or stall.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hermite;
use crate::oracles::{quad_finite, quad_full_line, quad_half_line, QuadResult};
use crate::qpoly::{self, QPolyParams};
use crate::report::{self, EvalReport, Method};
use crate::series::{self, NeumaierSum, SeriesValue};
use crate::special::{gamma, ln_factorial, ln_gamma_signed};
use crate::EvalOptions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralKind {
    FullLineQuadratic,
    FullLineQuadraticLinear,
    HalfLineMonomial,
    HalfLineGeneral,
    HyperElliptic3,
    IncompleteFinite,
}

impl IntegralKind {
    pub const ALL: [IntegralKind; 6] = [
        IntegralKind::FullLineQuadratic,
        IntegralKind::FullLineQuadraticLinear,
        IntegralKind::HalfLineMonomial,
        IntegralKind::HalfLineGeneral,
        IntegralKind::HyperElliptic3,
        IntegralKind::IncompleteFinite,
    ];

    /// Command-line spelling.
    pub fn name(&self) -> &'static str {
        match self {
            IntegralKind::FullLineQuadratic => "full-quadratic",
            IntegralKind::FullLineQuadraticLinear => "full-quadratic-linear",
            IntegralKind::HalfLineMonomial => "half-monomial",
            IntegralKind::HalfLineGeneral => "half-general",
            IntegralKind::HyperElliptic3 => "hyper3",
            IntegralKind::IncompleteFinite => "incomplete",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// Parameters of one integral. Only the fields relevant to `kind` are read.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralSpec {
    pub kind: IntegralKind,
    pub a: f64,
    pub b: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub nu: f64,
    pub m: f64,
    /// Upper limit of the incomplete integral.
    pub upper: f64,
}

impl IntegralSpec {
    pub fn new(kind: IntegralKind) -> Self {
        IntegralSpec {
            kind,
            a: 1.0,
            b: 0.0,
            a1: 0.0,
            a2: 0.0,
            a3: 1.0,
            nu: 1.0,
            m: 2.0,
            upper: 0.0,
        }
    }

    /// The integrand, for the quadrature route.
    pub fn integrand(&self) -> impl Fn(f64) -> f64 + '_ {
        move |x: f64| {
            let p = match self.kind {
                IntegralKind::FullLineQuadratic => 1.0 + self.a * x * x,
                IntegralKind::FullLineQuadraticLinear => 1.0 + x * (self.b + self.a * x),
                IntegralKind::HalfLineMonomial => 1.0 + self.a * x.powf(self.m),
                IntegralKind::HalfLineGeneral | IntegralKind::IncompleteFinite => {
                    1.0 + self.b * x + self.a * x.powf(self.m)
                }
                IntegralKind::HyperElliptic3 => 1.0 + x * (self.a1 + x * (self.a2 + x * self.a3)),
            };
            p.powf(-self.nu)
        }
    }
}

/// Evaluates `spec` through its primary route.
pub fn evaluate(spec: &IntegralSpec, opts: &EvalOptions) -> Result<EvalReport> {
    match spec.kind {
        IntegralKind::FullLineQuadratic => f_quadratic(spec.a, spec.nu),
        IntegralKind::FullLineQuadraticLinear => f_quadratic_linear(spec.a, spec.b, spec.nu),
        IntegralKind::HalfLineMonomial => phi_monomial(spec.a, spec.nu, spec.m),
        IntegralKind::HalfLineGeneral => phi_general_with(spec.a, spec.b, spec.nu, spec.m, opts),
        IntegralKind::HyperElliptic3 => {
            phi_hyperelliptic3_with(spec.a1, spec.a2, spec.a3, spec.nu, opts)
        }
        IntegralKind::IncompleteFinite => incomplete_with(spec, opts),
    }
}

/// Evaluates `spec` by direct quadrature of its integrand, after the same
/// precondition checks as [`evaluate`].
pub fn quadrature(spec: &IntegralSpec, tol: f64) -> Result<EvalReport> {
    check_preconditions(spec)?;
    let f = spec.integrand();
    let q: QuadResult = match spec.kind {
        IntegralKind::FullLineQuadratic | IntegralKind::FullLineQuadraticLinear => {
            quad_full_line(f, tol)
        }
        IntegralKind::HalfLineMonomial
        | IntegralKind::HalfLineGeneral
        | IntegralKind::HyperElliptic3 => quad_half_line(f, tol),
        IntegralKind::IncompleteFinite => quad_finite(f, 0.0, spec.upper, tol),
    };
    report::quad_report("quadrature", q)
}

fn check_preconditions(spec: &IntegralSpec) -> Result<()> {
    match spec.kind {
        IntegralKind::FullLineQuadratic => check_quadratic("f_quadratic", spec.a, 0.0, spec.nu),
        IntegralKind::FullLineQuadraticLinear => {
            check_quadratic("f_quadratic_linear", spec.a, spec.b, spec.nu)
        }
        IntegralKind::HalfLineMonomial => {
            check_half_line("phi_monomial", spec.a, 0.0, spec.nu, spec.m)
        }
        IntegralKind::HalfLineGeneral => {
            check_half_line("phi_general", spec.a, spec.b, spec.nu, spec.m)
        }
        IntegralKind::HyperElliptic3 => check_cubic(spec.a1, spec.a2, spec.a3, spec.nu),
        IntegralKind::IncompleteFinite => incomplete_params(spec).map(|_| ()),
    }
}

fn check_quadratic(op: &'static str, a: f64, b: f64, nu: f64) -> Result<()> {
    if !(a > 0.0) {
        return Err(Error::domain(op, format!("a must be positive, got {a}")));
    }
    if !(nu > 0.5) {
        return Err(Error::domain(op, format!("ν must exceed 1/2, got {nu}")));
    }
    if !(b * b < 4.0 * a) {
        return Err(Error::domain(
            op,
            format!("b² < 4a fails for a = {a}, b = {b}"),
        ));
    }
    Ok(())
}

/// `1 + b x + a x^m > 0` on `[0, ∞)` and the integral converges.
fn check_half_line(op: &'static str, a: f64, b: f64, nu: f64, m: f64) -> Result<()> {
    if !(a > 0.0) {
        return Err(Error::domain(op, format!("a must be positive, got {a}")));
    }
    if !(m >= 1.0) || !m.is_finite() {
        return Err(Error::domain(op, format!("m must be at least 1, got {m}")));
    }
    if !(nu > 1.0 / m) {
        return Err(Error::domain(
            op,
            format!("ν must exceed 1/m = {}, got {nu}", 1.0 / m),
        ));
    }
    if !b.is_finite() {
        return Err(Error::domain(op, "b must be finite"));
    }
    if b >= 0.0 {
        return Ok(());
    }
    let positive = if m == 1.0 {
        a + b > 0.0
    } else if m == 2.0 {
        b * b < 4.0 * a
    } else {
        // single critical point of b x + a x^m on (0, ∞)
        let x_star = (-b / (a * m)).powf(1.0 / (m - 1.0));
        1.0 + b * x_star + a * x_star.powf(m) > 0.0
    };
    if positive {
        Ok(())
    } else {
        Err(Error::domain(
            op,
            format!("1 + b x + a x^m has a zero on [0, ∞) for a = {a}, b = {b}, m = {m}"),
        ))
    }
}

/// `1 + a₁x + a₂x² + a₃x³ > 0` on `[0, ∞)` and `ν > 1/3`.
fn check_cubic(a1: f64, a2: f64, a3: f64, nu: f64) -> Result<()> {
    const OP: &str = "phi_hyperelliptic3";
    if !(a3 > 0.0) {
        return Err(Error::domain(OP, format!("a₃ must be positive, got {a3}")));
    }
    if !(nu > 1.0 / 3.0) {
        return Err(Error::domain(OP, format!("ν must exceed 1/3, got {nu}")));
    }
    if !a1.is_finite() || !a2.is_finite() {
        return Err(Error::domain(OP, "a₁ and a₂ must be finite"));
    }
    if a1 >= 0.0 && a2 >= 0.0 {
        return Ok(());
    }
    let p = |x: f64| 1.0 + x * (a1 + x * (a2 + x * a3));
    // critical points: 3a₃x² + 2a₂x + a₁ = 0
    let disc = a2 * a2 - 3.0 * a3 * a1;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        for x in [(-a2 + sq) / (3.0 * a3), (-a2 - sq) / (3.0 * a3)] {
            if x >= 0.0 && p(x) <= 0.0 {
                return Err(Error::domain(
                    OP,
                    format!("1 + a₁x + a₂x² + a₃x³ ≤ 0 at x = {x} for a = ({a1}, {a2}, {a3})"),
                ));
            }
        }
    }
    Ok(())
}

/// `∫_ℝ (1 + a x²)^{−ν} dx = √(π/a) Γ(ν − ½)/Γ(ν)` for `a > 0`, `ν > ½`.
pub fn f_quadratic(a: f64, nu: f64) -> Result<EvalReport> {
    check_quadratic("f_quadratic", a, 0.0, nu)?;
    Ok(EvalReport::closed_form(PI / a.sqrt() * half_ratio(nu)))
}

/// `∫_ℝ (1 + b x + a x²)^{−ν} dx = √(π/a) Γ(ν − ½)/Γ(ν) · (1 − b²/4a)^{½−ν}`
/// for `b² < 4a`.
pub fn f_quadratic_linear(a: f64, b: f64, nu: f64) -> Result<EvalReport> {
    check_quadratic("f_quadratic_linear", a, b, nu)?;
    let base = PI / a.sqrt() * half_ratio(nu);
    if b == 0.0 {
        return Ok(EvalReport::closed_form(base));
    }
    Ok(EvalReport::closed_form(
        base * (1.0 - b * b / (4.0 * a)).powf(0.5 - nu),
    ))
}

/// `Γ(ν − ½) / (√π Γ(ν))`, so that the `Γ(½) = √π` factors cancel exactly.
fn half_ratio(nu: f64) -> f64 {
    gamma(nu - 0.5) / (PI.sqrt() * gamma(nu))
}

fn monomial_value(a: f64, nu: f64, m: f64) -> f64 {
    if m == 2.0 {
        return PI / (2.0 * a.sqrt()) * half_ratio(nu);
    }
    gamma(1.0 / m) * gamma(nu - 1.0 / m) / (m * a.powf(1.0 / m) * gamma(nu))
}

/// `∫₀^∞ (1 + a x^m)^{−ν} dx = Γ(1/m) Γ(ν − 1/m) / (m a^{1/m} Γ(ν))`
/// for real `m ≥ 1`, `ν > 1/m`.
pub fn phi_monomial(a: f64, nu: f64, m: f64) -> Result<EvalReport> {
    check_half_line("phi_monomial", a, 0.0, nu, m)?;
    Ok(EvalReport::closed_form(monomial_value(a, nu, m)))
}

/// `∫₀^∞ (1 + b x + a x^m)^{−ν} dx` by the umbral series
/// `1/(m Γ(ν)) Σ_r (−b)^r/r! · a^{−(1+r)/m} Γ((mν + (m−1)r − 1)/m) Γ((1+r)/m)`.
pub fn phi_general(a: f64, b: f64, nu: f64, m: f64, tol: f64) -> Result<EvalReport> {
    phi_general_with(a, b, nu, m, &EvalOptions::with_tol(tol))
}

pub fn phi_general_with(a: f64, b: f64, nu: f64, m: f64, opts: &EvalOptions) -> Result<EvalReport> {
    const OP: &str = "phi_general";
    check_half_line(OP, a, b, nu, m)?;
    let rho = umbral_ratio(a, b, m);
    let avoid = (rho >= 1.0).then(|| format!("umbral series diverges (ratio {rho:.3} ≥ 1)"));
    let spec = IntegralSpec {
        a,
        b,
        nu,
        m,
        ..IntegralSpec::new(IntegralKind::HalfLineGeneral)
    };
    let quad = Some(|| quad_half_line(spec.integrand(), opts.tol));
    report::route(
        OP,
        opts,
        Method::UmbralSeries,
        avoid,
        || Ok(umbral_series(a, b, nu, m, opts)),
        quad,
    )
}

/// Asymptotic ratio of consecutive umbral terms, `|b| (m−1)^{(m−1)/m} / (m a^{1/m})`.
fn umbral_ratio(a: f64, b: f64, m: f64) -> f64 {
    if m == 1.0 {
        b.abs() / a
    } else {
        b.abs() * (m - 1.0).powf((m - 1.0) / m) / (m * a.powf(1.0 / m))
    }
}

fn umbral_series(a: f64, b: f64, nu: f64, m: f64, opts: &EvalOptions) -> SeriesValue {
    let (ln_gnu, sgn_gnu) = ln_gamma_signed(nu);
    let (ln_b, sgn_b) = series::ln_abs(b);
    let mut coef = 1.0f64; // (−b)^r / r!
    series::sum_series(opts.policy(), |r| {
        if r == 0 {
            return monomial_value(a, nu, m);
        }
        if b == 0.0 {
            return 0.0;
        }
        coef *= -b / r as f64;
        let s1 = nu - 1.0 / m + r as f64 * (m - 1.0) / m;
        let s2 = (1.0 + r as f64) / m;
        if s1 <= 170.0 && s2 <= 170.0 && coef.abs() > 1e-280 {
            let t = coef * gamma(s1) * gamma(s2) * a.powf(-s2) / (m * gamma(nu));
            if t.is_finite() && t != 0.0 {
                return t;
            }
        }
        let (l1, g1) = ln_gamma_signed(s1);
        let (l2, g2) = ln_gamma_signed(s2);
        let sign = series::pow_sign(-sgn_b, r) * g1 * g2 * sgn_gnu;
        let ln_mag = r as f64 * ln_b - ln_factorial(r) - s2 * a.ln() + l1 + l2 - m.ln() - ln_gnu;
        series::from_log(sign, ln_mag)
    })
}

/// `∫₀^∞ (1 + a₁x + a₂x² + a₃x³)^{−ν} dx` by
/// `1/(3Γ(ν)) Σ_n H̃_n^(2)(−a₁, −a₂)/(n! a₃^{(n+1)/3}) Γ((n+1)/3)`.
pub fn phi_hyperelliptic3(a1: f64, a2: f64, a3: f64, nu: f64, tol: f64) -> Result<EvalReport> {
    phi_hyperelliptic3_with(a1, a2, a3, nu, &EvalOptions::with_tol(tol))
}

pub fn phi_hyperelliptic3_with(
    a1: f64,
    a2: f64,
    a3: f64,
    nu: f64,
    opts: &EvalOptions,
) -> Result<EvalReport> {
    const OP: &str = "phi_hyperelliptic3";
    check_cubic(a1, a2, a3, nu)?;
    let spec = IntegralSpec {
        a1,
        a2,
        a3,
        nu,
        ..IntegralSpec::new(IntegralKind::HyperElliptic3)
    };
    let quad = Some(|| quad_half_line(spec.integrand(), opts.tol));
    report::route(
        OP,
        opts,
        Method::Series,
        None,
        || Ok(hyperelliptic_series(a1, a2, a3, nu, opts)),
        quad,
    )
}

/// Term `n` of the cubic series: `H̃_n^(2)(−a₁, −a₂)/n! · Γ((n+1)/3) a₃^{−(n+1)/3} / (3Γ(ν))`.
///
/// Each `r`-summand of `H̃_n` is formed in one piece with the outer factors
/// so that neither `H̃_n` nor `n!` has to be representable.
fn hyperelliptic_term(n: usize, a1: f64, a2: f64, a3: f64, nu: f64) -> f64 {
    let (ln_x, sgn_x) = series::ln_abs(-a1);
    let (ln_y, sgn_y) = series::ln_abs(-a2);
    let (ln_gnu, sgn_gnu) = ln_gamma_signed(nu);
    let s_out = (n as f64 + 1.0) / 3.0;
    let (ln_gout, _) = ln_gamma_signed(s_out);
    let ln_outer = ln_gout - s_out * a3.ln() - 3f64.ln() - ln_gnu;
    let mut acc = NeumaierSum::new();
    for r in 0..=n / 2 {
        let k = n - 2 * r;
        let sign = series::pow_sign(sgn_x, k) * series::pow_sign(sgn_y, r);
        if sign == 0.0 {
            continue;
        }
        let (ln_gin, sgn_gin) = ln_gamma_signed(hermite::weighted_gamma_arg(n, r, nu));
        let ln_mag =
            series::pow_ln(ln_x, k) + series::pow_ln(ln_y, r) - ln_factorial(k) - ln_factorial(r)
                + ln_gin
                + ln_outer;
        acc.add(series::from_log(sign * sgn_gin * sgn_gnu, ln_mag));
    }
    acc.value()
}

fn hyperelliptic_series(a1: f64, a2: f64, a3: f64, nu: f64, opts: &EvalOptions) -> SeriesValue {
    series::sum_series(opts.policy(), |n| {
        if n == 0 {
            // H̃₀ = Γ((3ν − 1)/3): the monomial closed form with m = 3
            monomial_value(a3, nu, 3.0)
        } else {
            hyperelliptic_term(n, a1, a2, a3, nu)
        }
    })
}

fn incomplete_params(spec: &IntegralSpec) -> Result<QPolyParams> {
    const OP: &str = "incomplete_integral";
    if !(spec.m >= 1.0) || spec.m.fract() != 0.0 || spec.m > 64.0 {
        return Err(Error::domain(
            OP,
            format!("m must be an integer in 1..=64, got {}", spec.m),
        ));
    }
    if !spec.upper.is_finite() {
        return Err(Error::domain(OP, "upper limit must be finite"));
    }
    QPolyParams::new(spec.a, spec.b, spec.nu, spec.m as usize)
}

fn incomplete_with(spec: &IntegralSpec, opts: &EvalOptions) -> Result<EvalReport> {
    let p = incomplete_params(spec)?;
    let x = spec.upper;
    let quad = Some(|| quad_finite(spec.integrand(), 0.0, x, opts.tol));
    report::route(
        "incomplete_integral",
        opts,
        Method::Series,
        None,
        || qpoly::incomplete_integral_with(&p, x, opts),
        quad,
    )
}

/// Where the second derivative in [`laplace_peak_approx`] comes from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curvature {
    /// Central difference with step `max(1e−4, 1e−4 |x₀|)` rounded to a power of two.
    FiniteDifference,
    /// Caller-supplied `f''(x₀)`.
    Exact(f64),
}

/// Peak approximation of `∫_ℝ (M f(x))^{−ν} dx` around the global minimum `x₀` of `f`:
/// `√(2π)/(M f(x₀))^ν · Γ(ν − ½)/Γ(ν) · √(f(x₀)/f''(x₀))`.
pub fn laplace_peak_approx<F: Fn(f64) -> f64>(
    f: F,
    x0: f64,
    big_m: f64,
    nu: f64,
) -> Result<EvalReport> {
    laplace_peak_approx_with(f, x0, big_m, nu, Curvature::FiniteDifference)
}

pub fn laplace_peak_approx_with<F: Fn(f64) -> f64>(
    f: F,
    x0: f64,
    big_m: f64,
    nu: f64,
    curvature: Curvature,
) -> Result<EvalReport> {
    const OP: &str = "laplace_peak_approx";
    if !(big_m > 0.0) {
        return Err(Error::domain(
            OP,
            format!("M must be positive, got {big_m}"),
        ));
    }
    if !(nu > 0.5) {
        return Err(Error::domain(OP, format!("ν must exceed 1/2, got {nu}")));
    }
    let f0 = f(x0);
    if !(f0 > 0.0) {
        return Err(Error::domain(
            OP,
            format!("f(x₀) must be positive, got {f0}"),
        ));
    }
    let mut warnings = vec!["peak approximation: truncation error not estimated".to_string()];
    let f2 = match curvature {
        Curvature::Exact(v) => v,
        Curvature::FiniteDifference => {
            let raw = (1e-4 * x0.abs()).max(1e-4);
            let h = 2f64.powi(raw.log2().round() as i32);
            warnings.push(format!("f''(x₀) by central difference with step h = {h:e}"));
            (f(x0 + h) - 2.0 * f0 + f(x0 - h)) / (h * h)
        }
    };
    if !(f2 > 0.0) {
        return Err(Error::domain(
            OP,
            format!("f''(x₀) = {f2:e} is not positive; x₀ is not a non-degenerate minimum"),
        ));
    }
    let value =
        (2.0 * PI).sqrt() / (big_m * f0).powf(nu) * gamma(nu - 0.5) / gamma(nu) * (f0 / f2).sqrt();
    let mut r = EvalReport::closed_form(value);
    r.warnings = warnings;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::hermite_weighted;
    use crate::special::factorial;
    use approx::assert_relative_eq;

    fn quad_half(f: impl Fn(f64) -> f64) -> f64 {
        quad_half_line(f, 1e-13).value
    }

    fn quad_full(f: impl Fn(f64) -> f64) -> f64 {
        quad_full_line(f, 1e-13).value
    }

    #[test]
    fn quadratic_closed_forms() {
        assert_relative_eq!(
            f_quadratic(1.0, 1.0).unwrap().value,
            PI,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            f_quadratic(1.0, 1.5).unwrap().value,
            2.0,
            max_relative = 1e-15
        );
        let q = quad_full(|x| (1.0 + 4.0 * x * x).powi(-2));
        assert_relative_eq!(
            f_quadratic(4.0, 2.0).unwrap().value,
            q,
            max_relative = 1e-12
        );
        let r = f_quadratic(1.0, 1.0).unwrap();
        assert_eq!((r.method, r.abs_err_est), (Method::ClosedForm, 0.0));
        assert!(f_quadratic(0.0, 1.0).is_err());
        assert!(f_quadratic(1.0, 0.5).is_err());
    }

    #[test]
    fn quadratic_linear_closed_forms() {
        assert_eq!(
            f_quadratic_linear(2.5, 0.0, 1.7).unwrap().value,
            f_quadratic(2.5, 1.7).unwrap().value
        );
        assert_relative_eq!(
            f_quadratic_linear(1.0, 1.0, 1.0).unwrap().value,
            2.0 * PI / 3f64.sqrt(),
            max_relative = 1e-14
        );
        let q = quad_full(|x| (1.0 - 1.5 * x + 2.0 * x * x).powf(-2.25));
        assert!((f_quadratic_linear(2.0, -1.5, 2.25).unwrap().value - q).abs() < 1e-10);
        assert!(matches!(
            f_quadratic_linear(1.0, 2.0, 1.0),
            Err(Error::Domain { .. })
        ));
        for &(a, b, nu) in &[(1.0, 0.3, 1.2), (3.0, -2.9, 0.75), (0.2, 0.5, 4.0)] {
            assert_relative_eq!(
                f_quadratic_linear(a, b, nu).unwrap().value,
                f_quadratic_linear(a, -b, nu).unwrap().value,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn monomial_closed_forms() {
        assert_relative_eq!(
            phi_monomial(1.0, 1.0, 2.0).unwrap().value,
            PI / 2.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            phi_monomial(1.0, 2.0, 1.0).unwrap().value,
            1.0,
            max_relative = 1e-15
        );
        let v = phi_monomial(1.0, 1.0, 4.0).unwrap().value;
        assert_relative_eq!(v, PI * 2f64.sqrt() / 4.0, max_relative = 1e-14);
        assert_relative_eq!(
            v,
            quad_half(|x| 1.0 / (1.0 + x.powi(4))),
            max_relative = 1e-12
        );
        assert!(phi_monomial(1.0, 0.5, 2.0).is_err());
        assert!(phi_monomial(1.0, 2.0, 0.5).is_err());
    }

    #[test]
    fn general_reduces_to_monomial_at_b_zero() {
        for &(a, nu, m) in &[
            (1.0, 1.0, 2.0),
            (0.5, 0.75, 3.0),
            (2.0, 2.5, 4.0),
            (1.3, 1.2, 2.5),
        ] {
            let g = phi_general(a, 0.0, nu, m, 1e-14).unwrap();
            assert_eq!(g.value, phi_monomial(a, nu, m).unwrap().value);
            assert_eq!(g.method, Method::UmbralSeries);
        }
    }

    #[test]
    fn general_against_quadrature() {
        let r = phi_general(1.0, 1.0, 2.0, 2.0, 1e-14).unwrap();
        assert_eq!(r.method, Method::UmbralSeries);
        assert!((r.value - quad_half(|x| (1.0 + x + x * x).powi(-2))).abs() < 1e-8);
        let r = phi_general(2.0, 0.5, 1.5, 3.0, 1e-14).unwrap();
        assert!(
            (r.value - quad_half(|x| (1.0 + 0.5 * x + 2.0 * x.powi(3)).powf(-1.5))).abs() < 1e-8
        );
        // negative b inside the positivity region
        let r = phi_general(1.0, -1.2, 1.5, 2.0, 1e-14).unwrap();
        let q = quad_half(|x| (1.0 - 1.2 * x + x * x).powf(-1.5));
        assert_relative_eq!(r.value, q, max_relative = 1e-9);
    }

    #[test]
    fn general_outside_radius_falls_back() {
        // m = 1, |b| > a: geometric series diverges, integral is 1/((a + b)(ν − 1))
        let r = phi_general(1.0, 3.0, 2.0, 1.0, 1e-12).unwrap();
        assert_eq!(r.method, Method::Quadrature);
        assert!(!r.warnings.is_empty());
        assert_relative_eq!(r.value, 0.25, max_relative = 1e-10);
        let r = phi_general(1.0, 0.5, 2.0, 1.0, 1e-14).unwrap();
        assert_eq!(r.method, Method::UmbralSeries);
        assert_relative_eq!(r.value, 1.0 / 1.5, max_relative = 1e-12);
    }

    #[test]
    fn positivity_scan() {
        assert!(matches!(
            phi_general(1.0, -2.0, 1.0, 2.0, 1e-10),
            Err(Error::Domain { .. })
        ));
        // min of 1 − x + x³ on [0, ∞) is at x = 1/√3: 1 − 2/(3√3) > 0
        assert!(phi_general(1.0, -1.0, 1.0, 3.0, 1e-10).is_ok());
        // 1 − 2x + 0.5x³: minimum at x = 2/√3 is negative
        assert!(matches!(
            phi_general(0.5, -2.0, 1.0, 3.0, 1e-10),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            phi_general(1.0, -1.0, 2.0, 1.0, 1e-10),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            phi_hyperelliptic3(-3.0, 0.0, 1.0, 1.0, 1e-10),
            Err(Error::Domain { .. })
        ));
        assert!(phi_hyperelliptic3(0.5, -0.2, 1.0, 1.5, 1e-10).is_ok());
        assert!(matches!(
            phi_hyperelliptic3(1.0, 1.0, 0.0, 1.0, 1e-10),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn hyperelliptic_terms_match_weighted_polynomial() {
        let (a1, a2, a3, nu) = (0.7, -0.4, 1.3f64, 1.8);
        for n in 0..40 {
            let via_poly = hermite_weighted(n, -a1, -a2, nu).unwrap() / factorial(n)
                * gamma((n as f64 + 1.0) / 3.0)
                * a3.powf(-(n as f64 + 1.0) / 3.0)
                / (3.0 * gamma(nu));
            assert_relative_eq!(
                hyperelliptic_term(n, a1, a2, a3, nu),
                via_poly,
                max_relative = 1e-11,
                epsilon = 1e-300
            );
        }
    }

    #[test]
    fn hyperelliptic_examples() {
        let r = phi_hyperelliptic3(0.0, 0.0, 1.7, 1.4, 1e-14).unwrap();
        assert_relative_eq!(
            r.value,
            phi_monomial(1.7, 1.4, 3.0).unwrap().value,
            max_relative = 1e-12
        );
        let r = phi_hyperelliptic3(1.0, 1.0, 1.0, 2.0, 1e-14).unwrap();
        assert_eq!(r.method, Method::Series, "{r:?}");
        assert!((r.value - quad_half(|x| (1.0 + x + x * x + x.powi(3)).powi(-2))).abs() < 1e-8);
        let r = phi_hyperelliptic3(0.5, -0.2, 1.0, 1.5, 1e-14).unwrap();
        assert_eq!(r.method, Method::Series, "{r:?}");
        let q = quad_half(|x| (1.0 + 0.5 * x - 0.2 * x * x + x.powi(3)).powf(-1.5));
        assert!((r.value - q).abs() < 1e-8);
    }

    #[test]
    fn incomplete_kind() {
        let spec = IntegralSpec {
            a: 1.0,
            b: 1.0,
            nu: 1.0,
            m: 2.0,
            upper: 0.5,
            ..IntegralSpec::new(IntegralKind::IncompleteFinite)
        };
        let r = evaluate(&spec, &EvalOptions::with_tol(1e-14)).unwrap();
        let q = quadrature(&spec, 1e-13).unwrap();
        assert_relative_eq!(r.value, q.value, max_relative = 1e-12);
        let bad = IntegralSpec { m: 2.5, ..spec };
        assert!(evaluate(&bad, &EvalOptions::default()).is_err());
    }

    #[test]
    fn peak_approximation() {
        for &nu in &[1.0, 2.0, 5.0] {
            let r = laplace_peak_approx(|x| 1.0 + x * x, 0.0, 1.0, nu).unwrap();
            assert_relative_eq!(
                r.value,
                f_quadratic(1.0, nu).unwrap().value,
                max_relative = 1e-12
            );
            assert!(r.warnings.iter().any(|w| w.contains("step")));
        }
        let r = laplace_peak_approx(f64::cosh, 0.0, 1.0, 3.0).unwrap();
        let q = quad_full(|x| x.cosh().powi(-3));
        assert!(((r.value - q) / q).abs() < 0.1);

        let rel = |nu: f64| {
            let r = laplace_peak_approx(f64::cosh, 0.0, 1.0, nu).unwrap().value;
            let q = quad_full(|x| x.cosh().powf(-nu));
            ((r - q) / q).abs()
        };
        let (e2, e5, e10) = (rel(2.0), rel(5.0), rel(10.0));
        assert!(e2 > e5 && e5 > e10, "{e2} {e5} {e10}");

        // the relative error does not depend on M
        for &nu in &[2.0, 5.0] {
            let errs: Vec<f64> = [1.0, 4.0, 16.0]
                .iter()
                .map(|&big_m: &f64| {
                    let r = laplace_peak_approx(f64::cosh, 0.0, big_m, nu)
                        .unwrap()
                        .value;
                    let q = quad_full(|x| (big_m * x.cosh()).powf(-nu));
                    (r - q) / q
                })
                .collect();
            assert_relative_eq!(errs[0], errs[1], max_relative = 1e-8);
            assert_relative_eq!(errs[0], errs[2], max_relative = 1e-8);
        }

        assert!(matches!(
            laplace_peak_approx(|x| 1.0 - x * x, 0.0, 1.0, 2.0),
            Err(Error::Domain { .. })
        ));
        let r = laplace_peak_approx_with(
            |x| 2.0 + (x - 1.0).powi(2),
            1.0,
            1.0,
            2.0,
            Curvature::Exact(2.0),
        )
        .unwrap();
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in IntegralKind::ALL {
            assert_eq!(IntegralKind::from_name(k.name()), Some(k));
        }
        assert_eq!(IntegralKind::from_name("nope"), None);
    }
}
