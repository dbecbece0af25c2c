//! Independent oracles shared by the integration tests.
//!
//! Finite-difference quotients of `Γ(x₁, …)` in `x₁` lose all precision to
//! roundoff at small steps once the order exceeds one. Because `x₁` enters
//! only through `exp(−x₁ t)`, each stencil acts on the integrand as a
//! multiplier in `t`, so the same quotient can be integrated directly
//! without subtracting nearby values.

#![allow(dead_code)]

use hermite_elliptic::oracles::quad_half_line;

pub const QUAD_TOL: f64 = 1e-13;

/// `t^{ν−1} exp(−Σ_k x_k t^k)` for `x = [x₁, x₂, …]`.
pub fn gamma_integrand(x: &[f64], nu: f64, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let poly: f64 = x
        .iter()
        .enumerate()
        .map(|(k, c)| c * t.powi(k as i32 + 1))
        .sum();
    ((nu - 1.0) * t.ln() - poly).exp()
}

fn quad_with_kernel(x: &[f64], nu: f64, kernel: impl Fn(f64) -> f64) -> f64 {
    let q = quad_half_line(|t| gamma_integrand(x, nu, t) * kernel(t), QUAD_TOL);
    assert!(
        q.converged,
        "stencil quadrature failed at x = {x:?}, ν = {nu}"
    );
    q.value
}

/// `[Γ(x₁+h) − 2Γ(x₁) + Γ(x₁−h)] / h²`.
pub fn second_difference_x1(x: &[f64], nu: f64, h: f64) -> f64 {
    quad_with_kernel(x, nu, |t| {
        let s = (0.5 * h * t).sinh();
        4.0 * s * s / (h * h)
    })
}

/// `[Γ(x₁+2h) − 2Γ(x₁+h) + 2Γ(x₁−h) − Γ(x₁−2h)] / (2h³)`.
pub fn third_difference_x1(x: &[f64], nu: f64, h: f64) -> f64 {
    quad_with_kernel(x, nu, |t| {
        let s = (0.5 * h * t).sinh();
        -4.0 * (h * t).sinh() * s * s / (h * h * h)
    })
}

/// Central first difference of `f` with step `h`.
pub fn central(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
