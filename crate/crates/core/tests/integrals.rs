mod common;

use approx::assert_relative_eq;
use hermite_elliptic::gengamma::{gengamma2, GammaArgs2};
use hermite_elliptic::integrals::{
    evaluate, f_quadratic, f_quadratic_linear, phi_general, phi_hyperelliptic3, phi_monomial,
    quadrature, IntegralKind, IntegralSpec,
};
use hermite_elliptic::oracles::quad_half_line;
use hermite_elliptic::special::gamma;
use hermite_elliptic::{EvalOptions, Method, MethodChoice};
use proptest::prelude::*;

/// `Φ(a, b | ν, m) = Γ(ν)^{−1} ∫₀^∞ e^{−s} s^{ν−1} Γ(s b, s a | 1; m) ds`.
#[test]
fn half_line_matches_nested_gamma_representation() {
    let opts = EvalOptions::with_tol(1e-12);
    for &(a, b, nu, m) in &[
        (1.0, 0.5, 2.0, 2.0),
        (2.0, 0.2, 1.5, 3.0),
        (0.5, 0.0, 1.0, 4.0),
        (1.0, 1.0, 2.5, 2.0),
    ] {
        let outer = quad_half_line(
            |s| {
                let weight = (-s).exp() * s.powf(nu - 1.0);
                if s <= 0.0 || weight == 0.0 {
                    return 0.0;
                }
                let g = GammaArgs2::new(s * b, s * a, 1.0, m).unwrap();
                weight * gengamma2(&g, &opts).unwrap().value
            },
            1e-9,
        );
        let nested = outer.value / gamma(nu);
        let direct = phi_general(a, b, nu, m, 1e-13).unwrap().value;
        assert!(
            common::rel_diff(nested, direct) < 1e-6,
            "({a},{b},{nu},{m}): {nested} vs {direct}"
        );
    }
}

#[test]
fn closed_forms_match_quadrature_over_grid() {
    for a in [0.3, 1.0, 4.0] {
        for nu in [0.75, 1.5, 3.0] {
            for b in [-1.0, 0.0, 0.9] {
                let spec = IntegralSpec {
                    a,
                    b,
                    nu,
                    ..IntegralSpec::new(IntegralKind::FullLineQuadraticLinear)
                };
                if b * b >= 4.0 * a {
                    assert!(evaluate(&spec, &EvalOptions::default()).is_err());
                    continue;
                }
                let cf = evaluate(&spec, &EvalOptions::default()).unwrap().value;
                let q = quadrature(&spec, 1e-13).unwrap().value;
                assert_relative_eq!(cf, q, max_relative = 1e-10);
            }
            for m in [1.5, 2.0, 3.0] {
                if nu <= 1.0 / m {
                    continue;
                }
                let spec = IntegralSpec {
                    a,
                    nu,
                    m,
                    ..IntegralSpec::new(IntegralKind::HalfLineMonomial)
                };
                let cf = evaluate(&spec, &EvalOptions::default()).unwrap().value;
                let q = quadrature(&spec, 1e-13).unwrap().value;
                assert_relative_eq!(cf, q, max_relative = 1e-10);
            }
        }
    }
}

#[test]
fn forced_routes_agree() {
    let spec = IntegralSpec {
        a: 1.5,
        b: 0.4,
        nu: 1.8,
        m: 3.0,
        ..IntegralSpec::new(IntegralKind::HalfLineGeneral)
    };
    let s = evaluate(
        &spec,
        &EvalOptions {
            method: MethodChoice::Series,
            ..EvalOptions::with_tol(1e-13)
        },
    )
    .unwrap();
    let q = evaluate(
        &spec,
        &EvalOptions {
            method: MethodChoice::Quadrature,
            ..EvalOptions::with_tol(1e-13)
        },
    )
    .unwrap();
    assert_eq!(
        (s.method, q.method),
        (Method::UmbralSeries, Method::Quadrature)
    );
    assert_relative_eq!(s.value, q.value, max_relative = 1e-10);
    assert!(s.abs_err_est > 0.0 && q.abs_err_est > 0.0);
}

#[test]
fn series_reports_carry_diagnostics() {
    let r = phi_hyperelliptic3(1.0, 1.0, 1.0, 2.0, 1e-12).unwrap();
    assert!(r.terms_used > 2 && r.converged && r.abs_err_est > 0.0);
    let r = phi_general(1.0, 1.9, 1.5, 2.0, 1e-12).unwrap();
    assert!(r.converged);
    if r.method == Method::Quadrature {
        assert!(!r.warnings.is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_linear_is_even_in_b(a in 0.1f64..5.0, frac in -0.99f64..0.99, nu in 0.6f64..6.0) {
        let b = frac * 2.0 * a.sqrt();
        let l = f_quadratic_linear(a, b, nu).unwrap().value;
        let r = f_quadratic_linear(a, -b, nu).unwrap().value;
        prop_assert!((l - r).abs() <= 1e-14 * l.abs());
    }

    #[test]
    fn monomial_scale_covariance(a in 0.1f64..5.0, m in 1.0f64..6.0, extra in 0.01f64..4.0, lambda in 0.2f64..5.0) {
        let nu = 1.0 / m + extra;
        let base = phi_monomial(a, nu, m).unwrap().value;
        let scaled = phi_monomial(a * lambda.powf(m), nu, m).unwrap().value;
        prop_assert!(common::rel_diff(scaled, base / lambda) <= 1e-12);
    }

    #[test]
    fn general_reduces_exactly_at_b_zero(a in 0.1f64..5.0, m in 1.0f64..6.0, extra in 0.01f64..4.0) {
        let nu = 1.0 / m + extra;
        prop_assert_eq!(phi_general(a, 0.0, nu, m, 1e-12).unwrap().value, phi_monomial(a, nu, m).unwrap().value);
    }

    #[test]
    fn cubic_reduces_to_monomial(a in 0.1f64..5.0, nu in 0.34f64..5.0) {
        let c = phi_hyperelliptic3(0.0, 0.0, a, nu, 1e-13).unwrap().value;
        let mono = phi_monomial(a, nu, 3.0).unwrap().value;
        prop_assert!((c - mono).abs() <= 1e-12 * mono.max(1.0));
    }

    #[test]
    fn quadratic_matches_general_at_m2(a in 0.2f64..4.0, nu in 0.6f64..5.0) {
        // the full-line integral is twice the half-line one
        let full = f_quadratic(a, nu).unwrap().value;
        let half = phi_monomial(a, nu, 2.0).unwrap().value;
        prop_assert!(common::rel_diff(full, 2.0 * half) <= 1e-14);
    }
}
