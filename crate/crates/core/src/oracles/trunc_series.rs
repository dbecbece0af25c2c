//! Truncated power series `c₀ + c₁x + … + c_N x^N`.

use std::ops::{Add, Mul, Sub};

/// Default truncation order for Taylor-coefficient oracles.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries {
    coeffs: Vec<f64>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![0.0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1.0, order)
    }

    /// `c · x^k` truncated at `order`.
    pub fn monomial(k: usize, c: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from `c₀..c_N`. An empty slice gives the order-0 zero series.
    pub fn from_coeffs(coeffs: &[f64]) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        TruncSeries {
            coeffs: coeffs.to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn scale(&self, c: f64) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, 0.0);
        TruncSeries { coeffs }
    }

    /// Term-by-term derivative; the order drops by one (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncSeries {
            coeffs: (1..self.coeffs.len())
                .map(|k| self.coeffs[k] * k as f64)
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; the order rises by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / (k as f64 + 1.0)),
        );
        TruncSeries { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k] + rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k] - rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![0.0; order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }
}

/// `(1 + u)^{−ν} = Σ_k C(−ν, k) u^k` for a series `u` with zero constant term.
///
/// Powers of `u` start at degree `k`, so the sum stops at `k = order`.
pub fn series_pow_binomial(u: &TruncSeries, nu: f64) -> TruncSeries {
    assert!(
        u.coeff(0) == 0.0,
        "series_pow_binomial needs a zero constant term"
    );
    let order = u.order();
    let mut result = TruncSeries::one(order);
    let mut power = TruncSeries::one(order);
    let mut binom = 1.0f64;
    for k in 1..=order {
        power = &power * u;
        binom *= (-nu - (k as f64 - 1.0)) / k as f64;
        result = &result + &power.scale(binom);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn zero_argument_gives_one() {
        let s = series_pow_binomial(&TruncSeries::zero(8), 2.7);
        assert_eq!(s, TruncSeries::one(8));
    }

    #[test]
    fn quadratic_argument_low_coefficients() {
        let (a, b, nu) = (1.7, -0.6, 2.5);
        let u = &TruncSeries::monomial(1, b, 16) + &TruncSeries::monomial(2, a, 16);
        let s = series_pow_binomial(&u, nu);
        assert_relative_eq!(s.coeff(0), 1.0);
        assert_relative_eq!(s.coeff(1), -nu * b, max_relative = 1e-15);
        assert_relative_eq!(
            s.coeff(2),
            -nu * a + nu * (nu + 1.0) * b * b / 2.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn geometric_series_in_cube() {
        let u = TruncSeries::monomial(3, 1.0, 12);
        let s = series_pow_binomial(&u, 1.0);
        let want = [
            1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 1.0,
        ];
        assert_eq!(s.coeffs(), &want);
    }

    #[test]
    fn multiplication_truncates_at_lower_order() {
        let a = TruncSeries::from_coeffs(&[1.0, 1.0, 1.0, 1.0]);
        let b = TruncSeries::from_coeffs(&[1.0, -1.0]);
        assert_eq!((&a * &b).coeffs(), &[1.0, 0.0]);
    }

    #[test]
    fn evaluation_matches_closed_form() {
        let u = &TruncSeries::monomial(1, 0.25, 40) + &TruncSeries::monomial(2, 0.5, 40);
        let s = series_pow_binomial(&u, 1.0);
        let x = 0.3;
        assert_relative_eq!(
            s.eval(x),
            1.0 / (1.0 + 0.25 * x + 0.5 * x * x),
            max_relative = 1e-13
        );
    }

    proptest! {
        // Up to one rounding in c/(k+1)·(k+1).
        #[test]
        fn derivative_undoes_integral(coeffs in proptest::collection::vec(-1e3f64..1e3, 1..20)) {
            let s = TruncSeries::from_coeffs(&coeffs);
            let back = s.integral().derivative();
            prop_assert_eq!(back.order(), s.order());
            for (x, y) in back.coeffs().iter().zip(s.coeffs()) {
                prop_assert!((x - y).abs() <= f64::EPSILON * y.abs());
            }
        }

        #[test]
        fn derivative_undoes_integral_exactly_on_integer_grid(ks in proptest::collection::vec(-1000i32..1000, 1..20)) {
            let coeffs: Vec<f64> = ks.iter().enumerate().map(|(k, &c)| c as f64 * (k as f64 + 1.0)).collect();
            let s = TruncSeries::from_coeffs(&coeffs);
            prop_assert_eq!(s.integral().derivative(), s);
        }
    }
}
