//! Thin wrappers over the platform-grade Gamma and error functions.
//!
//! The implementations come from `libm` (a port of musl's math library);
//! this module only adds the log-magnitude helpers the series code needs.

/// Euler Gamma function for real arguments. Negative non-integers go
/// through the library's reflection branch; poles return an infinity or NaN.
#[inline]
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `ln |Γ(x)|` together with the sign of `Γ(x)`.
#[inline]
pub fn ln_gamma_signed(x: f64) -> (f64, f64) {
    let (lg, sign) = libm::lgamma_r(x);
    (lg, if sign < 0 { -1.0 } else { 1.0 })
}

/// `ln |Γ(x)|`.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `ln n!`
#[inline]
pub fn ln_factorial(n: usize) -> f64 {
    if n < FACTORIALS.len() {
        FACTORIALS[n].ln()
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// `n!` as a float; infinite beyond 170.
pub fn factorial(n: usize) -> f64 {
    FACTORIALS.get(n).copied().unwrap_or(f64::INFINITY)
}

/// True when `x` is a pole of Γ (zero or a negative integer).
#[inline]
pub fn is_gamma_pole(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Complementary error function.
#[inline]
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Scaled complementary error function `exp(x²)·erfc(x)`.
///
/// Direct product below `x = 5`; above that the Laplace continued fraction,
/// which avoids the underflow of `erfc` and the overflow of `exp(x²)`.
pub fn erfcx(x: f64) -> f64 {
    if x < 5.0 {
        return (x * x).exp() * erfc(x);
    }
    // erfcx(x) = 1/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), evaluated bottom-up.
    let mut tail = x;
    for k in (1..=60).rev() {
        tail = x + (k as f64 / 2.0) / tail;
    }
    1.0 / (std::f64::consts::PI.sqrt() * tail)
}

static FACTORIALS: [f64; 171] = {
    let mut table = [1.0f64; 171];
    let mut i = 1;
    while i < 171 {
        table[i] = table[i - 1] * i as f64;
        i += 1;
    }
    table
};

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn gamma_reference_values() {
        // Γ(1/2) = √π, Γ(1/3) and Γ(2/3) from the reflection identity.
        assert_relative_eq!(gamma(0.5), PI.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(
            gamma(1.0 / 3.0) * gamma(2.0 / 3.0),
            2.0 * PI / 3f64.sqrt(),
            max_relative = 1e-14
        );
        assert_relative_eq!(gamma(10.0), 362_880.0, max_relative = 1e-15);
        assert_relative_eq!(gamma(30.5), 4.822_696_933_490_909e31, max_relative = 1e-13);
        assert_relative_eq!(gamma(-1.5), 4.0 * PI.sqrt() / 3.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(-2.5), -8.0 * PI.sqrt() / 15.0, max_relative = 1e-14);
    }

    #[test]
    fn gamma_recurrence_holds_to_contract() {
        let mut x = 0.05;
        while x < 60.0 {
            assert_relative_eq!(gamma(x + 1.0), x * gamma(x), max_relative = 1e-13);
            x += 0.37;
        }
    }

    #[test]
    fn log_helpers_agree_with_direct_values() {
        for &x in &[0.3, 1.7, 12.25, 80.5] {
            assert_relative_eq!(ln_gamma(x).exp(), gamma(x), max_relative = 1e-13);
        }
        let (lg, s) = ln_gamma_signed(-0.5);
        assert_eq!(s, -1.0);
        assert_relative_eq!(lg.exp(), 2.0 * PI.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(ln_factorial(200), ln_gamma(201.0));
        assert_eq!(factorial(5), 120.0);
        assert!(factorial(171).is_infinite());
    }

    #[test]
    fn poles_are_detected() {
        assert!(is_gamma_pole(0.0));
        assert!(is_gamma_pole(-3.0));
        assert!(!is_gamma_pole(-2.5));
        assert!(!is_gamma_pole(1.0));
    }

    #[test]
    fn erfcx_is_continuous_across_the_branch() {
        let direct = (25.0f64).exp() * erfc(5.0);
        assert_relative_eq!(erfcx(5.0), direct, max_relative = 1e-12);
        // Large-argument asymptotics: erfcx(x) ~ 1/(x√π) (1 - 1/(2x²)).
        let x = 1e3;
        assert_relative_eq!(
            erfcx(x),
            (1.0 - 0.5 / (x * x)) / (x * PI.sqrt()),
            max_relative = 1e-11
        );
    }
}
