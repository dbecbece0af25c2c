//! Compensated summation and the shared truncation policy for every
//! infinite series in the crate.

use serde::{Deserialize, Serialize};

/// Hard cap on the number of terms any series may use.
pub const DEFAULT_MAX_TERMS: usize = 500;

/// Ratio `|S| / max |term|` below which a sum is flagged as cancelled.
pub const CANCELLATION_RATIO: f64 = 1e-6;

/// Result of a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    /// Magnitude of the first omitted term (or the last two retained terms
    /// when the stopping rule fired).
    pub trunc_estimate: f64,
    pub cancellation_flag: bool,
    pub converged: bool,
    /// Largest term magnitude seen; feeds the roundoff part of error reports.
    pub max_term: f64,
}

impl SeriesValue {
    /// A value known exactly up to rounding.
    pub fn exact(value: f64) -> Self {
        SeriesValue {
            value,
            terms_used: 1,
            trunc_estimate: 0.0,
            cancellation_flag: false,
            converged: true,
            max_term: value.abs(),
        }
    }

    /// Truncation estimate plus the roundoff floor `max_term · ε`.
    pub fn abs_err_est(&self) -> f64 {
        self.trunc_estimate + self.max_term * f64::EPSILON
    }
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Stopping-rule knobs shared by all series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    pub tol: f64,
    pub max_terms: usize,
    /// Number of consecutive small terms required to stop. Two by default;
    /// series with structural zeros every `m` terms need a window of `m`.
    pub window: usize,
}

impl SeriesPolicy {
    pub fn new(tol: f64, max_terms: usize) -> Self {
        SeriesPolicy {
            tol,
            max_terms,
            window: 2,
        }
    }

    pub fn with_window(mut self, window: usize) -> Self {
        self.window = window.max(2);
        self
    }
}

/// Sums `term(0), term(1), …` until `window` consecutive terms satisfy
/// `|term| ≤ tol · max(1, |S|)` or the cap is hit.
pub fn sum_series<F>(policy: SeriesPolicy, mut term: F) -> SeriesValue
where
    F: FnMut(usize) -> f64,
{
    let mut acc = NeumaierSum::new();
    let mut max_term = 0.0f64;
    let mut small_run = 0usize;
    let mut tail = 0.0f64;
    let mut n = 0usize;
    let mut converged = false;
    while n < policy.max_terms {
        let t = term(n);
        acc.add(t);
        max_term = max_term.max(t.abs());
        n += 1;
        if !t.is_finite() {
            break;
        }
        let s = acc.value();
        if t.abs() <= policy.tol * s.abs().max(1.0) {
            small_run += 1;
            tail = tail.max(t.abs());
        } else {
            small_run = 0;
            tail = 0.0;
        }
        if small_run >= policy.window {
            converged = true;
            break;
        }
    }
    let value = acc.value();
    let trunc_estimate = if converged {
        tail
    } else {
        // first omitted term
        term(n).abs()
    };
    SeriesValue {
        value,
        terms_used: n,
        trunc_estimate,
        cancellation_flag: value.abs() < CANCELLATION_RATIO * max_term,
        converged: converged && value.is_finite(),
        max_term,
    }
}

/// Fixed-length partial sum `Σ_{n=0}^{last} term(n)` with the first omitted
/// term as truncation estimate. `converged` compares that estimate with `tol`.
pub fn partial_sum<F>(last: usize, tol: f64, mut term: F) -> SeriesValue
where
    F: FnMut(usize) -> f64,
{
    let mut acc = NeumaierSum::new();
    let mut max_term = 0.0f64;
    for n in 0..=last {
        let t = term(n);
        max_term = max_term.max(t.abs());
        acc.add(t);
    }
    let value = acc.value();
    let trunc_estimate = term(last + 1).abs();
    SeriesValue {
        value,
        terms_used: last + 1,
        trunc_estimate,
        cancellation_flag: value.abs() < CANCELLATION_RATIO * max_term,
        converged: trunc_estimate <= tol * value.abs().max(1.0) && value.is_finite(),
        max_term,
    }
}

/// Multiplies `sign · exp(ln_mag)` while keeping zero magnitudes exact.
#[inline]
pub(crate) fn from_log(sign: f64, ln_mag: f64) -> f64 {
    if sign == 0.0 || ln_mag == f64::NEG_INFINITY {
        0.0
    } else {
        sign * ln_mag.exp()
    }
}

/// `ln |x|` and the sign of `x`, with `0` mapped to `(-∞, 0)`.
#[inline]
pub(crate) fn ln_abs(x: f64) -> (f64, f64) {
    if x == 0.0 {
        (f64::NEG_INFINITY, 0.0)
    } else {
        (x.abs().ln(), x.signum())
    }
}

/// Sign of `x^k` for integer `k`, treating `0^0 = 1`.
#[inline]
pub(crate) fn pow_sign(sign: f64, k: usize) -> f64 {
    if k == 0 {
        1.0
    } else if sign == 0.0 {
        0.0
    } else if sign < 0.0 && k % 2 == 1 {
        -1.0
    } else {
        1.0
    }
}

/// `k · ln|x|` with `0 · ln 0 = 0`.
#[inline]
pub(crate) fn pow_ln(ln_x: f64, k: usize) -> f64 {
    if k == 0 {
        0.0
    } else {
        k as f64 * ln_x
    }
}
