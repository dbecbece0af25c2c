use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::oracles::QuadResult;
use crate::series::SeriesValue;
use crate::{EvalOptions, MethodChoice};

/// How a reported value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Series,
    UmbralSeries,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Series => "series",
            Method::UmbralSeries => "umbral_series",
            Method::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Value with an error estimate and provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub value: f64,
    /// Zero only for closed forms.
    pub abs_err_est: f64,
    pub method: Method,
    pub terms_used: usize,
    pub converged: bool,
    /// Non-empty whenever a fallback was taken.
    pub warnings: Vec<String>,
}

impl EvalReport {
    pub fn closed_form(value: f64) -> Self {
        EvalReport {
            value,
            abs_err_est: 0.0,
            method: Method::ClosedForm,
            terms_used: 0,
            converged: true,
            warnings: Vec::new(),
        }
    }

    pub fn from_series(sv: &SeriesValue, method: Method) -> Self {
        let mut warnings = Vec::new();
        if !sv.converged {
            warnings.push(format!(
                "series not converged after {} terms (first omitted term {:e})",
                sv.terms_used, sv.trunc_estimate
            ));
        }
        if sv.cancellation_flag {
            warnings.push(format!(
                "cancellation: |sum| = {:e} against largest term {:e}",
                sv.value.abs(),
                sv.max_term
            ));
        }
        EvalReport {
            value: sv.value,
            abs_err_est: sv.abs_err_est(),
            method,
            terms_used: sv.terms_used,
            converged: sv.converged,
            warnings,
        }
    }

    pub fn from_quad(q: &QuadResult) -> Self {
        EvalReport {
            value: q.value,
            // two levels can agree to the last bit; the rounding of the value remains
            abs_err_est: q.abs_err_est.max(f64::EPSILON * q.value.abs()),
            method: Method::Quadrature,
            terms_used: q.evaluations,
            converged: q.converged,
            warnings: Vec::new(),
        }
    }

    pub fn with_warning(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }
}

/// Turns a quadrature into a report, or an error when it missed the tolerance.
pub(crate) fn quad_report(op: &'static str, q: QuadResult) -> Result<EvalReport> {
    if q.converged {
        Ok(EvalReport::from_quad(&q))
    } else {
        Err(Error::NotConverged {
            op,
            estimate: q.value,
            abs_err: q.abs_err_est,
        })
    }
}

/// Shared series/quadrature routing.
///
/// `avoid_series` is a reason to skip the series up front; `quad` is `None`
/// when no quadrature route exists for the arguments.
pub(crate) fn route<S, Q>(
    op: &'static str,
    opts: &EvalOptions,
    method: Method,
    avoid_series: Option<String>,
    series: S,
    quad: Option<Q>,
) -> Result<EvalReport>
where
    S: FnOnce() -> Result<SeriesValue>,
    Q: FnOnce() -> QuadResult,
{
    match (opts.method, quad) {
        (MethodChoice::Quadrature, Some(q)) => quad_report(op, q()),
        (MethodChoice::Quadrature, None) => Err(Error::domain(
            op,
            "no quadrature route for these arguments (the defining integral diverges)",
        )),
        (MethodChoice::Series, _) => Ok(EvalReport::from_series(&series()?, method)),
        (MethodChoice::Auto, Some(q)) if avoid_series.is_some() => {
            let reason = avoid_series.unwrap_or_default();
            quad_report(op, q())
                .map(|r| r.with_warning(format!("fallback to quadrature: {reason}")))
        }
        (MethodChoice::Auto, quad) => {
            let sv = series()?;
            let trouble = if !sv.converged {
                Some("series did not converge")
            } else if sv.cancellation_flag {
                Some("series cancellation")
            } else {
                None
            };
            match (trouble, quad) {
                (None, _) => Ok(EvalReport::from_series(&sv, method)),
                (Some(why), Some(q)) => {
                    let r = quad_report(op, q())?;
                    Ok(r.with_warning(format!(
                        "fallback to quadrature: {why} (series value {:e}, {} terms)",
                        sv.value, sv.terms_used
                    )))
                }
                (Some(_), None) => Ok(EvalReport::from_series(&sv, method)),
            }
        }
    }
}
