//! C ABI for `hermite-elliptic`.
//!
//! Evaluation settings and the last error message live in an opaque
//! [`HeContext`] created by [`he_context_new`] and released by
//! [`he_context_free`]. Every fallible call returns an [`HeStatus`] and
//! writes its result through an out-pointer; nothing is written on failure.
//! Panics are caught at the boundary and reported as `HE_STATUS_PANIC`.
//!
//! A context must not be used from two threads at once. Distinct contexts
//! are independent.

// `!(x > 0.0)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hermite_elliptic::gengamma::{self, GammaArgs2, GammaArgs3};
use hermite_elliptic::hermite::{self, PolyIndex};
use hermite_elliptic::integrals::{self, IntegralKind, IntegralSpec};
use hermite_elliptic::qpoly::{self, QPolyParams};
use hermite_elliptic::{Error, EvalOptions, EvalReport, Method, MethodChoice};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeStatus {
    Ok = 0,
    Domain = 1,
    Range = 2,
    Pole = 3,
    NotConverged = 4,
    NullPointer = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeMethod {
    ClosedForm = 0,
    Series = 1,
    UmbralSeries = 2,
    Quadrature = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeMethodChoice {
    Auto = 0,
    Series = 1,
    Quadrature = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeIntegralKind {
    FullLineQuadratic = 0,
    FullLineQuadraticLinear = 1,
    HalfLineMonomial = 2,
    HalfLineGeneral = 3,
    HyperElliptic3 = 4,
    IncompleteFinite = 5,
}

/// Parameters of one integral; only the fields used by `kind` are read.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeIntegralSpec {
    pub kind: HeIntegralKind,
    pub a: f64,
    pub b: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub nu: f64,
    pub m: f64,
    pub upper: f64,
}

/// Value with its diagnostics. Warning texts are available through
/// [`he_last_warnings`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeReport {
    pub value: f64,
    pub abs_err_est: f64,
    pub method: HeMethod,
    pub terms_used: u64,
    pub converged: bool,
    pub warning_count: u32,
}

/// Opaque evaluation context.
pub struct HeContext {
    opts: EvalOptions,
    last_error: CString,
    last_warnings: CString,
}

fn status_of(e: &Error) -> HeStatus {
    match e {
        Error::Domain { .. } => HeStatus::Domain,
        Error::Range { .. } => HeStatus::Range,
        Error::Pole { .. } => HeStatus::Pole,
        Error::NotConverged { .. } => HeStatus::NotConverged,
    }
}

fn c_string(s: &str) -> CString {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed")
}

fn method_of(m: Method) -> HeMethod {
    match m {
        Method::ClosedForm => HeMethod::ClosedForm,
        Method::Series => HeMethod::Series,
        Method::UmbralSeries => HeMethod::UmbralSeries,
        Method::Quadrature => HeMethod::Quadrature,
    }
}

fn kind_of(k: HeIntegralKind) -> IntegralKind {
    match k {
        HeIntegralKind::FullLineQuadratic => IntegralKind::FullLineQuadratic,
        HeIntegralKind::FullLineQuadraticLinear => IntegralKind::FullLineQuadraticLinear,
        HeIntegralKind::HalfLineMonomial => IntegralKind::HalfLineMonomial,
        HeIntegralKind::HalfLineGeneral => IntegralKind::HalfLineGeneral,
        HeIntegralKind::HyperElliptic3 => IntegralKind::HyperElliptic3,
        HeIntegralKind::IncompleteFinite => IntegralKind::IncompleteFinite,
    }
}

fn spec_of(s: &HeIntegralSpec) -> IntegralSpec {
    IntegralSpec {
        kind: kind_of(s.kind),
        a: s.a,
        b: s.b,
        a1: s.a1,
        a2: s.a2,
        a3: s.a3,
        nu: s.nu,
        m: s.m,
        upper: s.upper,
    }
}

impl HeContext {
    fn fail(&mut self, status: HeStatus, msg: &str) -> HeStatus {
        self.last_error = c_string(msg);
        status
    }

    /// Runs `f` and stores its report, or records the error.
    fn report(
        &mut self,
        out: *mut HeReport,
        f: impl FnOnce(&EvalOptions) -> hermite_elliptic::Result<EvalReport>,
    ) -> HeStatus {
        if out.is_null() {
            return self.fail(HeStatus::NullPointer, "output pointer is null");
        }
        let opts = self.opts;
        match catch_unwind(AssertUnwindSafe(|| f(&opts))) {
            Ok(Ok(r)) => {
                self.last_error = CString::default();
                self.last_warnings = c_string(&r.warnings.join("\n"));
                // SAFETY: checked non-null; the caller guarantees it points to writable memory.
                unsafe {
                    *out = HeReport {
                        value: r.value,
                        abs_err_est: r.abs_err_est,
                        method: method_of(r.method),
                        terms_used: r.terms_used as u64,
                        converged: r.converged,
                        warning_count: r.warnings.len() as u32,
                    };
                }
                HeStatus::Ok
            }
            Ok(Err(e)) => self.fail(status_of(&e), &e.to_string()),
            Err(_) => self.fail(HeStatus::Panic, "internal panic"),
        }
    }

    fn scalar(
        &mut self,
        out: *mut f64,
        f: impl FnOnce(&EvalOptions) -> hermite_elliptic::Result<f64>,
    ) -> HeStatus {
        if out.is_null() {
            return self.fail(HeStatus::NullPointer, "output pointer is null");
        }
        let opts = self.opts;
        match catch_unwind(AssertUnwindSafe(|| f(&opts))) {
            Ok(Ok(v)) => {
                self.last_error = CString::default();
                // SAFETY: checked non-null; the caller guarantees it points to writable memory.
                unsafe { *out = v };
                HeStatus::Ok
            }
            Ok(Err(e)) => self.fail(status_of(&e), &e.to_string()),
            Err(_) => self.fail(HeStatus::Panic, "internal panic"),
        }
    }
}

/// Resolves a context pointer or returns `HE_STATUS_NULL_POINTER`.
macro_rules! ctx {
    ($p:expr) => {
        // SAFETY: the caller passes a pointer from `he_context_new` that is not in use elsewhere.
        match unsafe { $p.as_mut() } {
            Some(c) => c,
            None => return HeStatus::NullPointer,
        }
    };
}

/// New context with tolerance `1e-10`, 500 series terms and automatic routing.
#[no_mangle]
pub extern "C" fn he_context_new() -> *mut HeContext {
    Box::into_raw(Box::new(HeContext {
        opts: EvalOptions::default(),
        last_error: CString::default(),
        last_warnings: CString::default(),
    }))
}

/// Releases a context. Null is ignored.
///
/// # Safety
/// `ctx` must come from [`he_context_new`] and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn he_context_free(ctx: *mut HeContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn he_context_set_tol(ctx: *mut HeContext, tol: f64) -> HeStatus {
    let c = ctx!(ctx);
    if !(tol > 0.0 && tol < 1.0) {
        return c.fail(HeStatus::Domain, "tolerance must lie in (0, 1)");
    }
    c.opts.tol = tol;
    HeStatus::Ok
}

/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn he_context_set_max_terms(ctx: *mut HeContext, max_terms: u32) -> HeStatus {
    let c = ctx!(ctx);
    if max_terms < 2 {
        return c.fail(HeStatus::Domain, "at least two series terms are needed");
    }
    c.opts.max_terms = max_terms as usize;
    HeStatus::Ok
}

/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn he_context_set_method(
    ctx: *mut HeContext,
    method: HeMethodChoice,
) -> HeStatus {
    let c = ctx!(ctx);
    c.opts.method = match method {
        HeMethodChoice::Auto => MethodChoice::Auto,
        HeMethodChoice::Series => MethodChoice::Series,
        HeMethodChoice::Quadrature => MethodChoice::Quadrature,
    };
    HeStatus::Ok
}

/// Message of the last failed call on `ctx`, or an empty string. The pointer
/// stays valid until the next call on `ctx`. Returns null for a null context.
///
/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn he_last_error(ctx: *const HeContext) -> *const c_char {
    ctx.as_ref().map_or(ptr::null(), |c| c.last_error.as_ptr())
}

/// Newline-separated warnings of the last successful report on `ctx`.
/// Same lifetime rules as [`he_last_error`].
///
/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn he_last_warnings(ctx: *const HeContext) -> *const c_char {
    ctx.as_ref()
        .map_or(ptr::null(), |c| c.last_warnings.as_ptr())
}

/// Evaluates an integral through its primary route.
///
/// # Safety
/// `ctx` must be null or a live context; `spec` must be null or readable;
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn he_integral_eval(
    ctx: *mut HeContext,
    spec: *const HeIntegralSpec,
    out: *mut HeReport,
) -> HeStatus {
    let c = ctx!(ctx);
    let Some(s) = spec.as_ref() else {
        return c.fail(HeStatus::NullPointer, "spec pointer is null");
    };
    let spec = spec_of(s);
    c.report(out, |o| integrals::evaluate(&spec, o))
}

/// Evaluates an integral by direct quadrature.
///
/// # Safety
/// As [`he_integral_eval`].
#[no_mangle]
pub unsafe extern "C" fn he_integral_quadrature(
    ctx: *mut HeContext,
    spec: *const HeIntegralSpec,
    out: *mut HeReport,
) -> HeStatus {
    let c = ctx!(ctx);
    let Some(s) = spec.as_ref() else {
        return c.fail(HeStatus::NullPointer, "spec pointer is null");
    };
    let spec = spec_of(s);
    c.report(out, |o| integrals::quadrature(&spec, o.tol))
}

/// `Γ(x₁, x_m | ν; m)`.
///
/// # Safety
/// `ctx` must be null or a live context; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn he_gengamma2(
    ctx: *mut HeContext,
    x1: f64,
    xm: f64,
    nu: f64,
    m: f64,
    out: *mut HeReport,
) -> HeStatus {
    let c = ctx!(ctx);
    c.report(out, |o| {
        gengamma::gengamma2(&GammaArgs2::new(x1, xm, nu, m)?, o)
    })
}

/// `Γ(x₁, x₂, x₃ | ν)` by its series.
///
/// # Safety
/// As [`he_gengamma2`].
#[no_mangle]
pub unsafe extern "C" fn he_gengamma3(
    ctx: *mut HeContext,
    x1: f64,
    x2: f64,
    x3: f64,
    nu: f64,
    out: *mut HeReport,
) -> HeStatus {
    let c = ctx!(ctx);
    c.report(out, |o| {
        let sv = gengamma::gengamma3_with(&GammaArgs3::new(x1, x2, x3, nu)?, o)?;
        Ok(EvalReport::from_series(&sv, Method::Series))
    })
}

/// `H_n^(m)(x, y)`.
///
/// # Safety
/// As [`he_gengamma2`], with `out` pointing to a double.
#[no_mangle]
pub unsafe extern "C" fn he_hermite_gh(
    ctx: *mut HeContext,
    n: u32,
    m: u32,
    x: f64,
    y: f64,
    out: *mut f64,
) -> HeStatus {
    let c = ctx!(ctx);
    c.scalar(out, |_| {
        Ok(hermite::hermite_gh(
            PolyIndex::new(n as usize, m as usize)?,
            x,
            y,
        ))
    })
}

/// `Q_n(a, b | ν, m)`.
///
/// # Safety
/// As [`he_hermite_gh`].
#[no_mangle]
pub unsafe extern "C" fn he_q_poly(
    ctx: *mut HeContext,
    n: u32,
    a: f64,
    b: f64,
    nu: f64,
    m: u32,
    out: *mut f64,
) -> HeStatus {
    let c = ctx!(ctx);
    c.scalar(out, |_| {
        Ok(qpoly::q_poly(
            n as usize,
            &QPolyParams::new(a, b, nu, m as usize)?,
        ))
    })
}

/// `H_{−(n+1)}^(m)(x₁, x_m)`.
///
/// # Safety
/// As [`he_hermite_gh`].
#[no_mangle]
pub unsafe extern "C" fn he_h_minus_order(
    ctx: *mut HeContext,
    n: u32,
    x1: f64,
    xm: f64,
    m: f64,
    out: *mut f64,
) -> HeStatus {
    let c = ctx!(ctx);
    c.scalar(out, |_| gengamma::h_minus_order(n as usize, x1, xm, m))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn he_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(s) => s,
            Err(_) => panic!("version string has an interior NUL"),
        };
    VERSION.as_ptr()
}
