//! C ABI over `bigeo`.
//!
//! Every fallible entry point returns a [`BigeoStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`bigeo_last_error`]. Geometric reals cross the boundary as their
//! natural logs, so `e^k` is passed as `k`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bigeo::apps::price_elasticity;
use bigeo::ganalysis::{
    g_derivative_analytic, g_derivative_n, g_derivative_numeric, mvt_witness, ordinary_from_g,
    Sidedness,
};
use bigeo::gdiff::{backward_diff, forward_diff};
use bigeo::gtaylor::{exp_approx, linear_approx};
use bigeo::gtrig::triplet_generate;
use bigeo::{GError, GFunction, GReal};

/// Status codes. `PARSE`, `DOMAIN` and `IO` share their values with the
/// command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BigeoStatus {
    Ok = 0,
    Parse = 2,
    Domain = 3,
    Io = 4,
    Range = 5,
    NoLimit = 6,
    Bracket = 7,
    Unsupported = 8,
    Precondition = 9,
    NullPointer = 10,
    InvalidUtf8 = 11,
    Panic = 12,
}

impl From<&GError> for BigeoStatus {
    fn from(e: &GError) -> Self {
        match e.root() {
            GError::Parse { .. } => BigeoStatus::Parse,
            GError::Domain(_) | GError::Sign(_) | GError::DivisionByGeometricZero => {
                BigeoStatus::Domain
            }
            GError::Range(_) => BigeoStatus::Range,
            GError::NoLimit(_) => BigeoStatus::NoLimit,
            GError::Bracket(_) => BigeoStatus::Bracket,
            GError::UnsupportedOrder { .. } | GError::NotAnalytic(_) => BigeoStatus::Unsupported,
            GError::Precondition(_) | GError::AtOrder { .. } => BigeoStatus::Precondition,
        }
    }
}

/// Opaque parsed function.
pub struct BigeoFunction {
    inner: GFunction,
}

/// First G-derivative from the numeric limit. When `two_sided` is 0 only the
/// one-sided logs are meaningful and `log_value` is NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BigeoGDerivative {
    pub two_sided: i32,
    pub log_value: f64,
    pub left_log: f64,
    pub right_log: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

enum Failure {
    Math(GError),
    Status(BigeoStatus, &'static str),
}

impl From<GError> for Failure {
    fn from(e: GError) -> Self {
        Failure::Math(e)
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BigeoStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BigeoStatus::Ok,
        Ok(Err(Failure::Math(e))) => {
            let status = BigeoStatus::from(&e);
            set_error(e.to_string());
            status
        }
        Ok(Err(Failure::Status(status, msg))) => {
            set_error(msg.to_string());
            status
        }
        Err(_) => {
            set_error("panic inside bigeo".to_string());
            BigeoStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure::Status(BigeoStatus::NullPointer, "null pointer argument")
}

/// # Safety
/// `p` must be null or valid for a write of `T`.
unsafe fn write<T>(p: *mut T, v: T) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null());
    }
    p.write(v);
    Ok(())
}

/// # Safety
/// `f` must be null or a live handle from [`bigeo_function_parse`].
unsafe fn handle<'a>(f: *const BigeoFunction) -> Result<&'a GFunction, Failure> {
    f.as_ref().map(|h| &h.inner).ok_or_else(null)
}

fn greal(log: f64) -> Result<GReal, Failure> {
    Ok(GReal::from_log(log)?)
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn bigeo_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Parses `text` into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_function_parse(
    text: *const c_char,
    out: *mut *mut BigeoFunction,
) -> BigeoStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure::Status(BigeoStatus::InvalidUtf8, "input is not UTF-8"))?;
        let f = GFunction::parse(s)?;
        write(out, Box::into_raw(Box::new(BigeoFunction { inner: f })))
    })
}

/// Handle for `|x|^G`: `x` on `[1, ∞)` and `1/x` on `(0, 1)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_function_geometric_abs(out: *mut *mut BigeoFunction) -> BigeoStatus {
    guard(|| {
        let f = BigeoFunction {
            inner: GFunction::geometric_abs(),
        };
        write(out, Box::into_raw(Box::new(f)))
    })
}

/// # Safety
/// `f` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bigeo_function_free(f: *mut BigeoFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_function_eval(
    f: *const BigeoFunction,
    x: f64,
    out: *mut f64,
) -> BigeoStatus {
    guard(|| write(out, handle(f)?.eval(x)?))
}

/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_gderiv_numeric(
    f: *const BigeoFunction,
    x: f64,
    out: *mut BigeoGDerivative,
) -> BigeoStatus {
    guard(|| {
        let r = g_derivative_numeric(handle(f)?, x)?;
        let d = match r.outcome {
            Sidedness::TwoSided(v) => BigeoGDerivative {
                two_sided: 1,
                log_value: v.log_value(),
                left_log: v.log_value(),
                right_log: v.log_value(),
            },
            Sidedness::OneSided { left, right } => BigeoGDerivative {
                two_sided: 0,
                log_value: f64::NAN,
                left_log: left.log_value(),
                right_log: right.log_value(),
            },
        };
        write(out, d)
    })
}

/// `ln f^G(x)` through `x·f'/f`; needs a parsed expression.
///
/// # Safety
/// `f` must be a live handle and `out_log` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_gderiv_analytic(
    f: *const BigeoFunction,
    x: f64,
    out_log: *mut f64,
) -> BigeoStatus {
    guard(|| {
        let e = handle(f)?.require_expr()?;
        write(out_log, g_derivative_analytic(e, x)?.log_value())
    })
}

/// `ln f^{[n]}(x)`.
///
/// # Safety
/// `f` must be a live handle and `out_log` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_gderiv_n(
    f: *const BigeoFunction,
    x: f64,
    n: u32,
    out_log: *mut f64,
) -> BigeoStatus {
    guard(|| {
        write(
            out_log,
            g_derivative_n(handle(f)?, x, n as usize)?.log_value(),
        )
    })
}

/// `f'(x)` recovered from the G-derivative.
///
/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_ordinary_from_g(
    f: *const BigeoFunction,
    x: f64,
    out: *mut f64,
) -> BigeoStatus {
    guard(|| write(out, ordinary_from_g(handle(f)?, x)?))
}

/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_exp_approx(
    f: *const BigeoFunction,
    a: f64,
    order: u32,
    x: f64,
    out: *mut f64,
) -> BigeoStatus {
    guard(|| write(out, exp_approx(handle(f)?, a, order as usize, x)?))
}

/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_linear_approx(
    f: *const BigeoFunction,
    a: f64,
    x: f64,
    out: *mut f64,
) -> BigeoStatus {
    guard(|| write(out, linear_approx(handle(f)?, a, x)?))
}

/// `ln Δ^n_G f(a)` with geometric step `e^{h_log}`.
///
/// # Safety
/// `f` must be a live handle and `out_log` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_forward_diff(
    f: *const BigeoFunction,
    a: f64,
    h_log: f64,
    n: u32,
    out_log: *mut f64,
) -> BigeoStatus {
    guard(|| {
        write(
            out_log,
            forward_diff(handle(f)?, a, greal(h_log)?, n)?.log_value(),
        )
    })
}

/// `ln ∇^n_G f(a)` with geometric step `e^{h_log}`.
///
/// # Safety
/// `f` must be a live handle and `out_log` writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_backward_diff(
    f: *const BigeoFunction,
    a: f64,
    h_log: f64,
    n: u32,
    out_log: *mut f64,
) -> BigeoStatus {
    guard(|| {
        write(
            out_log,
            backward_diff(handle(f)?, a, greal(h_log)?, n)?.log_value(),
        )
    })
}

/// Log of a positive real.
///
/// # Safety
/// `out_log` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_greal_from_value(x: f64, out_log: *mut f64) -> BigeoStatus {
    guard(|| write(out_log, GReal::from_value(x)?.log_value()))
}

/// `x ⊕ y`.
///
/// # Safety
/// `out_log` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_g_add(x_log: f64, y_log: f64, out_log: *mut f64) -> BigeoStatus {
    guard(|| write(out_log, greal(x_log)?.oplus(greal(y_log)?)?.log_value()))
}

/// `x ⊖ y`.
///
/// # Safety
/// `out_log` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_g_sub(x_log: f64, y_log: f64, out_log: *mut f64) -> BigeoStatus {
    guard(|| write(out_log, greal(x_log)?.ominus(greal(y_log)?)?.log_value()))
}

/// `x ⊙ y`.
///
/// # Safety
/// `out_log` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_g_mul(x_log: f64, y_log: f64, out_log: *mut f64) -> BigeoStatus {
    guard(|| write(out_log, greal(x_log)?.odot(greal(y_log)?)?.log_value()))
}

/// `x ⊘ y`; fails with `DOMAIN` when `y` is the geometric zero.
///
/// # Safety
/// `out_log` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_g_div(x_log: f64, y_log: f64, out_log: *mut f64) -> BigeoStatus {
    guard(|| write(out_log, greal(x_log)?.oslash(greal(y_log)?)?.log_value()))
}

/// Elasticity `E_p` and resiliency `e^{E_p}` of a demand curve.
///
/// # Safety
/// `f` must be a live handle; both out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_price_elasticity(
    f: *const BigeoFunction,
    price: f64,
    elasticity: *mut f64,
    resiliency: *mut f64,
) -> BigeoStatus {
    guard(|| {
        if elasticity.is_null() || resiliency.is_null() {
            return Err(null());
        }
        let r = price_elasticity(handle(f)?, price)?;
        write(elasticity, r.elasticity)?;
        write(resiliency, r.resiliency.value())
    })
}

/// Mean-value witness on `[a, b]`. `*found` is 0 when no `c` exists, in
/// which case `*c` is NaN.
///
/// # Safety
/// `f` must be a live handle; all out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_mvt_witness(
    f: *const BigeoFunction,
    a: f64,
    b: f64,
    quotient_log: *mut f64,
    c: *mut f64,
    found: *mut i32,
) -> BigeoStatus {
    guard(|| {
        if quotient_log.is_null() || c.is_null() || found.is_null() {
            return Err(null());
        }
        let w = mvt_witness(handle(f)?, a, b)?;
        write(quotient_log, w.quotient.log_value())?;
        write(c, w.c.unwrap_or(f64::NAN))?;
        write(found, w.c.is_some() as i32)
    })
}

/// Logs of the triplet `(e^{m²+1}, e^{m²−1}, e^{2m})`: hypotenuse, opposite,
/// adjacent.
///
/// # Safety
/// All out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn bigeo_triplet_generate(
    m: u64,
    h_log: *mut f64,
    p_log: *mut f64,
    b_log: *mut f64,
) -> BigeoStatus {
    guard(|| {
        if h_log.is_null() || p_log.is_null() || b_log.is_null() {
            return Err(null());
        }
        let t = triplet_generate(m)?;
        write(h_log, t.hypotenuse().log_value())?;
        write(p_log, t.opposite().log_value())?;
        write(b_log, t.adjacent().log_value())
    })
}
