//! C ABI over `polycauchy`.
//!
//! Objects cross the boundary as opaque handles that must be released with
//! their `_free` function. Rationals travel as canonical `"p/q"` strings;
//! every string returned by this library is owned by the caller and released
//! with [`pc_string_free`]. Each call returns a [`PcStatus`]; after a non-zero
//! status [`pc_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polycauchy::error::Error;
use polycauchy::mixed_poly::{self, IdentityId};
use polycauchy::series_core::rational;
use polycauchy::series_core::Polynomial;
use polycauchy::verify::{self, GridSpec, SuiteReport};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DomainError = 3,
    Panic = 4,
}

/// A polynomial with rational coefficients.
pub struct PcPolynomial(Polynomial);

/// The outcome of a verification run.
pub struct PcReport(SuiteReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("no interior NUL")));
}

fn fail(status: PcStatus, msg: impl Into<String>) -> PcStatus {
    set_error(msg);
    status
}

fn from_lib(e: Error) -> PcStatus {
    let status = match e {
        Error::Config(_) | Error::ParseRational(_) => PcStatus::InvalidArgument,
        _ => PcStatus::DomainError,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> PcStatus) -> PcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(PcStatus::Panic, "internal panic"))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PcStatus> {
    if s.is_null() {
        return Err(fail(PcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(PcStatus::InvalidArgument, "string argument is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> PcStatus {
    if out.is_null() {
        return fail(PcStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    PcStatus::Ok
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// The message for the most recent failure on this thread, or NULL.
/// Release with `pc_string_free`.
#[no_mangle]
pub extern "C" fn pc_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes `Ã_n^{(r,k)}(x)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_mixed_oracle(
    n: usize,
    r: usize,
    k: i64,
    out: *mut *mut PcPolynomial,
) -> PcStatus {
    guard(|| {
        let poly = mixed_poly::mixed_oracle(n, r, k);
        write_out(out, Box::into_raw(Box::new(PcPolynomial(poly))))
    })
}

/// Computes `Ã_n^{(r,k)}(x0)` for `x0` given as `"p"` or `"p/q"`.
///
/// # Safety
/// `x` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_mixed_value(
    n: usize,
    r: usize,
    k: i64,
    x: *const c_char,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let x0 = try_ffi!(read_str(x).and_then(|s| rational::parse(s).map_err(from_lib)));
        let value = mixed_poly::mixed_value(n, r, k, &x0);
        write_out(out, to_c(rational::to_canonical(&value)))
    })
}

/// Degree of `p`, or -1 for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_degree(p: *const PcPolynomial, out: *mut i64) -> PcStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            return fail(PcStatus::NullPointer, "null polynomial");
        };
        write_out(out, p.0.degree().map_or(-1, |d| d as i64))
    })
}

/// Coefficient of `x^j` in `p`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_coeff(
    p: *const PcPolynomial,
    j: usize,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            return fail(PcStatus::NullPointer, "null polynomial");
        };
        write_out(out, to_c(rational::to_canonical(&p.0.coeff(j))))
    })
}

/// Evaluates `p` at `x`.
///
/// # Safety
/// `p` must be a live handle, `x` a NUL-terminated string and `out` valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_eval(
    p: *const PcPolynomial,
    x: *const c_char,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            return fail(PcStatus::NullPointer, "null polynomial");
        };
        let x0 = try_ffi!(read_str(x).and_then(|s| rational::parse(s).map_err(from_lib)));
        write_out(out, to_c(rational::to_canonical(&p.0.eval(&x0))))
    })
}

/// Ascending coefficients as a JSON array of strings.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_to_json(
    p: *const PcPolynomial,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            return fail(PcStatus::NullPointer, "null polynomial");
        };
        write_out(
            out,
            to_c(serde_json::to_string(&p.0).expect("serializable")),
        )
    })
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_free(p: *mut PcPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Runs the default grid with `n <= n_max`. `identities` is a
/// comma-separated list of identity keys, or NULL for all of them.
///
/// # Safety
/// `identities` must be NULL or a NUL-terminated string; `out` must be valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_verify(
    n_max: usize,
    identities: *const c_char,
    out: *mut *mut PcReport,
) -> PcStatus {
    guard(|| {
        let selection: Vec<IdentityId> = if identities.is_null() {
            IdentityId::ALL.to_vec()
        } else {
            let text = try_ffi!(read_str(identities));
            try_ffi!(text
                .split(',')
                .map(|k| k.trim().parse())
                .collect::<Result<_, Error>>()
                .map_err(from_lib))
        };
        let grid = GridSpec {
            n_max,
            ..GridSpec::default()
        };
        let report = try_ffi!(verify::run_suite(&grid, &selection).map_err(from_lib));
        write_out(out, Box::into_raw(Box::new(PcReport(report))))
    })
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_report_pass(report: *const PcReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.pass)
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_report_fail(report: *const PcReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.fail)
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pc_report_skipped(report: *const PcReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.skipped)
}

/// # Safety
/// `report` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pc_report_to_json(
    report: *const PcReport,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let Some(report) = report.as_ref() else {
            return fail(PcStatus::NullPointer, "null report");
        };
        write_out(out, to_c(verify::report_to_json(&report.0)))
    })
}

/// # Safety
/// `report` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pc_report_free(report: *mut PcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
