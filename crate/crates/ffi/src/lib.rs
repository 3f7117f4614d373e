//! C ABI for the rootzeta engine.
//!
//! Every fallible call returns an [`RzStatus`] and writes its result through
//! an out pointer. On failure, [`rz_last_error`] returns the message for the
//! calling thread. Handles are opaque and freed with their `_free` function;
//! strings returned by the library are freed with [`rz_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rootzeta::funcrel::{self, Report};
use rootzeta::numeric::{self, G2Exponents, HPReal, SummationConfig};
use rootzeta::roots::SimpleSubset;
use rootzeta::symbolic::ZetaExpr;
use rootzeta::Error;

/// Status codes returned by every fallible function.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Domain = 3,
    Convergence = 4,
    HypothesisViolated = 5,
    CosetMismatch = 6,
    ArgumentOutOfRange = 7,
    CatalogMismatch = 8,
    Parse = 9,
    Io = 10,
    /// A verification ran but at least one comparison failed.
    VerificationFailed = 11,
    Panic = 12,
}

impl From<&Error> for RzStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidInput(_) => RzStatus::InvalidInput,
            Error::Domain(_) => RzStatus::Domain,
            Error::Convergence(_) => RzStatus::Convergence,
            Error::HypothesisViolated(_) => RzStatus::HypothesisViolated,
            Error::CosetMismatch(_) => RzStatus::CosetMismatch,
            Error::ArgumentOutOfRange(_) => RzStatus::ArgumentOutOfRange,
            Error::CatalogMismatch(_) => RzStatus::CatalogMismatch,
            Error::Parse(_) => RzStatus::Parse,
            Error::Io(_) => RzStatus::Io,
        }
    }
}

/// Summation settings: precision, target tolerance and outer cutoff cap.
pub struct RzConfig(SummationConfig);

/// A real number with a rigorous absolute error bound.
pub struct RzValue(HPReal);

/// An exact linear combination of zeta values and related constants.
pub struct RzExpr(ZetaExpr);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (RzStatus, String)>) -> RzStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RzStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            RzStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (RzStatus, String) {
    (RzStatus::from(&e), e.to_string())
}

fn null(what: &str) -> (RzStatus, String) {
    (RzStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (RzStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), (RzStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (RzStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = to_c_string(s);
    Ok(())
}

/// Version of the JSON documents produced by this library.
#[no_mangle]
pub extern "C" fn rz_schema_version() -> u32 {
    rootzeta::cli::SCHEMA_VERSION
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn rz_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn or_default<T: PartialEq + Default>(v: T, d: T) -> T {
    if v == T::default() {
        d
    } else {
        v
    }
}

/// Creates a configuration. Pass 0 for any argument to use its default
/// (128 bits, 1e-12, 2^20).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rz_config_new(
    precision_bits: u32,
    target_tol: f64,
    max_outer: u64,
    out: *mut *mut RzConfig,
) -> RzStatus {
    guard(|| {
        let d = SummationConfig::default();
        let cfg = SummationConfig::new(
            or_default(precision_bits, d.precision_bits),
            or_default(target_tol, d.target_tol),
            or_default(max_outer, d.max_outer),
        )
        .map_err(lib_err)?;
        write_out(out, RzConfig(cfg))
    })
}

/// # Safety
/// `cfg` must be NULL or a handle from [`rz_config_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn rz_config_free(cfg: *mut RzConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

unsafe fn exponents(exps: *const f64) -> Result<G2Exponents, (RzStatus, String)> {
    if exps.is_null() {
        return Err(null("exps"));
    }
    let mut s = [0.0; 6];
    s.copy_from_slice(std::slice::from_raw_parts(exps, 6));
    Ok(G2Exponents(s))
}

/// `zeta_2(s; G2)` for six exponents.
///
/// # Safety
/// `cfg` must be a valid handle, `exps` must point to 6 doubles and `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rz_zeta_g2(
    cfg: *const RzConfig,
    exps: *const f64,
    out: *mut *mut RzValue,
) -> RzStatus {
    guard(|| {
        let cfg = deref(cfg, "cfg")?;
        let s = exponents(exps)?;
        let v = numeric::zeta_g2(&s, &cfg.0).map_err(lib_err)?;
        write_out(out, RzValue(v))
    })
}

/// The Weyl-symmetrized sum `S(s, I)` for `I = {subset}`, `subset` 1 or 2.
///
/// # Safety
/// As for [`rz_zeta_g2`].
#[no_mangle]
pub unsafe extern "C" fn rz_s_sum_g2(
    cfg: *const RzConfig,
    subset: u32,
    exps: *const f64,
    out: *mut *mut RzValue,
) -> RzStatus {
    guard(|| {
        let cfg = deref(cfg, "cfg")?;
        let s = exponents(exps)?;
        let i = SimpleSubset::new(&[subset as usize]).map_err(lib_err)?;
        let v = numeric::s_sum_g2(i, &s, &cfg.0).map_err(lib_err)?;
        write_out(out, RzValue(v))
    })
}

/// # Safety
/// `v` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn rz_value_f64(v: *const RzValue) -> f64 {
    v.as_ref().map_or(f64::NAN, |v| v.0.to_f64())
}

/// # Safety
/// `v` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn rz_value_error_bound(v: *const RzValue) -> f64 {
    v.as_ref().map_or(f64::NAN, |v| v.0.error_bound())
}

/// Decimal rendering with `digits` significant digits, or NULL if `v` is
/// NULL. Free with [`rz_string_free`].
///
/// # Safety
/// `v` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn rz_value_decimal(v: *const RzValue, digits: usize) -> *mut c_char {
    match v.as_ref() {
        Some(v) => to_c_string(v.0.to_decimal(digits.max(1))),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `v` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rz_value_free(v: *mut RzValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Closed form of `zeta_2(2a, b, b, 2c-1, d, d; G2)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rz_closed_form(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    out: *mut *mut RzExpr,
) -> RzStatus {
    guard(|| {
        let kv = funcrel::closed_form_special(a, b, c, d).map_err(lib_err)?;
        write_out(out, RzExpr(kv.expr))
    })
}

/// Right-hand side of the `I = {1}` relation at `(s, 2, 1, 1, 1, 1)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rz_fr01_rhs(s: i64, out: *mut *mut RzExpr) -> RzStatus {
    guard(|| {
        let e = funcrel::fr01_rhs(s).map_err(lib_err)?;
        write_out(out, RzExpr(e.normalize()))
    })
}

/// Human-readable form, e.g. `1/18*zeta(2)*zeta(5) - 109/1296*zeta(7)`.
///
/// # Safety
/// `e` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rz_expr_display(e: *const RzExpr, out: *mut *mut c_char) -> RzStatus {
    guard(|| {
        let e = deref(e, "expr")?;
        write_string(out, e.0.display_form().to_string())
    })
}

/// JSON map from coefficient strings to symbol lists.
///
/// # Safety
/// `e` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rz_expr_json(e: *const RzExpr, out: *mut *mut c_char) -> RzStatus {
    guard(|| {
        let e = deref(e, "expr")?;
        write_string(out, e.0.to_json().to_string())
    })
}

/// # Safety
/// `e` and `cfg` must be valid handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rz_expr_eval(
    e: *const RzExpr,
    cfg: *const RzConfig,
    out: *mut *mut RzValue,
) -> RzStatus {
    guard(|| {
        let e = deref(e, "expr")?;
        let cfg = deref(cfg, "cfg")?;
        let v = e.0.eval_numeric(&cfg.0).map_err(lib_err)?;
        write_out(out, RzValue(v))
    })
}

/// 1 if the expressions are equal after deep normalization, 0 if not,
/// -1 if either is NULL.
///
/// # Safety
/// `a` and `b` must be valid handles.
#[no_mangle]
pub unsafe extern "C" fn rz_expr_equals(a: *const RzExpr, b: *const RzExpr) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => i32::from(a.0.equals(&b.0)),
        _ => -1,
    }
}

/// # Safety
/// `e` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rz_expr_free(e: *mut RzExpr) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Checks every bundled catalog entry against its lattice sum at `tol`.
/// Writes a JSON array of reports to `report_json` (may be NULL) and
/// returns `VerificationFailed` if any entry fails.
///
/// # Safety
/// `cfg` must be a valid handle; `report_json` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn rz_verify_catalog(
    cfg: *const RzConfig,
    tol: f64,
    report_json: *mut *mut c_char,
) -> RzStatus {
    guard(|| {
        let cfg = deref(cfg, "cfg")?;
        let reports: Vec<Report> = funcrel::verify_catalog(&cfg.0, tol).map_err(lib_err)?;
        if !report_json.is_null() {
            let json = serde_json::to_string(&reports).map_err(|e| lib_err(e.into()))?;
            write_string(report_json, json)?;
        }
        match reports.iter().find(|r| !r.pass) {
            Some(r) => Err((
                RzStatus::VerificationFailed,
                format!("{} differs by {:e}", r.target, r.diff),
            )),
            None => Ok(()),
        }
    })
}
