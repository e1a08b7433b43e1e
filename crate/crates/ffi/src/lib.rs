//! C bindings for `booldeg`.
//!
//! Every fallible call returns a [`BooldegStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`booldeg_last_error`] until the next call on the same thread. Handles
//! and strings returned by this library must be released with the
//! matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, c_int};

use booldeg::boolfn::io::parse_bf;
use booldeg::boolfn::{block_sensitivity_at_point, decision_tree_complexity, Family, FamilyParams};
use booldeg::degrees::{deg, ndeg, rdeg, sdeg};
use booldeg::dtree::build_tree;
use booldeg::harness::{rational_string, verify_function};
use booldeg::limits::check_cap;
use booldeg::poly::text::parse_multilinear;
use booldeg::{BooleanFunction, Error, MultilinearPoly};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BooldegStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    CapExceeded = 4,
    ArityMismatch = 5,
    IndexOutOfRange = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BooldegMeasure {
    Deg = 0,
    Ndeg = 1,
    NdegNeg = 2,
    Rdeg = 3,
    Sdeg = 4,
    DecisionTree = 5,
}

/// Opaque Boolean function.
pub struct BooldegFunction(BooleanFunction);

/// Opaque multilinear polynomial.
pub struct BooldegPoly(MultilinearPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BooldegStatus {
    match e {
        Error::Parse(_) => BooldegStatus::Parse,
        Error::CapExceeded { .. } => BooldegStatus::CapExceeded,
        Error::ArityMismatch { .. } => BooldegStatus::ArityMismatch,
        Error::IndexOutOfRange { .. } => BooldegStatus::IndexOutOfRange,
        _ => BooldegStatus::InvalidArgument,
    }
}

struct Fail(BooldegStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(BooldegStatus::NullPointer, "null pointer argument".into())
}

/// Runs `body`, recording any error or panic.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> BooldegStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BooldegStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            BooldegStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(BooldegStatus::InvalidArgument, "string is not UTF-8".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(BooldegStatus::Internal, "interior NUL".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn function<'a>(f: *const BooldegFunction) -> Result<&'a BooleanFunction, Fail> {
    f.as_ref().map(|h| &h.0).ok_or_else(null)
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn booldeg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a function from `len` bytes, one per cube point in mask order;
/// `len` must be `2^n` and each byte 0 or 1.
///
/// # Safety
/// `bits` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_function_from_table(
    n: usize,
    bits: *const u8,
    len: usize,
    out: *mut *mut BooldegFunction,
) -> BooldegStatus {
    guard(|| {
        if bits.is_null() {
            return Err(null());
        }
        let bytes = std::slice::from_raw_parts(bits, len);
        if let Some(b) = bytes.iter().find(|&&b| b > 1) {
            return Err(Fail(BooldegStatus::InvalidArgument, format!("table byte {b} is not 0 or 1")));
        }
        let f = BooleanFunction::new(n, bytes.iter().map(|&b| b == 1).collect())?;
        write_out(out, Box::into_raw(Box::new(BooldegFunction(f))))
    })
}

/// Parses the `n=K` / table text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_function_from_text(
    text: *const c_char,
    out: *mut *mut BooldegFunction,
) -> BooldegStatus {
    guard(|| {
        let f = parse_bf(read_str(text)?)?;
        write_out(out, Box::into_raw(Box::new(BooldegFunction(f))))
    })
}

/// Builds a total family member. `n` or `m` equal to 0 means "not given".
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_function_from_family(
    name: *const c_char,
    n: usize,
    m: usize,
    out: *mut *mut BooldegFunction,
) -> BooldegStatus {
    guard(|| {
        let family: Family = read_str(name)?.parse()?;
        let params = FamilyParams {
            n: (n > 0).then_some(n),
            m: (m > 0).then_some(m),
        };
        let f = family.build(params)?.into_total()?;
        write_out(out, Box::into_raw(Box::new(BooldegFunction(f))))
    })
}

/// # Safety
/// `f` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn booldeg_function_free(f: *mut BooldegFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_function_arity(f: *const BooldegFunction, out: *mut usize) -> BooldegStatus {
    guard(|| write_out(out, function(f)?.arity()))
}

/// Computes one degree-type measure.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_degree(
    f: *const BooldegFunction,
    measure: BooldegMeasure,
    out: *mut usize,
) -> BooldegStatus {
    guard(|| {
        let f = function(f)?;
        check_cap(f.arity())?;
        let v = match measure {
            BooldegMeasure::Deg => deg(f).degree,
            BooldegMeasure::Ndeg => ndeg(f).degree,
            BooldegMeasure::NdegNeg => ndeg(&f.negate()).degree,
            BooldegMeasure::Rdeg => rdeg(f).degree,
            BooldegMeasure::Sdeg => sdeg(f).degree,
            BooldegMeasure::DecisionTree => decision_tree_complexity(f),
        };
        write_out(out, v)
    })
}

/// `bs_x(f)` at the point whose bit `i` is `x_{i+1}`.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_block_sensitivity(
    f: *const BooldegFunction,
    point: u32,
    out: *mut usize,
) -> BooldegStatus {
    guard(|| {
        let f = function(f)?;
        check_cap(f.arity())?;
        if f.arity() < 32 && point >> f.arity() != 0 {
            return Err(Error::InvalidArgument(format!("point {point:#b} outside the cube")).into());
        }
        write_out(out, block_sensitivity_at_point(f, point).size())
    })
}

/// Minimum-degree witness as polynomial text (`deg`, `ndeg`, `ndeg_neg`,
/// `sdeg`; `rdeg` gives `(p) / (q)`).
///
/// # Safety
/// `f` must be a live handle; `out` must be writable. Free the string with
/// [`booldeg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn booldeg_witness(
    f: *const BooldegFunction,
    measure: BooldegMeasure,
    out: *mut *mut c_char,
) -> BooldegStatus {
    guard(|| {
        let f = function(f)?;
        check_cap(f.arity())?;
        let text = match measure {
            BooldegMeasure::Deg => deg(f).polynomial.to_string(),
            BooldegMeasure::Ndeg => ndeg(f).polynomial.to_string(),
            BooldegMeasure::NdegNeg => ndeg(&f.negate()).polynomial.to_string(),
            BooldegMeasure::Sdeg => sdeg(f).polynomial.to_string(),
            BooldegMeasure::Rdeg => {
                let r = rdeg(f).representation;
                format!("({}) / ({})", r.numerator, r.denominator)
            }
            BooldegMeasure::DecisionTree => build_tree(f).tree.to_string(),
        };
        write_string(out, text)
    })
}

/// The full measure report as JSON.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_measures_json(f: *const BooldegFunction, out: *mut *mut c_char) -> BooldegStatus {
    guard(|| {
        let report = verify_function(function(f)?)?;
        let json = serde_json_string(&report)?;
        write_string(out, json)
    })
}

fn serde_json_string(report: &booldeg::harness::MeasureReport) -> Result<String, Fail> {
    serde_json::to_string(report).map_err(|e| Fail(BooldegStatus::Internal, e.to_string()))
}

/// The hitting-set decision tree in nested text form and its depth.
///
/// # Safety
/// `f` must be a live handle; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_tree(
    f: *const BooldegFunction,
    out_tree: *mut *mut c_char,
    out_depth: *mut usize,
) -> BooldegStatus {
    guard(|| {
        let f = function(f)?;
        check_cap(f.arity())?;
        if out_tree.is_null() || out_depth.is_null() {
            return Err(null());
        }
        let b = build_tree(f);
        write_out(out_depth, b.depth)?;
        write_string(out_tree, b.tree.to_string())
    })
}

/// Parses polynomial text. A negative `arity` infers it from the highest
/// variable.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_poly_parse(
    text: *const c_char,
    arity: c_int,
    out: *mut *mut BooldegPoly,
) -> BooldegStatus {
    guard(|| {
        let arity = usize::try_from(arity).ok();
        let p = parse_multilinear(read_str(text)?, arity)?;
        write_out(out, Box::into_raw(Box::new(BooldegPoly(p))))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn booldeg_poly_free(p: *mut BooldegPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_poly_to_string(p: *const BooldegPoly, out: *mut *mut c_char) -> BooldegStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        write_string(out, p.0.to_string())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_poly_degree(p: *const BooldegPoly, out: *mut usize) -> BooldegStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        write_out(out, p.0.degree())
    })
}

/// Exact value at a cube point, written as `"num/den"`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn booldeg_poly_evaluate(
    p: *const BooldegPoly,
    point: u32,
    out: *mut *mut c_char,
) -> BooldegStatus {
    guard(|| {
        let p = &p.as_ref().ok_or_else(null)?.0;
        if p.arity() < 32 && point >> p.arity() != 0 {
            return Err(Error::IndexOutOfRange {
                index: 31 - point.leading_zeros() as usize,
                arity: p.arity(),
            }
            .into());
        }
        write_string(out, rational_string(&p.eval(point)))
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn booldeg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
