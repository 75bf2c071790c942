//! C ABI for `closure-ops`.
//!
//! Operators and preferences live behind opaque handles created from JSON
//! documents (the same documents the command line reads) and released with
//! the matching `_free` function. Every fallible call returns a
//! [`CoStatus`]; on anything other than `CO_STATUS_OK` a message is kept
//! per thread and can be read with [`co_last_error`].
//!
//! Strings handed out by the library are NUL-terminated UTF-8 owned by the
//! caller and must be released with [`co_string_free`]. When a check
//! fails (`CO_STATUS_CHECK_FAILED`) the report explaining the failure is
//! still written to the output string.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use closure_ops::json::{self, GeneratorsDoc, LabelingDoc, PreferenceDoc, TableDoc};
use closure_ops::reports::{self, DecompositionKind, LabelingKind, Report};
use closure_ops::{
    classifier_from_labeling, intersect_generate, ClosureOperator, Error, MenuPreference, Subset,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoStatus {
    Ok = 0,
    /// A mathematical check failed; a report is still produced.
    CheckFailed = 1,
    /// Malformed JSON, unknown names or otherwise unusable input.
    InvalidInput = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
    /// Unexpected internal failure.
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoDecomposition {
    WeakOrders = 0,
    Binary = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoLabeling {
    Minimal = 0,
    Canonical = 1,
}

/// A closure operator.
pub struct CoOperator(ClosureOperator);

/// A utility function over menus.
pub struct CoPreference(MenuPreference);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

enum Failure {
    Status(CoStatus, String),
    /// A failed check with its report.
    Check(String, Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match reports::failure_report(&e) {
            Some(report) => Failure::Check(e.to_string(), report),
            None => {
                let status = match e {
                    Error::AxiomsViolated(_) => CoStatus::CheckFailed,
                    Error::WitnessVerificationFailed(_) => CoStatus::Internal,
                    _ => CoStatus::InvalidInput,
                };
                Failure::Status(status, e.to_string())
            }
        }
    }
}

fn null() -> Failure {
    Failure::Status(CoStatus::NullPointer, "null pointer argument".into())
}

/// Runs `body`, converting panics and errors to a status.
fn guard<F>(body: F) -> CoStatus
where
    F: FnOnce() -> Result<CoStatus, Failure>,
{
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure::Status(status, msg))) => {
            set_error(msg);
            status
        }
        Ok(Err(Failure::Check(msg, _))) => {
            set_error(msg);
            CoStatus::CheckFailed
        }
        Err(_) => {
            set_error("internal panic");
            CoStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::Status(CoStatus::InvalidInput, "input is not valid UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

/// Writes a report to `out` and maps its outcome to a status.
unsafe fn emit(report: Report, out: *mut *mut c_char) -> Result<CoStatus, Failure> {
    *out = into_c_string(report.text);
    if report.holds {
        Ok(CoStatus::Ok)
    } else {
        set_error("check failed; see the report");
        Ok(CoStatus::CheckFailed)
    }
}

/// Like [`guard`] for calls that produce a report, so failure reports
/// reach `out` too.
unsafe fn guard_report<F>(out: *mut *mut c_char, body: F) -> CoStatus
where
    F: FnOnce() -> Result<Report, Failure>,
{
    if out.is_null() {
        clear_error();
        set_error("null pointer argument");
        return CoStatus::NullPointer;
    }
    *out = ptr::null_mut();
    guard(|| match body() {
        Ok(report) => emit(report, out),
        Err(Failure::Check(msg, report)) => {
            *out = into_c_string(report.text);
            Err(Failure::Status(CoStatus::CheckFailed, msg))
        }
        Err(f) => Err(f),
    })
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

unsafe fn new_handle<T, F>(out: *mut *mut T, body: F) -> CoStatus
where
    F: FnOnce() -> Result<T, Failure>,
{
    if out.is_null() {
        clear_error();
        set_error("null pointer argument");
        return CoStatus::NullPointer;
    }
    *out = ptr::null_mut();
    guard(|| {
        store(out, body()?);
        Ok(CoStatus::Ok)
    })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn co_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn co_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn co_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds an operator from a topology (`closed_sets`) or table (`map`)
/// document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_from_json(
    json: *const c_char,
    out: *mut *mut CoOperator,
) -> CoStatus {
    new_handle(out, || {
        Ok(CoOperator(json::operator_from_str(text(json)?)?))
    })
}

/// Builds the binary-classifier operator of a labeling document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_from_labels_json(
    json: *const c_char,
    out: *mut *mut CoOperator,
) -> CoStatus {
    new_handle(out, || {
        let doc: LabelingDoc = json::from_str(text(json)?)?;
        Ok(CoOperator(classifier_from_labeling(&doc.to_labeling()?)))
    })
}

/// Builds the operator generated by a list of weak orders and binary
/// classifiers.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_from_generators_json(
    json: *const c_char,
    out: *mut *mut CoOperator,
) -> CoStatus {
    new_handle(out, || {
        let doc: GeneratorsDoc = json::from_str(text(json)?)?;
        let (_, ops) = doc.to_operators()?;
        Ok(CoOperator(intersect_generate(&ops)?))
    })
}

/// # Safety
/// `op` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn co_operator_free(op: *mut CoOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Number of elements in the ground set.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_element_count(
    op: *const CoOperator,
    out: *mut usize,
) -> CoStatus {
    guard(|| {
        let op = handle(op)?;
        *out.as_mut().ok_or_else(null)? = op.0.ground().len();
        Ok(CoStatus::Ok)
    })
}

/// Closure of a subset given as a bitmask over element positions.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_apply(
    op: *const CoOperator,
    subset: u32,
    out: *mut u32,
) -> CoStatus {
    guard(|| {
        let op = handle(op)?;
        let out = out.as_mut().ok_or_else(null)?;
        let a = op.0.ground().check(Subset::from_bits(subset))?;
        *out = op.0.apply(a).bits();
        Ok(CoStatus::Ok)
    })
}

/// Minimum number of weak orders that generate the operator.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_mnwo(op: *const CoOperator, out: *mut usize) -> CoStatus {
    guard(|| {
        let op = handle(op)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = closure_ops::complexity_profile(&op.0)?.mnwo;
        Ok(CoStatus::Ok)
    })
}

/// Minimum number of binary classifiers that generate the operator.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_mnbc(op: *const CoOperator, out: *mut usize) -> CoStatus {
    guard(|| {
        let op = handle(op)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = closure_ops::complexity_profile(&op.0)?.mnbc;
        Ok(CoStatus::Ok)
    })
}

/// Closed sets as a topology document.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_topology_json(
    op: *const CoOperator,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || Ok(reports::topology(&handle(op)?.0)))
}

/// Complexity profile with witnesses.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_complexity_json(
    op: *const CoOperator,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || Ok(reports::complexity(&handle(op)?.0)?))
}

/// A minimum generating family as a generators document.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_decompose_json(
    op: *const CoOperator,
    kind: CoDecomposition,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || {
        let kind = match kind {
            CoDecomposition::WeakOrders => DecompositionKind::WeakOrders,
            CoDecomposition::Binary => DecompositionKind::Binary,
        };
        Ok(reports::decomposition(&handle(op)?.0, kind)?)
    })
}

/// A labeling whose classifier operator is `op`.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_labels_json(
    op: *const CoOperator,
    kind: CoLabeling,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || {
        let kind = match kind {
            CoLabeling::Minimal => LabelingKind::Minimal,
            CoLabeling::Canonical => LabelingKind::Canonical,
        };
        Ok(reports::labeling(&handle(op)?.0, kind))
    })
}

/// Nonzero Möbius values of the closed sets under inclusion.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_mobius_json(
    op: *const CoOperator,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || Ok(reports::mobius(&handle(op)?.0)))
}

/// Hasse diagram of the closed sets, as JSON or (with `dot`) Graphviz.
///
/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_operator_hasse(
    op: *const CoOperator,
    dot: bool,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || Ok(reports::hasse(&handle(op)?.0, dot)))
}

/// Checks the closure axioms on a table document and writes the
/// validation report.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_validate_table_json(
    json: *const c_char,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || {
        let doc: TableDoc = json::from_str(text(json)?)?;
        Ok(reports::validation(&doc.to_table()?))
    })
}

/// Builds a preference from a preference document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_preference_from_json(
    json: *const c_char,
    out: *mut *mut CoPreference,
) -> CoStatus {
    new_handle(out, || {
        let doc: PreferenceDoc = json::from_str(text(json)?)?;
        Ok(CoPreference(doc.to_preference()?))
    })
}

/// # Safety
/// `pref` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn co_preference_free(pref: *mut CoPreference) {
    if !pref.is_null() {
        drop(Box::from_raw(pref));
    }
}

/// Kreps representation, or the axiom report if the preference fails the
/// axioms.
///
/// # Safety
/// `pref` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn co_preference_kreps_json(
    pref: *const CoPreference,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || Ok(reports::kreps(&handle(pref)?.0)?))
}

/// Additive representation with respect to `op`, or the identity when
/// `op` is null.
///
/// # Safety
/// `pref` must be a live handle, `op` null or a live handle, and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn co_preference_additive_json(
    pref: *const CoPreference,
    op: *const CoOperator,
    out: *mut *mut c_char,
) -> CoStatus {
    guard_report(out, || {
        let pref = &handle(pref)?.0;
        let identity;
        let f = match op.as_ref() {
            Some(op) => &op.0,
            None => {
                identity = ClosureOperator::identity(pref.ground().clone());
                &identity
            }
        };
        Ok(reports::additive(pref, f)?)
    })
}
