//! C ABI for the classifier.
//!
//! Every fallible call returns a [`TfStatus`] and writes its result through
//! an out-pointer. Handles are opaque and owned by the caller, who releases
//! them with the matching `*_free` function. Strings returned through
//! `char **` are heap-allocated and released with [`tf_string_free`].
//! After a failed call, [`tf_last_error_message`] describes the error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twistflow::classify::{classify, validate_invariant, ClassificationResult};
use twistflow::expr::parse_manifold;
use twistflow::homology::h1;
use twistflow::manifold::{homeomorphic_with, lens_canonical, CanonicalManifold, LensRelation};
use twistflow::report::classification_json;
use twistflow::seifert::is_prime;
use twistflow::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TfStatus {
    Ok = 0,
    /// Malformed manifold expression.
    Parse = 1,
    /// The quadruple is not a flow invariant.
    InvalidInvariant = 2,
    /// Parameters violate a coprimality or range condition.
    InvalidArgument = 3,
    NullPointer = 4,
    /// Input string is not UTF-8.
    Utf8 = 5,
    Overflow = 6,
    NotALens = 7,
    /// Internal panic; the library state is unaffected.
    Panic = 8,
}

/// A canonical closed 3-manifold.
pub struct TfManifold(CanonicalManifold);

/// The classification of one flow invariant.
pub struct TfClassification(ClassificationResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> TfStatus {
    match e {
        Error::Parse { .. } => TfStatus::Parse,
        Error::InvalidQuadruple { .. } => TfStatus::InvalidInvariant,
        Error::Overflow => TfStatus::Overflow,
        Error::NotALens { .. } => TfStatus::NotALens,
        _ => TfStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status and recording the
/// message.
fn guard(f: impl FnOnce() -> Result<(), (TfStatus, String)>) -> TfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TfStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TfStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (TfStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TfStatus, String) {
    (TfStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (TfStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (TfStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (TfStatus, String)> {
    let c = CString::new(s).map_err(|_| (TfStatus::Panic, "string contained NUL".to_string()))?;
    write_out(out, c.into_raw())
}

/// Classifies `(l1, m1, l2, m2)`. On success `*out` owns a new handle.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_classify(l1: i64, m1: i64, l2: i64, m2: i64, out: *mut *mut TfClassification) -> TfStatus {
    guard(|| {
        let r = validate_invariant(l1, m1, l2, m2)
            .and_then(|c| classify(&c))
            .map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(TfClassification(r))))
    })
}

/// Case number 1..7, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tf_classification_case(c: *const TfClassification) -> u8 {
    c.as_ref().map_or(0, |c| c.0.case_number)
}

/// The classified manifold as a new handle.
///
/// # Safety
/// `c` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_classification_manifold(c: *const TfClassification, out: *mut *mut TfManifold) -> TfStatus {
    guard(|| {
        let c = deref(c, "classification")?;
        write_out(out, Box::into_raw(Box::new(TfManifold(c.0.manifold.clone()))))
    })
}

/// The classification as JSON with sorted keys.
///
/// # Safety
/// `c` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_classification_json(c: *const TfClassification, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let c = deref(c, "classification")?;
        write_string(out, classification_json(&c.0).to_string())
    })
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_classification_free(c: *mut TfClassification) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Parses and canonicalizes a manifold expression such as `L(5,2) # RP3`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_manifold_parse(text: *const c_char, out: *mut *mut TfManifold) -> TfStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (TfStatus::Utf8, e.to_string()))?;
        let m = parse_manifold(text).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(TfManifold(m))))
    })
}

/// `L(p,q)` in canonical form; `p` in {0, 1, 2} gives S2xS1, S3, RP3.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_lens_canonical(p: i64, q: i64, out: *mut *mut TfManifold) -> TfStatus {
    guard(|| {
        let m = lens_canonical(p, q).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(TfManifold(m))))
    })
}

/// Canonical text form.
///
/// # Safety
/// `m` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_manifold_render(m: *const TfManifold, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let m = deref(m, "manifold")?;
        write_string(out, m.0.to_string())
    })
}

/// Homeomorphism test. A nonzero `unoriented` also identifies `L(p,q)` with
/// `L(p,q')` when `q·q' ≡ ±1 (mod p)`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_manifold_homeomorphic(
    a: *const TfManifold,
    b: *const TfManifold,
    unoriented: bool,
    out: *mut bool,
) -> TfStatus {
    guard(|| {
        let (a, b) = (deref(a, "first manifold")?, deref(b, "second manifold")?);
        let rel = if unoriented {
            LensRelation::Unoriented
        } else {
            LensRelation::Oriented
        };
        write_out(out, homeomorphic_with(&a.0, &b.0, rel))
    })
}

/// First homology as text, e.g. `Z + Z/2`.
///
/// # Safety
/// `m` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_manifold_h1(m: *const TfManifold, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let m = deref(m, "manifold")?;
        write_string(out, h1(&m.0).to_string())
    })
}

/// # Safety
/// `m` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tf_manifold_is_prime(m: *const TfManifold, out: *mut bool) -> TfStatus {
    guard(|| {
        let m = deref(m, "manifold")?;
        write_out(out, is_prime(&m.0))
    })
}

/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_manifold_free(m: *mut TfManifold) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn tf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
