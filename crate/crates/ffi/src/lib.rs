//! C ABI over `simplicial`.
//!
//! Objects live behind opaque handles that the caller frees with the matching
//! `*_free` function. Every fallible function returns one of the `SSET_*`
//! status codes; on failure `sset_last_error` describes what went wrong on the
//! calling thread. Strings returned through out-parameters are owned by the
//! caller and released with `sset_string_free`.

use std::cell::RefCell;
use std::ffi::{CStr, CString, c_char};
use std::panic::{AssertUnwindSafe, catch_unwind};
use std::ptr;

use simplicial::constructions;
use simplicial::document::{Object, ObjectDocument, parse_document, serialize_document};
use simplicial::fincat::{FinCategory, nerve, validate_category};
use simplicial::homology::{euler_characteristic, homology};
use simplicial::horn;
use simplicial::sset::count_simplicial_maps;
use simplicial::FiniteSSet;

pub const SSET_OK: i32 = 0;
/// A required pointer argument was null.
pub const SSET_ERR_NULL: i32 = 1;
/// Input text was not UTF-8.
pub const SSET_ERR_UTF8: i32 = 2;
/// The document could not be parsed.
pub const SSET_ERR_PARSE: i32 = 3;
/// The document describes a different kind of object.
pub const SSET_ERR_KIND: i32 = 4;
/// The object fails its identities or laws.
pub const SSET_ERR_INVALID: i32 = 5;
/// A construction was rejected, e.g. by a truncation mismatch.
pub const SSET_ERR_CONSTRUCTION: i32 = 6;
/// A dimension or bound is out of range.
pub const SSET_ERR_RANGE: i32 = 7;
/// An internal panic was caught at the boundary.
pub const SSET_ERR_PANIC: i32 = 8;

pub const SSET_CHECK_KAN: i32 = 0;
pub const SSET_CHECK_QUASICATEGORY: i32 = 1;
pub const SSET_CHECK_NERVE: i32 = 2;
pub const SSET_CHECK_GROUPOID_NERVE: i32 = 3;

/// A finitely presented simplicial set.
pub struct SsetHandle {
    inner: FiniteSSet,
}

/// A finite category.
pub struct CategoryHandle {
    inner: FinCategory,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (i32, String);

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SSET_OK,
        Ok(Err((code, message))) => {
            set_error(message);
            code
        }
        Err(_) => {
            set_error("internal panic".into());
            SSET_ERR_PANIC
        }
    }
}

fn fail<E: ToString>(code: i32) -> impl Fn(E) -> Failure {
    move |e| (code, e.to_string())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err((SSET_ERR_NULL, "null string".into()));
    }
    // SAFETY: the caller passes a nul-terminated string
    unsafe { CStr::from_ptr(p) }.to_str().map_err(fail(SSET_ERR_UTF8))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    // SAFETY: non-null handles come from this library and are still live
    unsafe { p.as_ref() }.ok_or((SSET_ERR_NULL, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err((SSET_ERR_NULL, "null output pointer".into()));
    }
    // SAFETY: checked non-null; the caller provides writable storage
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn put_sset(out: *mut *mut SsetHandle, k: FiniteSSet) -> Result<(), Failure> {
    if out.is_null() {
        return Err((SSET_ERR_NULL, "null output pointer".into()));
    }
    let boxed = Box::into_raw(Box::new(SsetHandle { inner: k }));
    // SAFETY: checked non-null
    unsafe { out.write(boxed) };
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(fail(SSET_ERR_PANIC))?;
    if out.is_null() {
        return Err((SSET_ERR_NULL, "null output pointer".into()));
    }
    // SAFETY: checked non-null
    unsafe { out.write(c.into_raw()) };
    Ok(())
}

/// Message for the last failure on this thread, or null. Valid until the next
/// failing call on the same thread.
#[unsafe(no_mangle)]
pub extern "C" fn sset_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an sset JSON document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_parse(json: *const c_char, out: *mut *mut SsetHandle) -> i32 {
    guard(|| {
        let doc = parse_document(unsafe { text(json) }?).map_err(fail(SSET_ERR_PARSE))?;
        match doc.object {
            Object::SSet(k) => unsafe { put_sset(out, k) },
            other => Err((SSET_ERR_KIND, format!("expected sset, found {}", other.kind()))),
        }
    })
}

/// Serializes to the canonical JSON document.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_to_json(h: *const SsetHandle, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let k = unsafe { handle(h) }?;
        let doc = ObjectDocument::sset("", k.inner.clone());
        unsafe { put_string(out, serialize_document(&doc)) }
    })
}

/// `Δ[n]` truncated at `truncation`.
///
/// # Safety
/// `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_simplex(n: usize, truncation: usize, out: *mut *mut SsetHandle) -> i32 {
    guard(|| {
        let k = constructions::standard_simplex(n, truncation).map_err(fail(SSET_ERR_RANGE))?;
        unsafe { put_sset(out, k) }
    })
}

/// `∂Δ[n]`.
///
/// # Safety
/// `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_boundary(n: usize, truncation: usize, out: *mut *mut SsetHandle) -> i32 {
    guard(|| {
        let k = constructions::boundary(n, truncation).map_err(fail(SSET_ERR_RANGE))?;
        unsafe { put_sset(out, k) }
    })
}

/// `Λ^k[n]`.
///
/// # Safety
/// `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_horn(n: usize, k: usize, truncation: usize, out: *mut *mut SsetHandle) -> i32 {
    guard(|| {
        let h = constructions::horn(n, k, truncation).map_err(fail(SSET_ERR_RANGE))?;
        unsafe { put_sset(out, h) }
    })
}

/// `a × b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_product(a: *const SsetHandle, b: *const SsetHandle, out: *mut *mut SsetHandle) -> i32 {
    guard(|| {
        let (a, b) = unsafe { (handle(a)?, handle(b)?) };
        let p = constructions::product(&a.inner, &b.inner).map_err(fail(SSET_ERR_CONSTRUCTION))?;
        unsafe { put_sset(out, p.sset) }
    })
}

/// `a ⊔ b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_coproduct(a: *const SsetHandle, b: *const SsetHandle, out: *mut *mut SsetHandle) -> i32 {
    guard(|| {
        let (a, b) = unsafe { (handle(a)?, handle(b)?) };
        let c = constructions::coproduct(&a.inner, &b.inner).map_err(fail(SSET_ERR_CONSTRUCTION))?;
        unsafe { put_sset(out, c) }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_free(h: *mut SsetHandle) {
    if !h.is_null() {
        // SAFETY: created by Box::into_raw in this library
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Number of nondegenerate simplices in dimension `dim`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_count(h: *const SsetHandle, dim: usize, out: *mut usize) -> i32 {
    guard(|| {
        let k = unsafe { handle(h) }?;
        unsafe { put(out, k.inner.count(dim)) }
    })
}

/// Writes `1` if the simplicial identities hold, `0` otherwise.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_validate(h: *const SsetHandle, out: *mut i32) -> i32 {
    guard(|| {
        let k = unsafe { handle(h) }?;
        let report = k.inner.validate();
        if let Some(v) = report.violations.first() {
            set_error(v.to_string());
        }
        unsafe { put(out, i32::from(report.is_valid())) }
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_euler(h: *const SsetHandle, out: *mut i64) -> i32 {
    guard(|| {
        let k = unsafe { handle(h) }?;
        unsafe { put(out, euler_characteristic(&k.inner)) }
    })
}

/// `H_degree` as text, e.g. `Z^2 ⊕ Z/2`, or `0`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_homology(h: *const SsetHandle, degree: usize, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let k = unsafe { handle(h) }?;
        let hom = homology(&k.inner, degree).map_err(|e| match e {
            simplicial::homology::HomologyError::OutOfRange { .. } => (SSET_ERR_RANGE, e.to_string()),
            _ => (SSET_ERR_INVALID, e.to_string()),
        })?;
        unsafe { put_string(out, hom.group.to_string()) }
    })
}

/// Bounded recognition; `kind` is one of the `SSET_CHECK_*` values. Writes
/// `1` on pass and `0` on fail; a failure's witness is left in
/// `sset_last_error`.
///
/// # Safety
/// `h` must be a live handle; `passed` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_check(h: *const SsetHandle, kind: i32, bound: usize, passed: *mut i32) -> i32 {
    guard(|| {
        let k = unsafe { handle(h) }?;
        let check = match kind {
            SSET_CHECK_KAN => horn::is_kan_up_to,
            SSET_CHECK_QUASICATEGORY => horn::is_quasicategory_up_to,
            SSET_CHECK_NERVE => horn::is_nerve_up_to,
            SSET_CHECK_GROUPOID_NERVE => horn::is_groupoid_nerve_up_to,
            _ => return Err((SSET_ERR_RANGE, format!("unknown check kind {kind}"))),
        };
        let report = check(&k.inner, bound).map_err(fail(SSET_ERR_RANGE))?;
        if !report.passed() {
            set_error(report.summary(&k.inner));
        }
        unsafe { put(passed, i32::from(report.passed())) }
    })
}

/// Number of simplicial maps `a -> b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_hom_count(a: *const SsetHandle, b: *const SsetHandle, out: *mut usize) -> i32 {
    guard(|| {
        let (a, b) = unsafe { (handle(a)?, handle(b)?) };
        let n = count_simplicial_maps(&a.inner, &b.inner).map_err(fail(SSET_ERR_RANGE))?;
        unsafe { put(out, n) }
    })
}

/// Parses a category JSON document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn category_parse(json: *const c_char, out: *mut *mut CategoryHandle) -> i32 {
    guard(|| {
        let doc = parse_document(unsafe { text(json) }?).map_err(fail(SSET_ERR_PARSE))?;
        let Object::Category(c) = doc.object else {
            return Err((SSET_ERR_KIND, format!("expected category, found {}", doc.object.kind())));
        };
        if out.is_null() {
            return Err((SSET_ERR_NULL, "null output pointer".into()));
        }
        let boxed = Box::into_raw(Box::new(CategoryHandle { inner: c }));
        // SAFETY: checked non-null
        unsafe { out.write(boxed) };
        Ok(())
    })
}

/// Releases a category handle; null is ignored.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn category_free(h: *mut CategoryHandle) {
    if !h.is_null() {
        // SAFETY: created by Box::into_raw in this library
        drop(unsafe { Box::from_raw(h) });
    }
}

/// The nerve truncated at `truncation`; fails with `SSET_ERR_INVALID` when
/// the composition table breaks a category law.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_nerve(c: *const CategoryHandle, truncation: usize, out: *mut *mut SsetHandle) -> i32 {
    guard(|| {
        let c = unsafe { handle(c) }?;
        if let Some(v) = validate_category(&c.inner).violations.first() {
            return Err((SSET_ERR_INVALID, v.to_string()));
        }
        let n = nerve(&c.inner, truncation).map_err(fail(SSET_ERR_INVALID))?;
        unsafe { put_sset(out, n) }
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn sset_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in this library
        drop(unsafe { CString::from_raw(s) });
    }
}
