//! C interface to the `stingray` library.
//!
//! Objects are opaque heap handles released with the matching `_free`.
//! Every fallible call returns a [`StingrayStatus`]; on failure the message is
//! available from [`stingray_last_error`] on the same thread. Strings handed
//! out by the library are released with [`stingray_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stingray::classify::{classify_element, Tag};
use stingray::ffield::FieldSpec;
use stingray::fmatrix::DenseMatrix;
use stingray::groups::{group_order, Action, MatrixGroup};
use stingray::harness::{parse_mgrp_str, to_mgrp_string};
use stingray::ppd::primitive_prime_divisors;
use stingray::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StingrayStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Singular = 4,
    FieldMismatch = 5,
    TooLarge = 6,
    Io = 7,
    Internal = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StingrayTag {
    Stingray = 0,
    PpdGeneral = 1,
    Type2I = 2,
    Type2II = 3,
    NotPpd = 4,
}

/// Classification summary. `e` and `t` are meaningful for `STINGRAY` and
/// `PPD_GENERAL` only.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StingrayClassification {
    pub tag: StingrayTag,
    pub e: usize,
    pub t: u32,
    pub fixed_dim: usize,
    pub semisimple: bool,
    pub ppd_order: bool,
}

/// A finite field.
pub struct StingrayField(FieldSpec);

/// A square matrix over a finite field.
pub struct StingrayMatrix(DenseMatrix);

/// A matrix group given by generators.
pub struct StingrayGroup(MatrixGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> StingrayStatus {
    match err {
        Error::Parse { .. } => StingrayStatus::Parse,
        Error::Singular | Error::SingularGenerator(_) => StingrayStatus::Singular,
        Error::FieldMismatch => StingrayStatus::FieldMismatch,
        Error::TooLarge | Error::FieldTooLarge(_) | Error::ActionTooLarge(_) => {
            StingrayStatus::TooLarge
        }
        Error::Io(_) => StingrayStatus::Io,
        _ => StingrayStatus::InvalidArgument,
    }
}

/// Run `f`, recording any error or panic as the thread's last error.
fn guard<F>(f: F) -> StingrayStatus
where
    F: FnOnce() -> Result<(), (StingrayStatus, String)>,
{
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StingrayStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            StingrayStatus::Internal
        }
    }
}

fn lib<T>(r: stingray::Result<T>) -> Result<T, (StingrayStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (StingrayStatus, String) {
    (StingrayStatus::NullPointer, format!("{what} is null"))
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (StingrayStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut *mut T, v: T) {
    *out = Box::into_raw(Box::new(v));
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).unwrap_or_default().into_raw();
}

/// Message for the most recent failure on this thread, or null.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn stingray_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn stingray_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// GF(p^a) with the default modulus.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_field_new(
    p: u64,
    a: u32,
    out: *mut *mut StingrayField,
) -> StingrayStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f = lib(FieldSpec::new(p, a, None))?;
        write_out(out, StingrayField(f));
        Ok(())
    })
}

/// # Safety
/// `f` must be a valid field handle.
#[no_mangle]
pub unsafe extern "C" fn stingray_field_order(f: *const StingrayField) -> u64 {
    f.as_ref().map_or(0, |f| f.0.order())
}

/// # Safety
/// `f` must come from [`stingray_field_new`], or be null.
#[no_mangle]
pub unsafe extern "C" fn stingray_field_free(f: *mut StingrayField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// A `d x d` matrix from row-major element encodings.
///
/// # Safety
/// `data` must point to `d * d` values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn stingray_matrix_from_rows(
    field: *const StingrayField,
    d: usize,
    data: *const u64,
    out: *mut *mut StingrayMatrix,
) -> StingrayStatus {
    guard(|| {
        let f = as_ref(field, "field")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if data.is_null() && d > 0 {
            return Err(null("data"));
        }
        let vals = if d == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(data, d * d).to_vec()
        };
        let q = f.0.order();
        if let Some(v) = vals.iter().find(|&&v| v >= q) {
            return Err((
                StingrayStatus::InvalidArgument,
                format!("entry {v} is not an element of GF({q})"),
            ));
        }
        let m = lib(DenseMatrix::new(&f.0, d, d, vals))?;
        write_out(out, StingrayMatrix(m));
        Ok(())
    })
}

/// # Safety
/// `m` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn stingray_matrix_free(m: *mut StingrayMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Multiplicative order as a decimal string.
///
/// # Safety
/// `m` must be a valid matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_matrix_order(
    m: *const StingrayMatrix,
    out: *mut *mut c_char,
) -> StingrayStatus {
    guard(|| {
        let m = as_ref(m, "matrix")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let n = lib(m.0.order(None))?;
        write_string(out, n.to_string());
        Ok(())
    })
}

/// # Safety
/// `m` must be a valid matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_classify(
    m: *const StingrayMatrix,
    e: usize,
    out: *mut StingrayClassification,
) -> StingrayStatus {
    guard(|| {
        let m = as_ref(m, "matrix")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let c = lib(classify_element(&m.0, e))?;
        let (tag, e, t) = match c.tag {
            Tag::Stingray(e) => (StingrayTag::Stingray, e, 0),
            Tag::PpdGeneral { e, t } => (StingrayTag::PpdGeneral, e, t),
            Tag::Type2I => (StingrayTag::Type2I, 0, 0),
            Tag::Type2II => (StingrayTag::Type2II, 0, 0),
            Tag::NotPpd => (StingrayTag::NotPpd, 0, 0),
        };
        *out = StingrayClassification {
            tag,
            e,
            t,
            fixed_dim: c.fixed_dim,
            semisimple: c.semisimple,
            ppd_order: c.ppd_order,
        };
        Ok(())
    })
}

/// Primitive prime divisors of `q^e - 1`, space separated; empty when none.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_ppd(q: u64, e: u32, out: *mut *mut c_char) -> StingrayStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let r = lib(primitive_prime_divisors(q, e))?;
        let s: Vec<String> = r.primes.iter().map(|p| p.to_string()).collect();
        write_string(out, s.join(" "));
        Ok(())
    })
}

/// Parse a group from MGRP text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_group_parse_mgrp(
    text: *const c_char,
    out: *mut *mut StingrayGroup,
) -> StingrayStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (StingrayStatus::Parse, "text is not UTF-8".to_string()))?;
        let g = lib(parse_mgrp_str(s))?;
        write_out(out, StingrayGroup(g));
        Ok(())
    })
}

/// # Safety
/// `g` must be a valid group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_group_to_mgrp(
    g: *const StingrayGroup,
    out: *mut *mut c_char,
) -> StingrayStatus {
    guard(|| {
        let g = as_ref(g, "group")?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, to_mgrp_string(&g.0));
        Ok(())
    })
}

/// # Safety
/// `g` must be a valid group handle, or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn stingray_group_dim(g: *const StingrayGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.dim())
}

/// # Safety
/// `g` must be a valid group handle, or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn stingray_group_ngens(g: *const StingrayGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.generators().len())
}

/// Copy of generator `i` as a new matrix handle.
///
/// # Safety
/// `g` must be a valid group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_group_generator(
    g: *const StingrayGroup,
    i: usize,
    out: *mut *mut StingrayMatrix,
) -> StingrayStatus {
    guard(|| {
        let g = as_ref(g, "group")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let m = g.0.generators().get(i).ok_or_else(|| {
            (
                StingrayStatus::InvalidArgument,
                format!("generator {i} out of range"),
            )
        })?;
        write_out(out, StingrayMatrix(m.clone()));
        Ok(())
    })
}

/// Group order as a decimal string, from the action on vectors.
///
/// # Safety
/// `g` must be a valid group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stingray_group_order(
    g: *const StingrayGroup,
    seed: u64,
    out: *mut *mut c_char,
) -> StingrayStatus {
    guard(|| {
        let g = as_ref(g, "group")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let n = lib(group_order(&g.0, Action::Vectors, seed))?;
        write_string(out, n.to_string());
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn stingray_group_free(g: *mut StingrayGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}
