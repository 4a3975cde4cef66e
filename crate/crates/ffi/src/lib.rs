//! C interface to `hecke-g5`.
//!
//! Elements and matrices are opaque heap handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns
//! an [`H5Status`]; on failure the message is available from
//! [`h5_last_error_message`] until the next failing call on the same thread.
//! Strings returned by the library are released with [`h5_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hecke_g5::ideals::{factor, index_in_g5};
use hecke_g5::normalizer::normalizer_of;
use hecke_g5::reduction::reduced_factor;
use hecke_g5::subgroups::g0_contains;
use hecke_g5::{Error, GMatrix, RingElt};

/// Element `a + bλ` of `Z[λ]`.
pub struct H5Elt(RingElt);

/// 2x2 matrix of determinant 1 over `Z[λ]`.
pub struct H5Matrix(GMatrix);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H5Status {
    Ok = 0,
    NullPointer,
    InvalidUtf8,
    /// A result does not fit the fixed-width output type.
    Overflow,
    Panic,
    SyntaxError,
    DivisionByZero,
    NotAUnit,
    BothZero,
    ZeroInput,
    FactorCapExceeded,
    NotCoprime,
    IterationCapExceeded,
    BadDeterminant,
    UnitModulus,
    BoundExceeded,
    IntegrityError,
    BadRange,
    NotReduced,
    NotAGroup,
}

impl From<&Error> for H5Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::DivisionByZero => H5Status::DivisionByZero,
            Error::NotAUnit(_) => H5Status::NotAUnit,
            Error::BothZero => H5Status::BothZero,
            Error::ZeroInput => H5Status::ZeroInput,
            Error::FactorCapExceeded(_) => H5Status::FactorCapExceeded,
            Error::NotCoprime(..) => H5Status::NotCoprime,
            Error::IterationCapExceeded(_) => H5Status::IterationCapExceeded,
            Error::BadDeterminant(_) => H5Status::BadDeterminant,
            Error::UnitModulus(_) => H5Status::UnitModulus,
            Error::BoundExceeded { .. } => H5Status::BoundExceeded,
            Error::IntegrityError { .. } => H5Status::IntegrityError,
            Error::BadRange(_) => H5Status::BadRange,
            Error::NotReduced(_) => H5Status::NotReduced,
            Error::NotAGroup(_) => H5Status::NotAGroup,
            Error::Syntax { .. } => H5Status::SyntaxError,
        }
    }
}

struct Failure(H5Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(H5Status::from(&e), e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> H5Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => H5Status::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            H5Status::Panic
        }
    }
}

fn null() -> Failure {
    Failure(H5Status::NullPointer, "null pointer argument".into())
}

fn overflow(what: &str) -> Failure {
    Failure(
        H5Status::Overflow,
        format!("{what} does not fit the output type"),
    )
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message of the last failing call on this thread, or null if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn h5_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Stable lowercase name of a status code. Never null.
#[no_mangle]
pub extern "C" fn h5_status_name(status: H5Status) -> *const c_char {
    let s: &'static CStr = match status {
        H5Status::Ok => c"ok",
        H5Status::NullPointer => c"null_pointer",
        H5Status::InvalidUtf8 => c"invalid_utf8",
        H5Status::Overflow => c"overflow",
        H5Status::Panic => c"panic",
        H5Status::SyntaxError => c"syntax_error",
        H5Status::DivisionByZero => c"division_by_zero",
        H5Status::NotAUnit => c"not_a_unit",
        H5Status::BothZero => c"both_zero",
        H5Status::ZeroInput => c"zero_input",
        H5Status::FactorCapExceeded => c"factor_cap_exceeded",
        H5Status::NotCoprime => c"not_coprime",
        H5Status::IterationCapExceeded => c"iteration_cap_exceeded",
        H5Status::BadDeterminant => c"bad_determinant",
        H5Status::UnitModulus => c"unit_modulus",
        H5Status::BoundExceeded => c"bound_exceeded",
        H5Status::IntegrityError => c"integrity_error",
        H5Status::BadRange => c"bad_range",
        H5Status::NotReduced => c"not_reduced",
        H5Status::NotAGroup => c"not_a_group",
    };
    s.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn h5_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates `a + bλ`. Never fails.
#[no_mangle]
pub extern "C" fn h5_elt_new(a: i64, b: i64) -> *mut H5Elt {
    boxed(H5Elt(RingElt::new(a, b)))
}

/// Parses an expression such as `"12*L+7"` or `"(2*L-1)^2"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_elt_parse(text: *const c_char, out: *mut *mut H5Elt) -> H5Status {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(H5Status::InvalidUtf8, e.to_string()))?;
        let x: RingElt = s.parse()?;
        write(out, boxed(H5Elt(x)))
    })
}

/// # Safety
/// `x` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn h5_elt_free(x: *mut H5Elt) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Text form of `x`, or null if `x` is null. Free with [`h5_string_free`].
///
/// # Safety
/// `x` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn h5_elt_to_string(x: *const H5Elt) -> *mut c_char {
    match x.as_ref() {
        Some(x) => c_string(x.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Writes the coordinates of `x = a + bλ`.
///
/// # Safety
/// `x` must be a live handle; `a` and `b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_elt_coords(x: *const H5Elt, a: *mut i64, b: *mut i64) -> H5Status {
    guard(|| {
        let x = &deref(x)?.0;
        let ca = i64::try_from(x.a()).map_err(|_| overflow("coordinate"))?;
        let cb = i64::try_from(x.b()).map_err(|_| overflow("coordinate"))?;
        write(a, ca)?;
        write(b, cb)
    })
}

/// Writes the norm `a² + ab − b²`.
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_elt_norm(x: *const H5Elt, out: *mut i64) -> H5Status {
    guard(|| {
        let n = deref(x)?.0.norm();
        write(out, i64::try_from(&n).map_err(|_| overflow("norm"))?)
    })
}

/// Builds `[[a, b], [c, d]]`, failing unless the determinant is 1.
///
/// # Safety
/// The four entries must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_matrix_new(
    a: *const H5Elt,
    b: *const H5Elt,
    c: *const H5Elt,
    d: *const H5Elt,
    out: *mut *mut H5Matrix,
) -> H5Status {
    guard(|| {
        let m = GMatrix::new(
            deref(a)?.0.clone(),
            deref(b)?.0.clone(),
            deref(c)?.0.clone(),
            deref(d)?.0.clone(),
        )?;
        write(out, boxed(H5Matrix(m)))
    })
}

/// # Safety
/// `m` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn h5_matrix_free(m: *mut H5Matrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Text form of `m`, or null if `m` is null. Free with [`h5_string_free`].
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn h5_matrix_to_string(m: *const H5Matrix) -> *mut c_char {
    match m.as_ref() {
        Some(m) => c_string(m.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Prime factorization of `x` as JSON. Free with [`h5_string_free`].
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_factor_json(x: *const H5Elt, out: *mut *mut c_char) -> H5Status {
    guard(|| {
        let f = factor(&deref(x)?.0)?;
        let json =
            serde_json::to_string(&f).map_err(|e| Failure(H5Status::Panic, e.to_string()))?;
        write(out, c_string(json))
    })
}

/// Reduced factor of `num/den`: writes `e` and the reduced form
/// `num·λᵉ / den·λᵉ`. Either form pointer may be null to skip it.
///
/// # Safety
/// `num` and `den` must be live handles; `e` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_reduce(
    num: *const H5Elt,
    den: *const H5Elt,
    e: *mut i64,
    reduced_num: *mut *mut H5Elt,
    reduced_den: *mut *mut H5Elt,
) -> H5Status {
    guard(|| {
        let r = reduced_factor(&deref(num)?.0, &deref(den)?.0)?;
        write(e, r.e)?;
        if !reduced_num.is_null() {
            reduced_num.write(boxed(H5Elt(r.reduced_num)));
        }
        if !reduced_den.is_null() {
            reduced_den.write(boxed(H5Elt(r.reduced_den)));
        }
        Ok(())
    })
}

/// Index of `G0(τ)` in the Hecke group.
///
/// # Safety
/// `tau` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_index(tau: *const H5Elt, out: *mut u64) -> H5Status {
    guard(|| {
        let n = index_in_g5(&deref(tau)?.0)?;
        write(out, u64::try_from(&n).map_err(|_| overflow("index"))?)
    })
}

/// Normalizer of `G0(τ)`: writes the generator of `τ/h` and `h`.
///
/// # Safety
/// `tau` must be a live handle; `modulus` and `h` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_normalizer(
    tau: *const H5Elt,
    modulus: *mut *mut H5Elt,
    h: *mut u32,
) -> H5Status {
    guard(|| {
        let n = normalizer_of(&deref(tau)?.0)?;
        if modulus.is_null() {
            return Err(null());
        }
        write(h, n.h)?;
        modulus.write(boxed(H5Elt(n.modulus.generator().clone())));
        Ok(())
    })
}

/// Whether `m` lies in `G0(τ)`.
///
/// # Safety
/// `m` and `tau` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn h5_g0_contains(
    m: *const H5Matrix,
    tau: *const H5Elt,
    out: *mut bool,
) -> H5Status {
    guard(|| {
        let inside = g0_contains(&deref(m)?.0, &deref(tau)?.0)?;
        write(out, inside)
    })
}
