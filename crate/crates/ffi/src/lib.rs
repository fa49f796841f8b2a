//! C ABI for `schubert-core`.
//!
//! A module `M(p)` is held behind the opaque handle [`SchubertModule`]. Every
//! computation returns a [`SchubertStatus`] and, on success, writes a
//! NUL-terminated JSON document to an out-parameter. Strings handed out by
//! this library must be released with [`schubert_string_free`]. On failure
//! [`schubert_last_error`] describes what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use schubert_core::exterior::{ModuleSpec, WedgeTerm};
use schubert_core::{report, Error};
use serde::Serialize;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Computation = 4,
    Panic = 5,
}

/// A module `M(p)` over its coefficient ring.
pub struct SchubertModule {
    spec: Arc<ModuleSpec>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: SchubertStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_input_error() {
            SchubertStatus::InvalidInput
        } else {
            SchubertStatus::Computation
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn new(status: SchubertStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn guard<F>(f: F) -> SchubertStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SchubertStatus::Ok,
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic in schubert-core".into());
            set_last_error(&message);
            SchubertStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(
            SchubertStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure::new(
            SchubertStatus::InvalidUtf8,
            format!("{what} is not valid UTF-8"),
        )
    })
}

unsafe fn read_module<'a>(m: *const SchubertModule) -> Result<&'a SchubertModule, Failure> {
    m.as_ref()
        .ok_or_else(|| Failure::new(SchubertStatus::NullPointer, "module handle is null"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s)
        .map_err(|_| Failure::new(SchubertStatus::Computation, "output contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_json<T: Serialize>(out: *mut *mut c_char, value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(value)
        .map_err(|e| Failure::new(SchubertStatus::Computation, e.to_string()))?;
    write_string(out, s)
}

fn check_out<T>(out: *mut *mut T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(
            SchubertStatus::NullPointer,
            "output pointer is null",
        ));
    }
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into this library from the same thread and must
/// not be freed.
#[no_mangle]
pub extern "C" fn schubert_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        Some(c) => c.as_ptr(),
        None => ptr::null(),
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn schubert_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn schubert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates `M(p)`. `p` is `classical`, `quantum` or a monic polynomial of
/// degree `n` in `X`; `ring` declares coefficient generators as
/// `name:degree,...` and may be null or empty.
///
/// # Safety
/// String arguments must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_module_new(
    p: *const c_char,
    n: u32,
    ring: *const c_char,
    out: *mut *mut SchubertModule,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let p = read_str(p, "p")?;
        let ring = if ring.is_null() {
            ""
        } else {
            read_str(ring, "ring")?
        };
        let spec = report::module_from_description(p, n, ring)?;
        *out = Box::into_raw(Box::new(SchubertModule { spec }));
        Ok(())
    })
}

/// Destroys a module handle. Null is ignored.
///
/// # Safety
/// `m` must be null or a handle from [`schubert_module_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schubert_module_free(m: *mut SchubertModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// The rank `n` of the module.
///
/// # Safety
/// `m` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn schubert_module_rank(m: *const SchubertModule) -> u32 {
    m.as_ref().map_or(0, |m| m.spec.basis_bound())
}

/// The defining polynomial, e.g. `X^4 + q`.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_module_polynomial(
    m: *const SchubertModule,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        write_string(out, m.spec.polynomial_string())
    })
}

/// Presentation of the cohomology of `G(k, n)` as a JSON object with keys
/// `k`, `n`, `ring`, `p`, `generators`, `relations`.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_presentation_json(
    m: *const SchubertModule,
    k: usize,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        write_json(out, &report::presentation_document(&m.spec, k)?)
    })
}

/// Product `σ_lhs · σ_rhs`. Partitions are written `2,1`; `""` or `0` is the
/// unit class.
///
/// # Safety
/// `m` must be a live handle, strings NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_multiply_json(
    m: *const SchubertModule,
    k: usize,
    lhs: *const c_char,
    rhs: *const c_char,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        let lhs = read_str(lhs, "lhs")?;
        let rhs = read_str(rhs, "rhs")?;
        write_json(out, &report::product_document(&m.spec, k, lhs, rhs)?)
    })
}

/// `D_order σ_class`.
///
/// # Safety
/// `m` must be a live handle, `class` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_pieri_json(
    m: *const SchubertModule,
    k: usize,
    order: u32,
    class: *const c_char,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        let class = read_str(class, "class")?;
        write_json(out, &report::pieri_document(&m.spec, k, order, class)?)
    })
}

/// Schur determinant of a partition and its value on `ε¹∧…∧εᵏ`.
///
/// # Safety
/// `m` must be a live handle, `partition` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_giambelli_json(
    m: *const SchubertModule,
    k: usize,
    partition: *const c_char,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        let partition = read_str(partition, "partition")?;
        write_json(out, &report::giambelli_document(&m.spec, k, partition)?)
    })
}

/// Products `σ_λ · σ_μ` for every ordered pair of box partitions with
/// `|λ| + |μ| ≤ max_weight`.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_structure_constants_json(
    m: *const SchubertModule,
    k: usize,
    max_weight: u32,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        write_json(out, &report::constants_document(&m.spec, k, max_weight)?)
    })
}

/// Class of `P(D₁,…,D_k)`, written in `D1..Dk` and the ring generators, in
/// the Schubert basis.
///
/// # Safety
/// `m` must be a live handle, `operator` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_normal_form_json(
    m: *const SchubertModule,
    k: usize,
    operator: *const c_char,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        let operator = read_str(operator, "operator")?;
        write_json(out, &report::normal_form_document(&m.spec, k, operator)?)
    })
}

/// `D_h` applied to a vector of ⋀ᵏM(p) given as a JSON array of
/// `{"indices": [...], "coeff": "..."}` terms.
///
/// # Safety
/// `m` must be a live handle, `vector` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_apply_d_json(
    m: *const SchubertModule,
    k: usize,
    h: u32,
    vector: *const c_char,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        check_out(out)?;
        let m = read_module(m)?;
        let vector = read_str(vector, "vector")?;
        let terms: Vec<WedgeTerm> = serde_json::from_str(vector)
            .map_err(|e| Failure::new(SchubertStatus::InvalidInput, e.to_string()))?;
        write_json(out, &report::apply_d_document(&m.spec, k, h, &terms)?)
    })
}
