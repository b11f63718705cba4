//! C interface to `gauwu-core`.
//!
//! Every object crosses the boundary as an opaque pointer created by a
//! `gw_*_new`/`gw_classify`-style constructor and released by the matching
//! `gw_*_free`. Functions return a [`GwStatus`]; on failure the message is
//! available from [`gw_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use gauwu_core::config::RunConfig;
use gauwu_core::{BasePolynomial, ComplexMatrix, Error, GauWuResult};
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GwStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Numerical = 3,
    Hypothesis = 4,
    Io = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// Square complex matrix.
pub struct GwMatrix(ComplexMatrix);

/// Homogeneous base polynomial F(x, y, t).
pub struct GwPoly(BasePolynomial);

/// Gau-Wu bounds with certified witnesses.
pub struct GwResult(GauWuResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GwStatus {
    match e {
        Error::Parse(_) | Error::NotSquare { .. } | Error::NonFinite { .. } => GwStatus::Parse,
        Error::Io(_) => GwStatus::Io,
        Error::Hypothesis(_) | Error::Dimension { .. } => GwStatus::Hypothesis,
        Error::Eigensolver { .. } | Error::IllConditioned { .. } | Error::Numerical(_) => GwStatus::Numerical,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (GwStatus, String)>) -> GwStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GwStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            GwStatus::Panic
        }
    }
}

fn core<T>(r: gauwu_core::Result<T>) -> Result<T, (GwStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (GwStatus, String) {
    (GwStatus::NullPointer, format!("{what} is null"))
}

fn out_of_range(msg: String) -> (GwStatus, String) {
    (GwStatus::OutOfRange, msg)
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next `gw_*` call on the same thread.
#[no_mangle]
pub extern "C" fn gw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds an `n x n` matrix from row-major real and imaginary parts. `im`
/// may be null for a real matrix.
///
/// # Safety
/// `re` (and `im` when non-null) must point to `n * n` doubles; `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_matrix_new(n: usize, re: *const f64, im: *const f64, out: *mut *mut GwMatrix) -> GwStatus {
    guard(|| {
        if re.is_null() {
            return Err(null("re"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let len = n.checked_mul(n).ok_or_else(|| out_of_range(format!("dimension {n} overflows")))?;
        let re = std::slice::from_raw_parts(re, len);
        let im = if im.is_null() { None } else { Some(std::slice::from_raw_parts(im, len)) };
        let rows: Vec<Vec<Complex64>> = (0..n)
            .map(|r| (0..n).map(|c| Complex64::new(re[r * n + c], im.map_or(0.0, |v| v[r * n + c]))).collect())
            .collect();
        let m = core(ComplexMatrix::from_rows(&rows))?;
        *out = Box::into_raw(Box::new(GwMatrix(m)));
        Ok(())
    })
}

/// Reads a matrix file in the text or JSON format accepted by the CLI.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_matrix_from_file(path: *const c_char, out: *mut *mut GwMatrix) -> GwStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let p = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| (GwStatus::Parse, "path is not UTF-8".to_string()))?;
        let m = core(ComplexMatrix::from_file(Path::new(p)))?;
        *out = Box::into_raw(Box::new(GwMatrix(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a pointer returned by a matrix constructor.
#[no_mangle]
pub unsafe extern "C" fn gw_matrix_free(m: *mut GwMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimension of the matrix, 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn gw_matrix_dim(m: *const GwMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.n())
}

/// Dimension of the commutant of {Re A, Im A}; 1 means unitarily irreducible.
///
/// # Safety
/// `m` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_commutant_dimension(m: *const GwMatrix, out: *mut usize) -> GwStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = gauwu_core::matrix::commutant_dimension(&m.0);
        Ok(())
    })
}

/// Computes det(x Re A + y Im A + t I).
///
/// # Safety
/// `m` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_base_polynomial(m: *const GwMatrix, out: *mut *mut GwPoly) -> GwStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let p = core(gauwu_core::poly::compute_base_polynomial(&m.0.hermitian_parts()))?;
        *out = Box::into_raw(Box::new(GwPoly(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn gw_poly_degree(p: *const GwPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.degree())
}

/// Coefficient of x^a y^b t^c; `a + b + c` must equal the degree.
///
/// # Safety
/// `p` must be a live polynomial handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_poly_coefficient(p: *const GwPoly, a: usize, b: usize, c: usize, out: *mut f64) -> GwStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let d = p.0.degree();
        if a.checked_add(b).and_then(|s| s.checked_add(c)) != Some(d) {
            return Err(out_of_range(format!("exponents ({a}, {b}, {c}) do not sum to degree {d}")));
        }
        *out = p.0.coefficient(a, b, c);
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a pointer returned by `gw_base_polynomial`.
#[no_mangle]
pub unsafe extern "C" fn gw_poly_free(p: *mut GwPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Bounds the Gau-Wu number with the default configuration, using
/// `grid_size` pencil angles (0 keeps the default).
///
/// # Safety
/// `m` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_classify(m: *const GwMatrix, grid_size: usize, out: *mut *mut GwResult) -> GwStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut cfg = RunConfig::default();
        if grid_size > 0 {
            cfg.grid_size = grid_size;
        }
        core(cfg.validate())?;
        let r = core(gauwu_core::classify_with(&m.0, &cfg))?;
        *out = Box::into_raw(Box::new(GwResult(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn gw_result_lower(r: *const GwResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.lower)
}

/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn gw_result_upper(r: *const GwResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.upper)
}

/// Exact value, or 0 when the bounds differ.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn gw_result_exact(r: *const GwResult) -> usize {
    r.as_ref().and_then(|r| r.0.exact).unwrap_or(0)
}

/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn gw_result_witness_count(r: *const GwResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.witnesses.len())
}

/// Image <A x, x> of witness `i`.
///
/// # Safety
/// `r` must be a live result handle; `re` and `im` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn gw_result_witness_image(r: *const GwResult, i: usize, re: *mut f64, im: *mut f64) -> GwStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("result"))?;
        if re.is_null() || im.is_null() {
            return Err(null("out"));
        }
        let w = r.0.witnesses.get(i).ok_or_else(|| {
            out_of_range(format!("witness {i} out of range ({} available)", r.0.witnesses.len()))
        })?;
        *re = w.image.re;
        *im = w.image.im;
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a pointer returned by `gw_classify`.
#[no_mangle]
pub unsafe extern "C" fn gw_result_free(r: *mut GwResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Gau-Wu number of the tridiagonal Toeplitz matrix with super-diagonal `b`
/// and sub-diagonal `c`, which requires n >= 3 and |b| != |c|.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_toeplitz_k(n: usize, b_re: f64, b_im: f64, c_re: f64, c_im: f64, out: *mut usize) -> GwStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = core(gauwu_core::toeplitz_k(n, Complex64::new(b_re, b_im), Complex64::new(c_re, c_im)))?;
        Ok(())
    })
}
