//! C ABI for `spectral-bounds`.
//!
//! Every fallible function returns an [`SbStatus`] and writes its result
//! through an out-pointer. On failure the message is kept per thread and can
//! be read with [`sb_last_error_message`]. Shapes and spectra are opaque
//! handles owned by the caller and released with their `*_free` function.

use spectral_bounds::geometry::{DomainShape, ShapeDocument};
use spectral_bounds::minimizer::{self, MinimizationInput};
use spectral_bounds::operator::{self, OperatorKind};
use spectral_bounds::verification::{box_spectrum, SpectrumSample};
use spectral_bounds::BoundsError;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Unsupported = 4,
    ScaledMassBelowOne = 5,
    NoConvergence = 6,
    Infeasible = 7,
    Violation = 8,
    OutOfRange = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbOperator {
    Laplace = 0,
    Stokes = 1,
    Bilaplace = 2,
}

impl From<SbOperator> for OperatorKind {
    fn from(op: SbOperator) -> Self {
        match op {
            SbOperator::Laplace => OperatorKind::DirichletLaplacian,
            SbOperator::Stokes => OperatorKind::Stokes,
            SbOperator::Bilaplace => OperatorKind::DirichletBilaplacian,
        }
    }
}

/// All bounds at one `m`. Values that do not apply to the operator are NaN
/// and their `has_*` flag is false.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SbBoundReport {
    pub m: f64,
    pub m_star: f64,
    pub exact: f64,
    pub liyau: f64,
    pub melas: f64,
    pub asymptotic: f64,
    pub theorem_form: f64,
    pub epsilon: f64,
    pub has_liyau: bool,
    pub has_melas: bool,
    pub has_asymptotic: bool,
    pub has_theorem_form: bool,
    pub has_epsilon: bool,
    pub degenerate: bool,
}

/// Opaque domain handle.
pub struct SbShape {
    shape: DomainShape,
}

/// Opaque eigenvalue list handle.
pub struct SbSpectrum {
    sample: SpectrumSample,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &BoundsError) -> SbStatus {
    match e {
        BoundsError::InvalidInput(_) | BoundsError::Dimension(_) | BoundsError::DegenerateShape(_) => {
            SbStatus::InvalidInput
        }
        BoundsError::Parse(_) => SbStatus::Parse,
        BoundsError::Unsupported { .. } => SbStatus::Unsupported,
        BoundsError::ScaledMassBelowOne(_) => SbStatus::ScaledMassBelowOne,
        BoundsError::NoConvergence { .. } | BoundsError::EnumerationBudget(_) => SbStatus::NoConvergence,
        BoundsError::Infeasible(_) | BoundsError::Unbounded => SbStatus::Infeasible,
        BoundsError::Violation { .. } => SbStatus::Violation,
    }
}

fn fail(status: SbStatus, msg: &str) -> SbStatus {
    set_error(msg);
    status
}

/// Runs `f`, mapping errors and panics to status codes.
fn guard<F>(f: F) -> SbStatus
where
    F: FnOnce() -> Result<(), (SbStatus, String)>,
{
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SbStatus::Ok,
        Ok(Err((status, msg))) => fail(status, &msg),
        Err(_) => fail(SbStatus::Panic, "internal panic"),
    }
}

fn lift(e: BoundsError) -> (SbStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SbStatus, String) {
    (SbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (SbStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn sb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a JSON shape document.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_shape_from_json(json: *const c_char, out: *mut *mut SbShape) -> SbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = std::ptr::null_mut();
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| (SbStatus::Parse, format!("shape document is not UTF-8: {e}")))?;
        let shape = ShapeDocument::parse(text).map_err(lift)?;
        *out = Box::into_raw(Box::new(SbShape { shape }));
        Ok(())
    })
}

/// Axis-aligned box with its lower corner at the origin.
///
/// # Safety
/// `sides` must point to `n` doubles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sb_shape_box(sides: *const f64, n: usize, out: *mut *mut SbShape) -> SbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = std::ptr::null_mut();
        if sides.is_null() {
            return Err(null("sides"));
        }
        let sides = std::slice::from_raw_parts(sides, n).to_vec();
        let shape = DomainShape::Box(spectral_bounds::geometry::AxisBox::at_origin(sides));
        shape.validate().map_err(lift)?;
        *out = Box::into_raw(Box::new(SbShape { shape }));
        Ok(())
    })
}

/// # Safety
/// `shape` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_shape_free(shape: *mut SbShape) {
    if !shape.is_null() {
        drop(Box::from_raw(shape));
    }
}

/// Dimension, volume and minimal second moment `∫|x - c|²`.
///
/// # Safety
/// `shape` must be a live handle; out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sb_shape_summary(
    shape: *const SbShape,
    dimension: *mut usize,
    volume: *mut f64,
    inertia: *mut f64,
) -> SbStatus {
    guard(|| {
        let shape = shape.as_ref().ok_or_else(|| null("shape"))?;
        let (d, v, i) = (out_ref(dimension, "dimension")?, out_ref(volume, "volume")?, out_ref(inertia, "inertia")?);
        let s = shape.shape.summary().map_err(lift)?;
        *d = s.n;
        *v = s.volume;
        *i = s.inertia;
        Ok(())
    })
}

/// Plateau parameter: root `t ≥ 0` of `(t+1)^{n+1} - t^{n+1} = m_star`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sb_solve_t(n: usize, m_star: f64, out: *mut f64) -> SbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = minimizer::solve_t(n, m_star).map_err(lift)?;
        Ok(())
    })
}

/// Minimum of `∫|ξ|² F` over radial `0 ≤ F ≤ M`, `-F' ≤ L`, `∫F = m`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sb_sigma_exact(n: usize, cap: f64, slope: f64, mass: f64, out: *mut f64) -> SbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let input = MinimizationInput::new(n, cap, slope, mass).map_err(lift)?;
        *out = minimizer::sigma_exact(&input).map_err(lift)?;
        Ok(())
    })
}

/// Smallest scaled mass for which the theorem constants hold.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sb_m_star_floor(op: SbOperator, n: usize, out: *mut f64) -> SbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = operator::m_star_floor(op.into(), n).map_err(lift)?;
        Ok(())
    })
}

/// Every bound for `op` on `shape` at `m`.
///
/// # Safety
/// `shape` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sb_bound_exact(
    shape: *const SbShape,
    op: SbOperator,
    m: f64,
    out: *mut SbBoundReport,
) -> SbStatus {
    guard(|| {
        let shape = shape.as_ref().ok_or_else(|| null("shape"))?;
        let out = out_ref(out, "out")?;
        let geom = shape.shape.summary().map_err(lift)?;
        let r = operator::bound_exact(op.into(), &geom, m).map_err(lift)?;
        let split = |v: Option<f64>| (v.unwrap_or(f64::NAN), v.is_some());
        let (liyau, has_liyau) = split(r.liyau);
        let (melas, has_melas) = split(r.melas);
        let (asymptotic, has_asymptotic) = split(r.asymptotic);
        let (theorem_form, has_theorem_form) = split(r.theorem_form);
        let (epsilon, has_epsilon) = split(r.epsilon);
        *out = SbBoundReport {
            m: r.m,
            m_star: r.m_star,
            exact: r.exact,
            liyau,
            melas,
            asymptotic,
            theorem_form,
            epsilon,
            has_liyau,
            has_melas,
            has_asymptotic,
            has_theorem_form,
            has_epsilon,
            degenerate: r.degenerate,
        };
        Ok(())
    })
}

/// First `m` Dirichlet Laplacian eigenvalues of the box with the given sides.
///
/// # Safety
/// `sides` must point to `n` doubles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sb_box_spectrum(sides: *const f64, n: usize, m: usize, out: *mut *mut SbSpectrum) -> SbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = std::ptr::null_mut();
        if sides.is_null() {
            return Err(null("sides"));
        }
        let sides = std::slice::from_raw_parts(sides, n);
        let sample = box_spectrum(sides, m).map_err(lift)?;
        *out = Box::into_raw(Box::new(SbSpectrum { sample }));
        Ok(())
    })
}

/// Number of eigenvalues held, or 0 for a null handle.
///
/// # Safety
/// `spectrum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sb_spectrum_len(spectrum: *const SbSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.sample.len())
}

/// Copies up to `capacity` eigenvalues, ascending, into `buffer` and stores
/// the number written in `written`.
///
/// # Safety
/// `spectrum` must be live; `buffer` must hold `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn sb_spectrum_copy(
    spectrum: *const SbSpectrum,
    buffer: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> SbStatus {
    guard(|| {
        let s = spectrum.as_ref().ok_or_else(|| null("spectrum"))?;
        let written = out_ref(written, "written")?;
        if buffer.is_null() && capacity > 0 {
            return Err(null("buffer"));
        }
        let k = capacity.min(s.sample.len());
        if k > 0 {
            std::ptr::copy_nonoverlapping(s.sample.eigenvalues.as_ptr(), buffer, k);
        }
        *written = k;
        Ok(())
    })
}

/// Eigenvalue `index` (0-based).
///
/// # Safety
/// `spectrum` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sb_spectrum_get(spectrum: *const SbSpectrum, index: usize, out: *mut f64) -> SbStatus {
    guard(|| {
        let s = spectrum.as_ref().ok_or_else(|| null("spectrum"))?;
        let out = out_ref(out, "out")?;
        *out = *s
            .sample
            .eigenvalues
            .get(index)
            .ok_or_else(|| (SbStatus::OutOfRange, format!("index {index} past {} eigenvalues", s.sample.len())))?;
        Ok(())
    })
}

/// # Safety
/// `spectrum` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_spectrum_free(spectrum: *mut SbSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}
