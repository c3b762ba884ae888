use spectral_bounds_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn last_error() -> String {
    let p = sb_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn shape(json: &str) -> *mut SbShape {
    let text = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sb_shape_from_json(text.as_ptr(), &mut out) }, SbStatus::Ok);
    assert!(!out.is_null());
    out
}

#[test]
fn unit_square_bounds() {
    let sq = shape(r#"{"type":"box","dimension":2,"sides":[1,1]}"#);
    let (mut n, mut vol, mut inertia) = (0usize, 0.0, 0.0);
    assert_eq!(unsafe { sb_shape_summary(sq, &mut n, &mut vol, &mut inertia) }, SbStatus::Ok);
    assert_eq!(n, 2);
    assert!((vol - 1.0).abs() < 1e-15 && (inertia - 1.0 / 6.0).abs() < 1e-15);

    let mut r = std::mem::MaybeUninit::<SbBoundReport>::uninit();
    assert_eq!(unsafe { sb_bound_exact(sq, SbOperator::Laplace, 10.0, r.as_mut_ptr()) }, SbStatus::Ok);
    let r = unsafe { r.assume_init() };
    assert!((r.exact - 630.816541281170).abs() < 1e-9);
    assert!((r.m_star - 80.0 * std::f64::consts::PI).abs() < 1e-9);
    assert!(r.has_liyau && r.has_theorem_form && !r.degenerate);
    assert!(r.liyau <= r.exact);

    let mut b = std::mem::MaybeUninit::<SbBoundReport>::uninit();
    assert_eq!(unsafe { sb_bound_exact(sq, SbOperator::Bilaplace, 10.0, b.as_mut_ptr()) }, SbStatus::Ok);
    let b = unsafe { b.assume_init() };
    assert!(!b.has_liyau && b.liyau.is_nan() && b.has_theorem_form);
    assert!((b.exact - 53266.2081961858).abs() < 1e-6);
    unsafe { sb_shape_free(sq) };
}

#[test]
fn scalar_entry_points() {
    let mut t = 0.0;
    assert_eq!(unsafe { sb_solve_t(4, 31.0, &mut t) }, SbStatus::Ok);
    assert!((t - 1.0).abs() < 1e-13);

    let mut s = 0.0;
    let m = 7.0 * std::f64::consts::PI / 3.0;
    assert_eq!(unsafe { sb_sigma_exact(2, 1.0, 1.0, m, &mut s) }, SbStatus::Ok);
    assert!((s - 3.1 * std::f64::consts::PI).abs() < 1e-12 * s);

    let mut f = 0.0;
    assert_eq!(unsafe { sb_m_star_floor(SbOperator::Laplace, 3, &mut f) }, SbStatus::Ok);
    assert!((f - 210.25156656).abs() < 1e-6);
}

#[test]
fn spectrum_handle() {
    let sides = [1.0, 1.0];
    let mut sp = ptr::null_mut();
    assert_eq!(unsafe { sb_box_spectrum(sides.as_ptr(), 2, 6, &mut sp) }, SbStatus::Ok);
    assert_eq!(unsafe { sb_spectrum_len(sp) }, 6);
    let mut buf = [0.0; 10];
    let mut written = 0;
    assert_eq!(unsafe { sb_spectrum_copy(sp, buf.as_mut_ptr(), buf.len(), &mut written) }, SbStatus::Ok);
    assert_eq!(written, 6);
    let pi2 = std::f64::consts::PI.powi(2);
    let expected = [2.0, 5.0, 5.0, 8.0, 10.0, 10.0];
    for (v, e) in buf.iter().zip(expected) {
        assert!((v - e * pi2).abs() < 1e-12 * e * pi2);
    }
    let mut v = 0.0;
    assert_eq!(unsafe { sb_spectrum_get(sp, 6, &mut v) }, SbStatus::OutOfRange);
    assert!(last_error().contains("index 6"));
    unsafe { sb_spectrum_free(sp) };
    assert_eq!(unsafe { sb_spectrum_len(ptr::null()) }, 0);
}

#[test]
fn error_codes_and_messages() {
    let cube = shape(r#"{"type":"box","dimension":3,"sides":[1,1,1]}"#);
    let mut r = std::mem::MaybeUninit::<SbBoundReport>::uninit();
    assert_eq!(unsafe { sb_bound_exact(cube, SbOperator::Bilaplace, 3.0, r.as_mut_ptr()) }, SbStatus::Ok);
    let r = unsafe { r.assume_init() };
    assert!(!r.has_theorem_form && r.theorem_form.is_nan() && r.exact > 0.0);
    assert_eq!(unsafe { sb_bound_exact(cube, SbOperator::Laplace, -1.0, &mut std::mem::zeroed()) }, SbStatus::InvalidInput);
    assert!(!last_error().is_empty());
    unsafe { sb_shape_free(cube) };

    let bad = CString::new(r#"{"type":"box","dimension":2,"sides":[1,1],"colour":1}"#).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sb_shape_from_json(bad.as_ptr(), &mut out) }, SbStatus::Parse);
    assert!(out.is_null());
    assert!(last_error().contains("colour"));

    let mut t = 0.0;
    assert_eq!(unsafe { sb_solve_t(2, 0.5, &mut t) }, SbStatus::ScaledMassBelowOne);
    assert_eq!(unsafe { sb_solve_t(2, 7.0, ptr::null_mut()) }, SbStatus::NullPointer);
    assert_eq!(unsafe { sb_shape_from_json(ptr::null(), &mut out) }, SbStatus::NullPointer);
    assert_eq!(unsafe { sb_solve_t(2, 7.0, &mut t) }, SbStatus::Ok);
    assert!(sb_last_error_message().is_null());

    let sides = [1.0, -1.0];
    assert_eq!(unsafe { sb_shape_box(sides.as_ptr(), 2, &mut out) }, SbStatus::InvalidInput);
    unsafe { sb_shape_free(ptr::null_mut()) };
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(sb_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/spectral_bounds.h");
    let source = include_str!("../src/lib.rs");
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 14);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for ty in ["typedef struct SbShape SbShape;", "typedef struct SbSpectrum SbSpectrum;", "SB_STATUS_UNSUPPORTED = 4"] {
        assert!(header.contains(ty), "{ty}");
    }
}
