use std::ffi::{CStr, CString};
use std::ptr;

use bigeo_ffi::*;

struct Handle(*mut BigeoFunction);

impl Handle {
    fn parse(text: &str) -> Handle {
        let c = CString::new(text).unwrap();
        let mut f = ptr::null_mut();
        assert_eq!(
            unsafe { bigeo_function_parse(c.as_ptr(), &mut f) },
            BigeoStatus::Ok
        );
        assert!(!f.is_null());
        Handle(f)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { bigeo_function_free(self.0) }
    }
}

fn last_error() -> String {
    let p = bigeo_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_error_reports_column() {
    let c = CString::new("ln(").unwrap();
    let mut f = ptr::null_mut();
    let s = unsafe { bigeo_function_parse(c.as_ptr(), &mut f) };
    assert_eq!(s, BigeoStatus::Parse);
    assert!(f.is_null());
    assert!(last_error().contains("column 4"));
}

#[test]
fn invalid_utf8_and_null() {
    let bytes = [0xffu8, 0];
    let mut f = ptr::null_mut();
    let s = unsafe { bigeo_function_parse(bytes.as_ptr().cast(), &mut f) };
    assert_eq!(s, BigeoStatus::InvalidUtf8);
    let s = unsafe { bigeo_function_parse(ptr::null(), &mut f) };
    assert_eq!(s, BigeoStatus::NullPointer);
    let mut v = 0.0;
    assert_eq!(
        unsafe { bigeo_function_eval(ptr::null(), 1.0, &mut v) },
        BigeoStatus::NullPointer
    );
    unsafe { bigeo_function_free(ptr::null_mut()) };
}

#[test]
fn derivatives_agree() {
    let f = Handle::parse("x^7");
    let mut analytic = 0.0;
    assert_eq!(
        unsafe { bigeo_gderiv_analytic(f.0, 3.0, &mut analytic) },
        BigeoStatus::Ok
    );
    assert!((analytic - 7.0).abs() < 1e-12);

    let mut numeric = BigeoGDerivative {
        two_sided: -1,
        log_value: 0.0,
        left_log: 0.0,
        right_log: 0.0,
    };
    assert_eq!(
        unsafe { bigeo_gderiv_numeric(f.0, 3.0, &mut numeric) },
        BigeoStatus::Ok
    );
    assert_eq!(numeric.two_sided, 1);
    assert!((numeric.log_value - 7.0).abs() < 1e-6);

    let mut second = 0.0;
    assert_eq!(
        unsafe { bigeo_gderiv_n(f.0, 3.0, 2, &mut second) },
        BigeoStatus::Ok
    );
    assert!(second.abs() < 1e-12);

    let mut d = 0.0;
    assert_eq!(
        unsafe { bigeo_ordinary_from_g(f.0, 2.0, &mut d) },
        BigeoStatus::Ok
    );
    assert!((d - 7.0 * 64.0).abs() < 1e-9);
}

#[test]
fn one_sided_geometric_abs() {
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { bigeo_function_geometric_abs(&mut f) },
        BigeoStatus::Ok
    );
    let f = Handle(f);
    let mut r = BigeoGDerivative {
        two_sided: -1,
        log_value: 0.0,
        left_log: 0.0,
        right_log: 0.0,
    };
    assert_eq!(
        unsafe { bigeo_gderiv_numeric(f.0, 1.0, &mut r) },
        BigeoStatus::Ok
    );
    assert_eq!(r.two_sided, 0);
    assert!(r.log_value.is_nan());
    assert!((r.left_log + 1.0).abs() < 1e-6);
    assert!((r.right_log - 1.0).abs() < 1e-6);

    let mut a = 0.0;
    assert_eq!(
        unsafe { bigeo_gderiv_analytic(f.0, 2.0, &mut a) },
        BigeoStatus::Unsupported
    );
}

#[test]
fn geometric_ops_on_logs() {
    let mut out = 0.0;
    unsafe {
        assert_eq!(
            bigeo_g_add(2.0f64.ln(), 3.0f64.ln(), &mut out),
            BigeoStatus::Ok
        );
        assert!((out.exp() - 6.0).abs() < 1e-12);
        assert_eq!(
            bigeo_g_sub(6.0f64.ln(), 3.0f64.ln(), &mut out),
            BigeoStatus::Ok
        );
        assert!((out.exp() - 2.0).abs() < 1e-12);
        assert_eq!(bigeo_g_mul(8.0f64.ln(), 2.0, &mut out), BigeoStatus::Ok);
        assert!((out.exp() - 64.0).abs() < 1e-9);
        assert_eq!(bigeo_g_div(8.0f64.ln(), 2.0, &mut out), BigeoStatus::Ok);
        assert!((out.exp() - 8f64.sqrt()).abs() < 1e-12);
        assert_eq!(bigeo_g_div(1.0, 0.0, &mut out), BigeoStatus::Domain);
        assert_eq!(bigeo_greal_from_value(-1.0, &mut out), BigeoStatus::Domain);
        assert_eq!(
            bigeo_greal_from_value(f64::INFINITY, &mut out),
            BigeoStatus::Range
        );
    }
}

#[test]
fn approximations_and_differences() {
    let f = Handle::parse("sin(x)");
    let a = std::f64::consts::FRAC_PI_6;
    let (mut e, mut l) = (0.0, 0.0);
    unsafe {
        assert_eq!(bigeo_exp_approx(f.0, a, 1, 0.4, &mut e), BigeoStatus::Ok);
        assert_eq!(bigeo_linear_approx(f.0, a, 0.4, &mut l), BigeoStatus::Ok);
    }
    assert!((e - 0.391668).abs() < 1e-6);
    assert!((l - 0.392960).abs() < 1e-6);

    let g = Handle::parse("3*x^2");
    let mut d = 0.0;
    unsafe {
        assert_eq!(
            bigeo_forward_diff(g.0, 1.5, 0.3, 2, &mut d),
            BigeoStatus::Ok
        );
        assert!(d.abs() < 1e-12);
        assert_eq!(
            bigeo_backward_diff(g.0, 1.5, 0.3, 1, &mut d),
            BigeoStatus::Ok
        );
        assert!((d - 0.6).abs() < 1e-12);
        assert_eq!(
            bigeo_forward_diff(g.0, 1.5, 0.0, 1, &mut d),
            BigeoStatus::Precondition
        );
    }
}

#[test]
fn applications() {
    let demand = Handle::parse("100*x^(-2)");
    let (mut ep, mut res) = (0.0, 0.0);
    assert_eq!(
        unsafe { bigeo_price_elasticity(demand.0, 10.0, &mut ep, &mut res) },
        BigeoStatus::Ok
    );
    assert!((ep + 2.0).abs() < 1e-12);
    assert!((res - (-2.0f64).exp()).abs() < 1e-12);

    let f = Handle::parse("exp(x)");
    let (mut q, mut c, mut found) = (0.0, 0.0, -1);
    assert_eq!(
        unsafe { bigeo_mvt_witness(f.0, 1.0, std::f64::consts::E, &mut q, &mut c, &mut found) },
        BigeoStatus::Ok
    );
    assert_eq!(found, 1);
    assert!((c - (std::f64::consts::E - 1.0)).abs() < 1e-8);

    let (mut h, mut p, mut b) = (0.0, 0.0, 0.0);
    assert_eq!(
        unsafe { bigeo_triplet_generate(2, &mut h, &mut p, &mut b) },
        BigeoStatus::Ok
    );
    assert_eq!((h, p, b), (5.0, 3.0, 4.0));
    assert_eq!(
        unsafe { bigeo_triplet_generate(1, &mut h, &mut p, &mut b) },
        BigeoStatus::Precondition
    );
}

#[test]
fn error_slot_is_per_thread_and_cleared() {
    let mut v = 0.0;
    assert_eq!(
        unsafe { bigeo_greal_from_value(0.0, &mut v) },
        BigeoStatus::Domain
    );
    assert!(!bigeo_last_error().is_null());
    std::thread::spawn(|| assert!(bigeo_last_error().is_null()))
        .join()
        .unwrap();
    assert_eq!(
        unsafe { bigeo_greal_from_value(2.0, &mut v) },
        BigeoStatus::Ok
    );
    assert!(bigeo_last_error().is_null());
}

#[test]
fn header_declares_entry_points() {
    let header = include_str!("../include/bigeo.h");
    for name in [
        "bigeo_function_parse",
        "bigeo_function_free",
        "bigeo_gderiv_numeric",
        "bigeo_g_div",
        "BIGEO_STATUS_PARSE = 2",
        "typedef struct BigeoFunction BigeoFunction",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
