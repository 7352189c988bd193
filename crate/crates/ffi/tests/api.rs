//! Exercises the C interface from Rust and compares against the library.

use std::ffi::{CStr, CString};
use std::ptr;

use hyperspec::construct::{normalized_closed_form, normalized_real, theorem_params};
use hyperspec::spectrum::{stats, walsh_transform};
use hyperspec::TableLimit;
use hyperspec_ffi::*;

const CAP: u32 = HS_DEFAULT_MAX_TABLE_N;

fn last_error() -> String {
    let p = hs_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hs_string_free(p);
    s
}

#[test]
fn theorem_function_matches_library() {
    unsafe {
        let mut params = ptr::null_mut();
        assert_eq!(hs_params_theorem(10, &mut params), HsStatus::Ok);
        assert_eq!(hs_params_len(params), 10);

        let mut f = ptr::null_mut();
        assert_eq!(hs_normalized_real(params, CAP, &mut f), HsStatus::Ok);
        assert_eq!(hs_function_n(f), 10);
        let len = hs_function_len(f);
        let mut re = vec![0.0; len];
        let mut im = vec![0.0; len];
        assert_eq!(
            hs_function_values(f, re.as_mut_ptr(), im.as_mut_ptr(), len),
            HsStatus::Ok
        );

        let lim = TableLimit::default();
        let expect = normalized_real(&theorem_params(10).unwrap(), lim).unwrap();
        for (i, z) in expect.values().iter().enumerate() {
            assert_eq!((re[i], im[i]), (z.re, z.im));
        }

        let mut st = HsStats::default();
        assert_eq!(hs_stats(f, CAP, &mut st), HsStatus::Ok);
        let es = stats(&expect, lim).unwrap();
        assert_eq!(st.influence, es.influence);
        assert_eq!(st.entropy, es.entropy);
        assert_eq!(st.l2_norm, es.l2_norm);

        let mut s = ptr::null_mut();
        assert_eq!(hs_walsh_transform(f, CAP, &mut s), HsStatus::Ok);
        let mut cre = vec![0.0; len];
        assert_eq!(
            hs_spectrum_coeffs(s, cre.as_mut_ptr(), ptr::null_mut(), len),
            HsStatus::Ok
        );
        let es = walsh_transform(&expect, lim).unwrap();
        assert!(cre.iter().zip(es.coeffs()).all(|(a, b)| *a == b.re));
        let mut infl = 0.0;
        let mut ent = 0.0;
        assert_eq!(hs_spectrum_influence(s, &mut infl), HsStatus::Ok);
        assert_eq!(hs_spectrum_entropy(s, &mut ent), HsStatus::Ok);
        assert_eq!((infl, ent), (st.influence, st.entropy));

        let mut back = ptr::null_mut();
        assert_eq!(hs_inverse_transform(s, CAP, &mut back), HsStatus::Ok);
        let mut bre = vec![0.0; len];
        assert_eq!(
            hs_function_values(back, bre.as_mut_ptr(), ptr::null_mut(), len),
            HsStatus::Ok
        );
        assert!(bre.iter().zip(&re).all(|(a, b)| (a - b).abs() < 1e-12));

        let mut nc = HsNormalizedClosedForm::default();
        assert_eq!(hs_normalized_closed_form(params, &mut nc), HsStatus::Ok);
        let enc = normalized_closed_form(&theorem_params(10).unwrap());
        assert_eq!(nc.entropy, enc.entropy);
        assert!((nc.influence - 10.0 / 11.0).abs() < 1e-15);

        hs_function_free(back);
        hs_spectrum_free(s);
        hs_function_free(f);
        hs_params_free(params);
    }
}

#[test]
fn params_from_values_and_pq_tables() {
    unsafe {
        let a = [0.5, 0.25, 1.0];
        let mut params = ptr::null_mut();
        assert_eq!(
            hs_params_new(a.as_ptr(), a.len(), &mut params),
            HsStatus::Ok
        );

        let mut cf = HsClosedForm::default();
        assert_eq!(hs_closed_form(params, &mut cf), HsStatus::Ok);
        assert_eq!(cf.n, 3);
        let prod: f64 = a.iter().map(|x| 1.0 + x * x).product();
        assert!((cf.l2_norm - prod.sqrt()).abs() < 1e-15);

        let mut p = ptr::null_mut();
        let mut q = ptr::null_mut();
        assert_eq!(hs_build_pq(params, CAP, &mut p, &mut q), HsStatus::Ok);
        let mut pre = [0.0; 8];
        let mut qre = [0.0; 8];
        assert_eq!(
            hs_function_values(p, pre.as_mut_ptr(), ptr::null_mut(), 8),
            HsStatus::Ok
        );
        assert_eq!(
            hs_function_values(q, qre.as_mut_ptr(), ptr::null_mut(), 8),
            HsStatus::Ok
        );
        for x in 0..8u64 {
            let (mut pv, mut qv) = (0.0, 0.0);
            assert_eq!(hs_evaluate_at(params, x, &mut pv, &mut qv), HsStatus::Ok);
            assert!((pv - pre[x as usize]).abs() < 1e-12);
            assert!((qv - qre[x as usize]).abs() < 1e-12);
        }

        let mut st = HsStats::default();
        assert_eq!(hs_stats(p, CAP, &mut st), HsStatus::Ok);
        assert!((st.influence - cf.influence).abs() < 1e-12 * cf.influence);
        assert!((st.entropy - cf.entropy).abs() < 1e-9 * cf.entropy);

        hs_function_free(p);
        hs_function_free(q);
        hs_params_free(params);
    }
}

#[test]
fn other_builders() {
    unsafe {
        let mut f = ptr::null_mut();
        let mut st = HsStats::default();

        assert_eq!(hs_classical_normalized(8, CAP, &mut f), HsStatus::Ok);
        assert_eq!(hs_stats(f, CAP, &mut st), HsStatus::Ok);
        assert!((st.influence - 4.0).abs() < 1e-12 && (st.entropy - 8.0).abs() < 1e-12);
        hs_function_free(f);

        assert_eq!(hs_normalized_sum(16, CAP, &mut f), HsStatus::Ok);
        assert_eq!(hs_stats(f, CAP, &mut st), HsStatus::Ok);
        assert!((st.influence - 1.0).abs() < 1e-12 && (st.entropy - 4.0).abs() < 1e-12);
        hs_function_free(f);

        let mut g = ptr::null_mut();
        assert_eq!(
            hs_neeman_function(16, 10.0, true, CAP, &mut g),
            HsStatus::Ok
        );
        let mut sg = HsStats::default();
        assert_eq!(hs_stats(g, CAP, &mut sg), HsStatus::Ok);
        assert_eq!(sg, st);
        hs_function_free(g);

        let mut params = ptr::null_mut();
        assert_eq!(hs_params_theorem(6, &mut params), HsStatus::Ok);
        assert_eq!(hs_unimodular_complex(params, CAP, &mut f), HsStatus::Ok);
        let mut re = [0.0; 64];
        let mut im = [0.0; 64];
        assert_eq!(
            hs_function_values(f, re.as_mut_ptr(), im.as_mut_ptr(), 64),
            HsStatus::Ok
        );
        assert!(re
            .iter()
            .zip(&im)
            .all(|(x, y)| (x.hypot(*y) - 1.0).abs() < 1e-12));
        hs_function_free(f);
        hs_params_free(params);
    }
}

#[test]
fn certificates() {
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(hs_certify_theorem1(16, CAP, &mut cert), HsStatus::Ok);
        assert!(hs_certificate_passed(cert));
        assert_eq!(hs_certificate_check_count(cert), 7);
        let mut json = ptr::null_mut();
        assert_eq!(hs_certificate_to_json(cert, &mut json), HsStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["kind"], "theorem1");
        assert_eq!(v["overall"], true);
        let mut text = ptr::null_mut();
        assert_eq!(hs_certificate_to_text(cert, &mut text), HsStatus::Ok);
        assert!(take_string(text).contains("entropy_above_bound"));
        hs_certificate_free(cert);

        type Run = Box<dyn Fn(*mut *mut HsCertificate) -> HsStatus>;
        let runs: Vec<Run> = vec![
            Box::new(|out| hs_certify_theorem2(12, CAP, out)),
            Box::new(|out| hs_certify_theorem2_sampled(30, 1000, 1, out)),
            Box::new(|out| hs_certify_remark3(16, 4.0, CAP, out)),
            Box::new(|out| hs_certify_remark3(1 << 20, 32.0, CAP, out)),
            Box::new(|out| hs_certify_remark2(8, CAP, out)),
            Box::new(|out| hs_certify_classical_rs(8, CAP, out)),
        ];
        for run in runs {
            let mut cert = ptr::null_mut();
            assert_eq!(run(&mut cert), HsStatus::Ok);
            assert!(hs_certificate_passed(cert));
            hs_certificate_free(cert);
        }
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut params = ptr::null_mut();
        let bad = [0.5, 1.5];
        assert_eq!(
            hs_params_new(bad.as_ptr(), 2, &mut params),
            HsStatus::InvalidArgument
        );
        assert!(params.is_null());
        assert!(last_error().contains("a_2"), "{}", last_error());

        assert_eq!(
            hs_params_new(ptr::null(), 3, &mut params),
            HsStatus::NullPointer
        );
        assert_eq!(hs_params_theorem(4, ptr::null_mut()), HsStatus::NullPointer);
        assert_eq!(
            hs_params_remark3(16, 16.0, &mut params),
            HsStatus::InvalidArgument
        );
        assert_eq!(hs_params_theorem(0, &mut params), HsStatus::InvalidArgument);

        let mut f = ptr::null_mut();
        assert_eq!(hs_normalized_sum(30, CAP, &mut f), HsStatus::ResourceLimit);
        assert!(last_error().contains("30"));
        assert_eq!(hs_normalized_sum(12, 64, &mut f), HsStatus::Ok);
        let mut small = [0.0; 4];
        assert_eq!(
            hs_function_values(f, small.as_mut_ptr(), ptr::null_mut(), 4),
            HsStatus::BufferTooSmall
        );
        let mut st = HsStats::default();
        assert_eq!(hs_stats(f, 8, &mut st), HsStatus::ResourceLimit);
        hs_function_free(f);

        let re = [1.0, 2.0, 3.0];
        assert_eq!(
            hs_function_from_values(2, re.as_ptr(), ptr::null(), 3, &mut f),
            HsStatus::InvalidArgument
        );
        let nan = [f64::NAN, 0.0];
        assert_eq!(
            hs_function_from_values(1, nan.as_ptr(), ptr::null(), 2, &mut f),
            HsStatus::InvalidArgument
        );

        assert_eq!(
            hs_neeman_function(4, 0.0, true, CAP, &mut f),
            HsStatus::InvalidArgument
        );

        let mut cert = ptr::null_mut();
        assert_eq!(
            hs_certify_theorem1(27, CAP, &mut cert),
            HsStatus::ResourceLimit
        );
        assert!(cert.is_null());

        // NULL handles are tolerated by queries and frees
        assert_eq!(hs_function_len(ptr::null()), 0);
        assert!(!hs_certificate_passed(ptr::null()));
        hs_function_free(ptr::null_mut());
        hs_string_free(ptr::null_mut());
        let mut out = 0.0;
        assert_eq!(
            hs_spectrum_entropy(ptr::null(), &mut out),
            HsStatus::NullPointer
        );
    }
}

#[test]
fn errors_are_per_thread() {
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { hs_normalized_sum(30, CAP, &mut f) },
        HsStatus::ResourceLimit
    );
    std::thread::spawn(|| assert!(hs_last_error_message().is_null()))
        .join()
        .unwrap();
}

#[test]
fn text_round_trip() {
    unsafe {
        let mut params = ptr::null_mut();
        assert_eq!(hs_params_theorem(5, &mut params), HsStatus::Ok);
        let mut f = ptr::null_mut();
        assert_eq!(hs_unimodular_complex(params, CAP, &mut f), HsStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(hs_function_to_text(f, &mut text), HsStatus::Ok);
        let owned = take_string(text);
        assert!(owned.starts_with("n=5 kind=complex\n"));

        let c = CString::new(owned).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(hs_function_from_text(c.as_ptr(), CAP, &mut g), HsStatus::Ok);
        let (mut a, mut b) = ([0.0; 32], [0.0; 32]);
        let (mut x, mut y) = ([0.0; 32], [0.0; 32]);
        hs_function_values(f, a.as_mut_ptr(), b.as_mut_ptr(), 32);
        hs_function_values(g, x.as_mut_ptr(), y.as_mut_ptr(), 32);
        assert_eq!((a, b), (x, y));

        let mut s = ptr::null_mut();
        assert_eq!(hs_walsh_transform(f, CAP, &mut s), HsStatus::Ok);
        assert_eq!(hs_spectrum_to_text(s, &mut text), HsStatus::Ok);
        let spec = take_string(text);
        assert!(spec.starts_with("n=5 kind=spectrum\n"));
        let c = CString::new(spec).unwrap();
        assert_eq!(
            hs_function_from_text(c.as_ptr(), CAP, &mut g),
            HsStatus::InvalidArgument
        );

        let bad = CString::new("n=1 kind=real\n1\nxyz\n").unwrap();
        assert_eq!(
            hs_function_from_text(bad.as_ptr(), CAP, &mut g),
            HsStatus::ParseError
        );
        assert!(last_error().contains("line 3"));

        hs_spectrum_free(s);
        hs_function_free(f);
        hs_params_free(params);
    }
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hyperspec.h"))
            .unwrap();
    let source = include_str!("../src/lib.rs");
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 30);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    for ty in [
        "typedef struct HsParams HsParams;",
        "typedef struct HsFunction HsFunction;",
        "HS_STATUS_RESOURCE_LIMIT = 2",
    ] {
        assert!(header.contains(ty), "{ty}");
    }
}
