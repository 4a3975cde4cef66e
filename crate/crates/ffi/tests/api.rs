use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hecke_g5_ffi::*;

fn parse(s: &str) -> *mut H5Elt {
    let c = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { h5_elt_parse(c.as_ptr(), &mut out) }, H5Status::Ok);
    out
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { h5_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(h5_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn parse_print_and_norm() {
    let x = parse("12*L+7");
    assert_eq!(take_string(unsafe { h5_elt_to_string(x) }), "12*L+7");
    let mut n = 0;
    assert_eq!(unsafe { h5_elt_norm(x, &mut n) }, H5Status::Ok);
    assert_eq!(n, 7 * 7 + 7 * 12 - 12 * 12);
    let (mut a, mut b) = (0, 0);
    assert_eq!(unsafe { h5_elt_coords(x, &mut a, &mut b) }, H5Status::Ok);
    assert_eq!((a, b), (7, 12));
    unsafe { h5_elt_free(x) };
}

#[test]
fn errors_carry_status_and_message() {
    let text = CString::new("2*L+x").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { h5_elt_parse(text.as_ptr(), &mut out) };
    assert_eq!(status, H5Status::SyntaxError);
    assert!(out.is_null());
    assert!(last_error().contains("position 4"));
    let name = unsafe { CStr::from_ptr(h5_status_name(status)) };
    assert_eq!(name.to_str().unwrap(), "syntax_error");

    assert_eq!(
        unsafe { h5_elt_parse(ptr::null(), &mut out) },
        H5Status::NullPointer
    );
    let one = h5_elt_new(1, 0);
    let mut modulus = ptr::null_mut();
    let mut h = 0;
    assert_eq!(
        unsafe { h5_normalizer(one, &mut modulus, &mut h) },
        H5Status::UnitModulus
    );
    let huge = h5_elt_new(i64::MAX, 1);
    let mut n = 0;
    assert_eq!(unsafe { h5_elt_norm(huge, &mut n) }, H5Status::Overflow);
    unsafe {
        h5_elt_free(one);
        h5_elt_free(huge);
    }
}

#[test]
fn reduce_index_normalizer() {
    let num = parse("2*L-1");
    let den = h5_elt_new(192, 0);
    let (mut e, mut rn, mut rd) = (0, ptr::null_mut(), ptr::null_mut());
    assert_eq!(
        unsafe { h5_reduce(num, den, &mut e, &mut rn, &mut rd) },
        H5Status::Ok
    );
    assert_eq!(e, 18);
    assert_eq!(take_string(unsafe { h5_elt_to_string(rn) }), "5778*L+3571");

    let tau = h5_elt_new(16, 0);
    let mut index = 0;
    assert_eq!(unsafe { h5_index(tau, &mut index) }, H5Status::Ok);
    assert_eq!(index, 320);
    let (mut modulus, mut h) = (ptr::null_mut(), 0);
    assert_eq!(
        unsafe { h5_normalizer(tau, &mut modulus, &mut h) },
        H5Status::Ok
    );
    assert_eq!(h, 4);
    assert_eq!(take_string(unsafe { h5_elt_to_string(modulus) }), "4");

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { h5_factor_json(tau, &mut json) }, H5Status::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["factors"][0]["multiplicity"], 4);
    unsafe {
        for p in [num, den, rn, rd, tau, modulus] {
            h5_elt_free(p);
        }
    }
}

#[test]
fn matrices_and_membership() {
    let entries = ["1", "0", "4*L", "1"].map(parse);
    let mut m = ptr::null_mut();
    let status = unsafe { h5_matrix_new(entries[0], entries[1], entries[2], entries[3], &mut m) };
    assert_eq!(status, H5Status::Ok);
    assert_eq!(
        take_string(unsafe { h5_matrix_to_string(m) }),
        "[[1, 0], [4*L, 1]]"
    );
    for (t, want) in [(4, true), (8, false)] {
        let tau = h5_elt_new(t, 0);
        let mut inside = !want;
        assert_eq!(unsafe { h5_g0_contains(m, tau, &mut inside) }, H5Status::Ok);
        assert_eq!(inside, want);
        unsafe { h5_elt_free(tau) };
    }
    let mut bad = ptr::null_mut();
    let status = unsafe { h5_matrix_new(entries[0], entries[0], entries[0], entries[0], &mut bad) };
    assert_eq!(status, H5Status::BadDeterminant);
    unsafe {
        h5_matrix_free(m);
        for e in entries {
            h5_elt_free(e);
        }
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libhecke_g5_ffi.a");
    let out = std::env::temp_dir().join(format!("h5-smoke-{}", std::process::id()));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() || !lib.exists() {
        eprintln!(
            "skipping: no C compiler or static library at {}",
            lib.display()
        );
        return;
    }
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    std::fs::remove_file(&out).ok();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(run.stdout, b"ok\n");
}
