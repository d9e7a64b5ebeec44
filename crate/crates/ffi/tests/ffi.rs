use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use knotlab_ffi::*;

fn parse(text: &str) -> *mut KlDiagram {
    let c = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { kl_diagram_parse(c.as_ptr(), &mut d) }, KlStatus::Ok);
    d
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { kl_string_free(s) };
    out
}

fn last_error() -> String {
    let p = kl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn trefoil_round_trip() {
    let d = parse("X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n");
    let mut n = 0usize;
    let mut w = 0i32;
    let mut ok = false;
    unsafe {
        assert_eq!(kl_diagram_crossing_count(d, &mut n), KlStatus::Ok);
        assert_eq!(kl_diagram_writhe(d, &mut w), KlStatus::Ok);
        assert_eq!(kl_diagram_validate(d, &mut ok), KlStatus::Ok);
    }
    assert_eq!((n, w, ok), (3, 3, true));
    let mut inv = KlInvariants::default();
    assert_eq!(unsafe { kl_invariants(d, &mut inv) }, KlStatus::Ok);
    assert_eq!(inv, KlInvariants { determinant: 3, signature: -2, genus_lower_bound: 1 });
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { kl_diagram_to_pd(d, &mut s) }, KlStatus::Ok);
    assert_eq!(take_string(s), "X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n");
    unsafe { kl_diagram_free(d) };
}

#[test]
fn errors_map_to_status_codes() {
    let mut d = ptr::null_mut();
    let bad = CString::new("X 1,2,3,4\n").unwrap();
    assert_eq!(unsafe { kl_diagram_parse(bad.as_ptr(), &mut d) }, KlStatus::Parse);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { kl_diagram_parse(ptr::null(), &mut d) }, KlStatus::NullPointer);
    assert_eq!(unsafe { kl_construct_twist(5, &mut d) }, KlStatus::Construction);
    assert_eq!(unsafe { kl_construct_rational(ptr::null(), 0, &mut d) }, KlStatus::Construction);
    let mut inv = KlInvariants::default();
    assert_eq!(unsafe { kl_invariants(ptr::null(), &mut inv) }, KlStatus::NullPointer);
    let hopf = parse("X 4,1,3,2\nX 2,3,1,4\n");
    assert_eq!(unsafe { kl_invariants(hopf, &mut inv) }, KlStatus::NotAKnot);
    let nonplanar = parse("X 1,5,2,4\nX 3,6,4,1\nX 5,2,6,3\n");
    let mut ok = true;
    assert_eq!(unsafe { kl_diagram_validate(nonplanar, &mut ok) }, KlStatus::Ok);
    assert!(!ok);
    assert!(!last_error().is_empty());
    unsafe {
        kl_diagram_free(hopf);
        kl_diagram_free(nonplanar);
        kl_diagram_free(ptr::null_mut());
        kl_string_free(ptr::null_mut());
    }
}

#[test]
fn constructions_and_identification() {
    let cf = [2i64, 4];
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { kl_construct_rational(cf.as_ptr(), 2, &mut d) }, KlStatus::Ok);
    let mut name = ptr::null_mut();
    let mut mirror = true;
    assert_eq!(unsafe { kl_identify(d, &mut name, &mut mirror) }, KlStatus::Ok);
    assert_eq!(take_string(name), "6_1");
    let mut dbl = ptr::null_mut();
    let unknot = parse("X 1,2,2,1\n");
    assert_eq!(unsafe { kl_construct_double(unknot, 2, 1, &mut dbl) }, KlStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { kl_alexander(dbl, &mut s) }, KlStatus::Ok);
    assert_eq!(take_string(s), "2 -5 2");
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { kl_construct_torus(7, &mut t) }, KlStatus::Ok);
    assert_eq!(unsafe { kl_identify(t, &mut name, &mut mirror) }, KlStatus::NotFound);
    for n in 0..3 {
        let mut f = ptr::null_mut();
        assert_eq!(unsafe { kl_paper_family(n, &mut f) }, KlStatus::Ok);
        assert_eq!(unsafe { kl_identify(f, &mut name, &mut mirror) }, KlStatus::Ok);
        assert_eq!(take_string(name), ["6_1", "8_1", "10_1"][n as usize]);
        unsafe { kl_diagram_free(f) };
    }
    unsafe {
        kl_diagram_free(d);
        kl_diagram_free(dbl);
        kl_diagram_free(unknot);
        kl_diagram_free(t);
    }
}

#[test]
fn bf_verdicts() {
    let mut v = KlVerdict::Fails;
    assert_eq!(unsafe { kl_bf_verdict(2, true, &mut v) }, KlStatus::Ok);
    assert_eq!(v, KlVerdict::PersistentlyLaminar);
    assert_eq!(unsafe { kl_bf_verdict(2, false, &mut v) }, KlStatus::Ok);
    assert_eq!(v, KlVerdict::EssentialOnlyUnknown);
    assert_eq!(unsafe { kl_bf_verdict(2, false, ptr::null_mut()) }, KlStatus::NullPointer);
}

#[test]
fn header_is_current() {
    let header = include_str!("../include/knotlab.h");
    for f in ["kl_diagram_parse", "kl_identify", "kl_bf_verdict", "KL_STATUS_AMBIGUOUS", "typedef struct KlDiagram KlDiagram;"] {
        assert!(header.contains(f), "{f}");
    }
}

/// Compiles `smoke.c` against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let target_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = target_dir.join("libknotlab_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = tempfile_path("knotlab_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
    let _ = std::fs::remove_file(exe);
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}
