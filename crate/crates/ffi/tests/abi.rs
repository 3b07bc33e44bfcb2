use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lie_induct_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { lie_string_free(s) };
    out
}

fn last_error() -> String {
    let p = lie_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn handle(name: &str) -> *mut LieRootSystem {
    let name = CString::new(name).unwrap();
    let mut rs = ptr::null_mut();
    assert_eq!(unsafe { lie_root_system_new(name.as_ptr(), &mut rs) }, LieStatus::Ok);
    rs
}

#[test]
fn handle_queries() {
    let rs = handle("E8");
    unsafe {
        assert_eq!(lie_root_system_rank(rs), 8);
        assert_eq!(lie_root_system_num_roots(rs), 240);
        assert_eq!(lie_root_system_dimension(rs), 248);
        let mut h = [0i64; 8];
        assert_eq!(lie_root_system_highest_root(rs, h.as_mut_ptr(), 8), LieStatus::Ok);
        assert_eq!(h, [2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(lie_root_system_highest_root(rs, h.as_mut_ptr(), 7), LieStatus::RankMismatch);
        lie_root_system_free(rs);
        assert_eq!(lie_root_system_rank(ptr::null()), 0);
    }
}

#[test]
fn weyl_dimension_strings() {
    let rs = handle("E8");
    let mut out = ptr::null_mut();
    let rho = [1i64; 8];
    unsafe {
        assert_eq!(lie_weyl_dimension(rs, rho.as_ptr(), 8, &mut out), LieStatus::Ok);
        assert_eq!(take(out), "1329227995784915872903807060280344576");
        let bad = [1i64, -1, 0, 0, 0, 0, 0, 0];
        assert_eq!(lie_weyl_dimension(rs, bad.as_ptr(), 8, &mut out), LieStatus::NotDominant);
        assert!(out.is_null());
        assert!(last_error().starts_with("NotDominant"));
        lie_root_system_free(rs);
    }
}

#[test]
fn construction_errors() {
    let mut rs = ptr::null_mut();
    let bad = CString::new("C2").unwrap();
    unsafe {
        assert_eq!(lie_root_system_new(bad.as_ptr(), &mut rs), LieStatus::InvalidType);
        assert!(rs.is_null());
        assert_eq!(lie_root_system_new(ptr::null(), &mut rs), LieStatus::NullPointer);
        let not_utf8 = [0xffu8 as c_char, 0];
        assert_eq!(lie_root_system_new(not_utf8.as_ptr(), &mut rs), LieStatus::InvalidUtf8);
    }
}

#[test]
fn command_runner() {
    let args: Vec<CString> = ["report", "E9", "--format", "json"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let mut err = ptr::null_mut();
    let code = unsafe { lie_run(ptrs.len(), ptrs.as_ptr(), &mut out, &mut err) };
    assert_eq!(code, 0);
    let out = take(out);
    assert_eq!(take(err), "");
    assert!(out.contains("\"consistent\": false"));
    assert!(out.contains("\"377\""));

    let args: Vec<CString> = ["dim", "A5", "w9"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let mut err = ptr::null_mut();
    let code = unsafe { lie_run(ptrs.len(), ptrs.as_ptr(), ptr::null_mut(), &mut err) };
    assert_eq!(code, 1);
    assert!(take(err).contains("BadNode"));
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/lie_induct.h")).unwrap();
    for name in [
        "typedef struct LieRootSystem LieRootSystem;",
        "lie_root_system_new",
        "lie_root_system_free",
        "lie_root_system_highest_root",
        "lie_weyl_dimension",
        "lie_run",
        "lie_last_error",
        "lie_string_free",
        "LIE_STATUS_NOT_DOMINANT = 13",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Directory holding the library artefacts for this profile.
fn artefact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = artefact_dir().join("liblie_induct_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no static library at {} or no C compiler", lib.display());
        return;
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lie_induct_smoke");
    let status = Command::new(&cc)
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe).output().unwrap();
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "8 240\n");
}
