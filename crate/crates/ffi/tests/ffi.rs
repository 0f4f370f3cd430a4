use std::ffi::{c_char, CStr, CString};
use std::ptr;

use gmdeg_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(gmdeg_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (GmdegStatus, *mut GmdegReport) {
    let owned: Vec<CString> = args.iter().map(|a| CString::new(*a).unwrap()).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let status = unsafe { gmdeg_run(ptrs.len(), ptrs.as_ptr(), &mut out) };
    (status, out)
}

#[test]
fn run_returns_a_report_handle() {
    let (status, report) = run(&["lattice", "sextic"]);
    assert_eq!(status, GmdegStatus::Ok);
    assert!(!report.is_null());
    let mut passed = -1;
    let mut json = ptr::null();
    unsafe {
        assert_eq!(gmdeg_report_passed(report, &mut passed), GmdegStatus::Ok);
        assert_eq!(gmdeg_report_json(report, &mut json), GmdegStatus::Ok);
    }
    assert_eq!(passed, 1);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap();
    let value: serde_json::Value = serde_json::from_str(text).unwrap();
    assert_eq!(value["command"], "lattice sextic");
    assert_eq!(value["status"], "PASS");
    unsafe { gmdeg_report_free(report) };
}

#[test]
fn usage_errors_set_the_message() {
    let (status, report) = run(&["fibration", "strata"]);
    assert_eq!(status, GmdegStatus::Usage);
    assert!(report.is_null());
    assert!(last_error().contains("--seed"));

    let (status, _) = run(&["gin", "validate", "/nonexistent/file"]);
    assert_eq!(status, GmdegStatus::Io);
    let (status, _) = run(&["gin", "enumerate", "--degree", "0"]);
    assert_eq!(status, GmdegStatus::InvalidArgument);
}

#[test]
fn null_pointers_are_rejected() {
    unsafe {
        assert_eq!(
            gmdeg_run(1, ptr::null(), ptr::null_mut()),
            GmdegStatus::NullPointer
        );
        assert_eq!(
            gmdeg_report_passed(ptr::null(), &mut 0),
            GmdegStatus::NullPointer
        );
        assert_eq!(
            gmdeg_instance_sample(7, 1, ptr::null_mut()),
            GmdegStatus::NullPointer
        );
        assert_eq!(
            gmdeg_diagram_parse(ptr::null(), &mut ptr::null_mut()),
            GmdegStatus::NullPointer
        );
        gmdeg_report_free(ptr::null_mut());
        gmdeg_instance_free(ptr::null_mut());
        gmdeg_diagram_free(ptr::null_mut());
    }
    assert!(!last_error().is_empty());
}

#[test]
fn invalid_utf8_is_reported() {
    let bad = [0xffu8, 0];
    let ptrs = [bad.as_ptr().cast::<c_char>()];
    let mut out = ptr::null_mut();
    let status = unsafe { gmdeg_run(1, ptrs.as_ptr(), &mut out) };
    assert_eq!(status, GmdegStatus::InvalidUtf8);
}

#[test]
fn instance_conic_rank_agrees_with_the_library() {
    let mut inst = ptr::null_mut();
    assert_eq!(
        unsafe { gmdeg_instance_sample(101, 3, &mut inst) },
        GmdegStatus::Ok
    );
    let lib = gmdeg::fibration::instance::sample_instance(101, 3).unwrap();
    for i in 0..200 {
        let y = gmdeg::fibration::census::trial_point(5, i, 101);
        let mut rank = 99;
        assert_eq!(
            unsafe { gmdeg_instance_conic_rank(inst, y.as_ptr(), &mut rank) },
            GmdegStatus::Ok
        );
        let expected = match gmdeg::fibration::geometry::conic_rank_at(&lib, &y).unwrap() {
            gmdeg::fibration::geometry::ConicRank::Rank(r) => i32::from(r),
            gmdeg::fibration::geometry::ConicRank::DegenerateFiber => GMDEG_DEGENERATE_FIBER,
        };
        assert_eq!(rank, expected);
    }
    let zero = [0u32; 4];
    let mut rank = 0;
    assert_eq!(
        unsafe { gmdeg_instance_conic_rank(inst, zero.as_ptr(), &mut rank) },
        GmdegStatus::InvalidArgument
    );
    unsafe { gmdeg_instance_free(inst) };

    let mut bad = ptr::null_mut();
    assert_eq!(
        unsafe { gmdeg_instance_sample(100, 1, &mut bad) },
        GmdegStatus::InvalidArgument
    );
    assert!(bad.is_null());
}

#[test]
fn diagram_invariants() {
    let text = CString::new("o\no o\n* 1 o\n* * * o\n* * * * *\n").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { gmdeg_diagram_parse(text.as_ptr(), &mut d) },
        GmdegStatus::Ok
    );
    let (mut degree, mut genus) = (0u32, 0i64);
    assert_eq!(
        unsafe { gmdeg_diagram_invariants(d, &mut degree, &mut genus) },
        GmdegStatus::Ok
    );
    assert_eq!((degree, genus), (5, 2));
    unsafe { gmdeg_diagram_free(d) };

    let invalid = CString::new("o\no *\n* * *\n").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { gmdeg_diagram_parse(invalid.as_ptr(), &mut d) },
        GmdegStatus::InvalidArgument
    );
    assert!(d.is_null());
    assert!(last_error().contains("(1, 0)"), "{}", last_error());
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(gmdeg_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn committed_header_declares_every_export() {
    let header = include_str!("../include/gmdeg.h");
    for name in [
        "gmdeg_last_error",
        "gmdeg_version",
        "gmdeg_run",
        "gmdeg_report_json",
        "gmdeg_report_passed",
        "gmdeg_report_free",
        "gmdeg_instance_sample",
        "gmdeg_instance_conic_rank",
        "gmdeg_instance_free",
        "gmdeg_diagram_parse",
        "gmdeg_diagram_invariants",
        "gmdeg_diagram_free",
        "GMDEG_STATUS_USAGE",
        "GMDEG_DEGENERATE_FIBER",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("check.c");
    std::fs::write(
        &src,
        "#include \"gmdeg.h\"\nint main(void) { GmdegReport *r = 0; (void)r; return GMDEG_STATUS_OK; }\n",
    )
    .unwrap();
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let status = std::process::Command::new(cc)
        .args([
            "-std=c99",
            "-Wall",
            "-Werror",
            "-fsyntax-only",
            "-I",
            include,
        ])
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            std::process::Command::new(c)
                .arg("--version")
                .output()
                .is_ok()
        })
        .ok_or(())
}
