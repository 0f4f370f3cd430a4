//! C interface to `gmdeg`.
//!
//! Every function returns a [`GmdegStatus`]. Results are written through out
//! pointers; objects are opaque handles released with the matching `_free`
//! function. After a non-`OK` status, `gmdeg_last_error` describes the
//! failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clap::Parser;
use gmdeg::cli::{execute, Cli, CliError};
use gmdeg::fibration::geometry::{conic_rank_at, ConicRank};
use gmdeg::fibration::instance::{sample_instance, FibrationInstance};
use gmdeg::gin::Diagram;
use gmdeg::report::Report;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GmdegStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    /// The command line could not be parsed.
    Usage = 4,
    /// Reading an input file failed.
    Io = 5,
    Internal = 6,
}

/// Value written by `gmdeg_instance_conic_rank` when the fibre is degenerate.
pub const GMDEG_DEGENERATE_FIBER: i32 = -1;

/// A finished report.
pub struct GmdegReport {
    report: Report,
    json: CString,
}

/// A sampled fibration instance.
pub struct GmdegInstance {
    inner: FibrationInstance,
}

/// A parsed diagram.
pub struct GmdegDiagram {
    inner: Diagram,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("no interior nul"));
}

fn fail(status: GmdegStatus, message: impl Into<String>) -> GmdegStatus {
    set_error(message);
    status
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> GmdegStatus) -> GmdegStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(GmdegStatus::Internal, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, GmdegStatus> {
    if p.is_null() {
        return Err(fail(GmdegStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(GmdegStatus::InvalidUtf8, "argument is not UTF-8"))
}

/// Message for the last failing call on this thread. Valid until the next
/// call on the same thread; never null.
#[no_mangle]
pub extern "C" fn gmdeg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn gmdeg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Runs a command given as `argc` arguments without the program name, for
/// example `{"lattice", "sextic"}`, and stores the report in `*out`.
///
/// # Safety
/// `argv` must point to `argc` valid nul-terminated strings and `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_run(
    argc: usize,
    argv: *const *const c_char,
    out: *mut *mut GmdegReport,
) -> GmdegStatus {
    guard(|| {
        if out.is_null() || (argc > 0 && argv.is_null()) {
            return fail(GmdegStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let mut args = vec!["gmdeg".to_string()];
        for i in 0..argc {
            match str_arg(*argv.add(i)) {
                Ok(s) => args.push(s.to_string()),
                Err(status) => return status,
            }
        }
        let cli = match Cli::try_parse_from(&args) {
            Ok(c) => c,
            Err(e) => return fail(GmdegStatus::Usage, e.to_string()),
        };
        let report = match execute(&cli) {
            Ok(r) => r,
            Err(e @ CliError::Io(_)) => return fail(GmdegStatus::Io, e.to_string()),
            Err(e) => return fail(GmdegStatus::InvalidArgument, e.to_string()),
        };
        let json = CString::new(report.to_json()).expect("JSON has no nul");
        *out = Box::into_raw(Box::new(GmdegReport { report, json }));
        GmdegStatus::Ok
    })
}

/// The report as JSON, owned by the handle.
///
/// # Safety
/// `report` must be a live handle from `gmdeg_run`.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_report_json(
    report: *const GmdegReport,
    out: *mut *const c_char,
) -> GmdegStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return fail(GmdegStatus::NullPointer, "null argument");
        }
        *out = (*report).json.as_ptr();
        GmdegStatus::Ok
    })
}

/// Writes 1 if every check of the report passed, else 0.
///
/// # Safety
/// `report` must be a live handle from `gmdeg_run`.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_report_passed(
    report: *const GmdegReport,
    out: *mut i32,
) -> GmdegStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return fail(GmdegStatus::NullPointer, "null argument");
        }
        *out = i32::from((*report).report.passed());
        GmdegStatus::Ok
    })
}

/// # Safety
/// `report` must be null or a handle from `gmdeg_run` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_report_free(report: *mut GmdegReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Samples the instance determined by `(p, seed)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_instance_sample(
    p: u32,
    seed: u64,
    out: *mut *mut GmdegInstance,
) -> GmdegStatus {
    guard(|| {
        if out.is_null() {
            return fail(GmdegStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        match sample_instance(p, seed) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(GmdegInstance { inner }));
                GmdegStatus::Ok
            }
            Err(e) => fail(GmdegStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Rank of the conic over the point `y[0..4]` of `P(V)`, or
/// `GMDEG_DEGENERATE_FIBER`.
///
/// # Safety
/// `inst` must be a live handle, `y` must point to 4 values and `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_instance_conic_rank(
    inst: *const GmdegInstance,
    y: *const u32,
    out: *mut i32,
) -> GmdegStatus {
    guard(|| {
        if inst.is_null() || y.is_null() || out.is_null() {
            return fail(GmdegStatus::NullPointer, "null argument");
        }
        let y = std::slice::from_raw_parts(y, 4);
        match conic_rank_at(&(*inst).inner, y) {
            Ok(ConicRank::Rank(r)) => {
                *out = i32::from(r);
                GmdegStatus::Ok
            }
            Ok(ConicRank::DegenerateFiber) => {
                *out = GMDEG_DEGENERATE_FIBER;
                GmdegStatus::Ok
            }
            Err(e) => fail(GmdegStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `inst` must be null or a handle from `gmdeg_instance_sample` not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_instance_free(inst: *mut GmdegInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Parses a diagram in the text format of `gmdeg gin validate` and checks
/// its conditions.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_diagram_parse(
    text: *const c_char,
    out: *mut *mut GmdegDiagram,
) -> GmdegStatus {
    guard(|| {
        if out.is_null() {
            return fail(GmdegStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let text = match str_arg(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let inner: Diagram = match text.parse() {
            Ok(d) => d,
            Err(e) => return fail(GmdegStatus::InvalidArgument, format!("{e}")),
        };
        if let Err(v) = inner.validate() {
            return fail(GmdegStatus::InvalidArgument, v.to_string());
        }
        *out = Box::into_raw(Box::new(GmdegDiagram { inner }));
        GmdegStatus::Ok
    })
}

/// Degree and arithmetic genus of the curve described by the diagram.
///
/// # Safety
/// `diagram` must be a live handle and the out pointers valid.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_diagram_invariants(
    diagram: *const GmdegDiagram,
    degree: *mut u32,
    genus: *mut i64,
) -> GmdegStatus {
    guard(|| {
        if diagram.is_null() || degree.is_null() || genus.is_null() {
            return fail(GmdegStatus::NullPointer, "null argument");
        }
        let d = &(*diagram).inner;
        match (d.degree(), d.genus()) {
            (Ok(n), Ok(g)) => {
                *degree = n as u32;
                *genus = g;
                GmdegStatus::Ok
            }
            (Err(e), _) | (_, Err(e)) => fail(GmdegStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `diagram` must be null or a handle from `gmdeg_diagram_parse` not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn gmdeg_diagram_free(diagram: *mut GmdegDiagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}
