//! C ABI for `v12-core`.
//!
//! Every fallible function returns a [`V12Status`]; on failure a description
//! is available from [`v12_last_error`] on the same thread. Handles are
//! opaque and must be released with their `_free` function. Strings returned
//! through `char **` are owned by the caller and released with
//! [`v12_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use v12_core::bbw::{cohomology, make_bundle, CohomologyTable, HomogBundle};
use v12_core::cli::{parse_bundle_expr, run, verify_suite, VerifyReport};
use v12_core::sections::section_cohomology;
use v12_core::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum V12Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    UnknownName = 4,
    InvalidInput = 5,
    Computation = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// A homogeneous bundle on the spinor tenfold.
pub struct V12Bundle {
    bundle: HomogBundle,
}

/// The outcome of a verify suite.
pub struct V12Report {
    report: VerifyReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> V12Status {
    match e {
        Error::Syntax { .. } => V12Status::Syntax,
        Error::UnknownName(_) => V12Status::UnknownName,
        Error::MalformedWeight(_)
        | Error::MalformedClass(_)
        | Error::MixedParity(_)
        | Error::NotHalfInteger(_)
        | Error::NotDominant { .. }
        | Error::CodimOutOfRange(_) => V12Status::InvalidInput,
        _ => V12Status::Computation,
    }
}

struct Fail(V12Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> V12Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            V12Status::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            V12Status::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(V12Status::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(V12Status::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(V12Status::NullPointer, format!("{what} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail(V12Status::NullPointer, format!("{what} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("NUL bytes removed")
        .into_raw()
}

unsafe fn write_table(t: &CohomologyTable, dims: *mut u64, len: usize) -> Result<(), Fail> {
    if dims.is_null() {
        return Err(Fail(V12Status::NullPointer, "dims is null".into()));
    }
    let needed = t.max_degree().map_or(0, |d| d as usize + 1);
    if len < needed {
        return Err(Fail(
            V12Status::BufferTooSmall,
            format!("need {needed} entries, got {len}"),
        ));
    }
    let out = std::slice::from_raw_parts_mut(dims, len);
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = t.get(i as u32);
    }
    Ok(())
}

/// Message for the last failure on this thread, or NULL. Valid until the next
/// call into this library on the same thread.
#[no_mangle]
pub extern "C" fn v12_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn v12_status_name(status: V12Status) -> *const c_char {
    let s: &'static CStr = match status {
        V12Status::Ok => c"ok",
        V12Status::NullPointer => c"null pointer",
        V12Status::InvalidUtf8 => c"invalid UTF-8",
        V12Status::Syntax => c"syntax error",
        V12Status::UnknownName => c"unknown name",
        V12Status::InvalidInput => c"invalid input",
        V12Status::Computation => c"computation error",
        V12Status::BufferTooSmall => c"buffer too small",
        V12Status::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn v12_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a bundle expression such as `dual(U)*U(-1)`.
///
/// # Safety
/// `expr` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_bundle_parse(expr: *const c_char, out: *mut *mut V12Bundle) -> V12Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let text = str_arg(expr, "expr")?;
        let bundle = make_bundle(&parse_bundle_expr(text)?)?;
        *out = Box::into_raw(Box::new(V12Bundle { bundle }));
        Ok(())
    })
}

/// Releases a bundle. NULL is ignored.
///
/// # Safety
/// `b` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn v12_bundle_free(b: *mut V12Bundle) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// A new bundle `b(k)`.
///
/// # Safety
/// `b` must be a live bundle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_bundle_twist(b: *const V12Bundle, k: i64, out: *mut *mut V12Bundle) -> V12Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let b = ref_arg(b, "bundle")?;
        *out = Box::into_raw(Box::new(V12Bundle {
            bundle: b.bundle.twist(k),
        }));
        Ok(())
    })
}

/// Rank of the bundle.
///
/// # Safety
/// `b` must be a live bundle; `rank` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_bundle_rank(b: *const V12Bundle, rank: *mut u64) -> V12Status {
    guard(|| {
        *out_arg(rank, "rank")? = ref_arg(b, "bundle")?.bundle.rank();
        Ok(())
    })
}

/// Decomposition of the bundle as text, e.g. `E(0,0,0,0,-1)`.
///
/// # Safety
/// `b` must be a live bundle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_bundle_describe(b: *const V12Bundle, out: *mut *mut c_char) -> V12Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = c_string(ref_arg(b, "bundle")?.bundle.to_string());
        Ok(())
    })
}

/// Writes dim H^i(Σ, b) into `dims[i]` for i < len. Fails with
/// `BufferTooSmall` when a nonzero degree does not fit; 11 entries always do.
///
/// # Safety
/// `b` must be a live bundle; `dims` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn v12_bundle_cohomology(b: *const V12Bundle, dims: *mut u64, len: usize) -> V12Status {
    guard(|| write_table(&cohomology(&ref_arg(b, "bundle")?.bundle), dims, len))
}

/// Cohomology of the bundle on the generic linear section of codimension
/// `codim`. When `*exact` is 0 the dimensions are upper bounds and only
/// `*euler` is certain.
///
/// # Safety
/// `b` must be a live bundle; `dims` must have room for `len` values;
/// `exact` and `euler` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_section_cohomology(
    b: *const V12Bundle,
    codim: u32,
    dims: *mut u64,
    len: usize,
    exact: *mut i32,
    euler: *mut i64,
) -> V12Status {
    guard(|| {
        let (exact, euler) = (out_arg(exact, "exact")?, out_arg(euler, "euler")?);
        let r = section_cohomology(&ref_arg(b, "bundle")?.bundle, codim)?;
        write_table(&r.table, dims, len)?;
        *exact = i32::from(r.is_exact());
        *euler = r.euler;
        Ok(())
    })
}

/// Runs the command-line interface on `argv[0..argc]` (without the program
/// name), capturing both streams.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; the out-pointers must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn v12_cli(
    argv: *const *const c_char,
    argc: usize,
    exit_code: *mut i32,
    out: *mut *mut c_char,
    err: *mut *mut c_char,
) -> V12Status {
    guard(|| {
        let (exit_code, out, err) = (out_arg(exit_code, "exit_code")?, out_arg(out, "out")?, out_arg(err, "err")?);
        if argv.is_null() && argc > 0 {
            return Err(Fail(V12Status::NullPointer, "argv is null".into()));
        }
        let mut args = vec!["v12".to_string()];
        for i in 0..argc {
            args.push(str_arg(*argv.add(i), "argument")?.to_string());
        }
        let (mut o, mut e) = (Vec::new(), Vec::new());
        *exit_code = run(args, &mut o, &mut e);
        *out = c_string(String::from_utf8_lossy(&o).into_owned());
        *err = c_string(String::from_utf8_lossy(&e).into_owned());
        Ok(())
    })
}

/// Chern data of `E1`, `E2`, `U-plus`, `eta2` or `gamma2` as JSON.
///
/// # Safety
/// `target` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_chern_json(target: *const c_char, out: *mut *mut c_char) -> V12Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let target = str_arg(target, "target")?;
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(["v12", "chern", "--target", target, "--format", "json"], &mut o, &mut e);
        if code != 0 {
            let msg = String::from_utf8_lossy(&e).trim().to_string();
            let status = if code == 2 { V12Status::UnknownName } else { V12Status::Computation };
            return Err(Fail(status, msg));
        }
        *out = c_string(String::from_utf8_lossy(&o).trim_end().to_string());
        Ok(())
    })
}

/// Runs a verify suite (`all`, `bbw`, `koszul`, `cherns`, `sod`, `conics`).
///
/// # Safety
/// `suite` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_verify(suite: *const c_char, out: *mut *mut V12Report) -> V12Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let report = verify_suite(str_arg(suite, "suite")?.parse()?);
        *out = Box::into_raw(Box::new(V12Report { report }));
        Ok(())
    })
}

/// Releases a report. NULL is ignored.
///
/// # Safety
/// `r` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn v12_report_free(r: *mut V12Report) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Whether every check passed (1) or not (0).
///
/// # Safety
/// `r` must be a live report; `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_report_pass(r: *const V12Report, pass: *mut i32) -> V12Status {
    guard(|| {
        *out_arg(pass, "pass")? = i32::from(ref_arg(r, "report")?.report.pass);
        Ok(())
    })
}

/// Number of checks, and how many passed.
///
/// # Safety
/// `r` must be a live report; `total` and `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_report_counts(r: *const V12Report, total: *mut usize, passed: *mut usize) -> V12Status {
    guard(|| {
        let checks = &ref_arg(r, "report")?.report.checks;
        *out_arg(total, "total")? = checks.len();
        *out_arg(passed, "passed")? = checks.iter().filter(|c| c.pass).count();
        Ok(())
    })
}

/// The report as JSON.
///
/// # Safety
/// `r` must be a live report; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn v12_report_json(r: *const V12Report, out: *mut *mut c_char) -> V12Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        let report = &ref_arg(r, "report")?.report;
        let json = serde_json::to_string_pretty(report)
            .map_err(|e| Fail(V12Status::Computation, e.to_string()))?;
        *out = c_string(json);
        Ok(())
    })
}
