//! C ABI over the `lie_induct` engine.
//!
//! Root systems are opaque handles created with [`lie_root_system_new`] and
//! released with [`lie_root_system_free`]. Functions that can fail return a
//! [`LieStatus`]; the message for the most recent failure on the calling
//! thread is available from [`lie_last_error`]. Strings returned through
//! out-parameters are owned by the caller and freed with
//! [`lie_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lie_induct::rep_theory::weyl_dim;
use lie_induct::{LieError, RootSystem, Weight};

/// Opaque root system handle.
pub struct LieRootSystem(RootSystem);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Panic = 3,
    InvalidType = 10,
    NotARoot = 11,
    NonIntegral = 12,
    NotDominant = 13,
    RankMismatch = 14,
    NotACharacter = 15,
    InternalParity = 16,
    IrreducibilityMismatch = 17,
    EmptyLevel = 18,
    NonUniquePrimitive = 19,
    BijectionFailure = 20,
    BadEmbedding = 21,
    TrivialFirstLevel = 22,
    BadNode = 23,
    Overflow = 24,
    Parse = 25,
}

impl From<&LieError> for LieStatus {
    fn from(e: &LieError) -> Self {
        match e {
            LieError::InvalidType(_) => LieStatus::InvalidType,
            LieError::NotARoot(..) => LieStatus::NotARoot,
            LieError::NonIntegral(_) => LieStatus::NonIntegral,
            LieError::NotDominant(_) => LieStatus::NotDominant,
            LieError::RankMismatch { .. } => LieStatus::RankMismatch,
            LieError::NotACharacter(_) => LieStatus::NotACharacter,
            LieError::InternalParity(_) => LieStatus::InternalParity,
            LieError::IrreducibilityMismatch { .. } => LieStatus::IrreducibilityMismatch,
            LieError::EmptyLevel(_) => LieStatus::EmptyLevel,
            LieError::NonUniquePrimitive(..) => LieStatus::NonUniquePrimitive,
            LieError::BijectionFailure(..) => LieStatus::BijectionFailure,
            LieError::BadEmbedding(_) => LieStatus::BadEmbedding,
            LieError::TrivialFirstLevel => LieStatus::TrivialFirstLevel,
            LieError::BadNode { .. } => LieStatus::BadNode,
            LieError::Overflow(_) => LieStatus::Overflow,
            LieError::Parse(_) => LieStatus::Parse,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: LieStatus, msg: String) -> LieStatus {
    set_error(msg);
    status
}

fn engine_error(e: LieError) -> LieStatus {
    fail(LieStatus::from(&e), format!("{}: {e}", e.name()))
}

/// Run `f`, turning a panic into [`LieStatus::Panic`].
fn guard(f: impl FnOnce() -> LieStatus) -> LieStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            fail(LieStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, LieStatus> {
    if p.is_null() {
        return Err(fail(LieStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(LieStatus::InvalidUtf8, "string is not UTF-8".into()))
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Free a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lie_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build the root system of a Dynkin type such as `"E8"`.
///
/// # Safety
/// `dynkin` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lie_root_system_new(dynkin: *const c_char, out: *mut *mut LieRootSystem) -> LieStatus {
    guard(|| {
        if out.is_null() {
            return fail(LieStatus::NullPointer, "null output pointer".into());
        }
        *out = ptr::null_mut();
        let text = match read_str(dynkin) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match RootSystem::build(text) {
            Ok(rs) => {
                *out = Box::into_raw(Box::new(LieRootSystem(rs)));
                LieStatus::Ok
            }
            Err(e) => engine_error(e),
        }
    })
}

/// # Safety
/// `rs` must come from [`lie_root_system_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lie_root_system_free(rs: *mut LieRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Rank, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lie_root_system_rank(rs: *const LieRootSystem) -> usize {
    rs.as_ref().map_or(0, |r| r.0.rank())
}

/// Number of roots, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lie_root_system_num_roots(rs: *const LieRootSystem) -> usize {
    rs.as_ref().map_or(0, |r| r.0.num_roots())
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lie_root_system_dimension(rs: *const LieRootSystem) -> usize {
    rs.as_ref().map_or(0, |r| r.0.dimension())
}

/// Copy the highest root's simple-root coefficients into `out[0..len]`;
/// `len` must equal the rank.
///
/// # Safety
/// `rs` must be a live handle and `out` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn lie_root_system_highest_root(rs: *const LieRootSystem, out: *mut i64, len: usize) -> LieStatus {
    guard(|| {
        let Some(rs) = rs.as_ref() else {
            return fail(LieStatus::NullPointer, "null handle".into());
        };
        if out.is_null() {
            return fail(LieStatus::NullPointer, "null output buffer".into());
        }
        let h = rs.0.highest_root();
        if len != h.0.len() {
            return engine_error(LieError::RankMismatch {
                expected: h.0.len(),
                got: len,
            });
        }
        std::slice::from_raw_parts_mut(out, len).copy_from_slice(&h.0);
        LieStatus::Ok
    })
}

/// Weyl dimension of `V(weight)` as a decimal string in `*out`.
///
/// # Safety
/// `rs` must be a live handle, `weight` must point to `len` values and
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lie_weyl_dimension(
    rs: *const LieRootSystem,
    weight: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> LieStatus {
    guard(|| {
        let Some(rs) = rs.as_ref() else {
            return fail(LieStatus::NullPointer, "null handle".into());
        };
        if out.is_null() || (weight.is_null() && len > 0) {
            return fail(LieStatus::NullPointer, "null pointer argument".into());
        }
        *out = ptr::null_mut();
        let coords = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(weight, len).to_vec() };
        if coords.len() != rs.0.rank() {
            return engine_error(LieError::RankMismatch {
                expected: rs.0.rank(),
                got: coords.len(),
            });
        }
        match weyl_dim(&rs.0, &Weight(coords)) {
            Ok(d) => {
                *out = into_c(d.to_string());
                LieStatus::Ok
            }
            Err(e) => engine_error(e),
        }
    })
}

/// Run one command-line invocation, for example
/// `{"report", "E9", "--format", "json"}`, without the program name.
/// Standard output and error are returned as strings; the return value is
/// the process exit code (0 success, 1 domain error, 2 usage error), or -1
/// if the arguments could not be read.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `out` and `err`
/// must be valid pointers or null.
#[no_mangle]
pub unsafe extern "C" fn lie_run(argc: usize, argv: *const *const c_char, out: *mut *mut c_char, err: *mut *mut c_char) -> c_int {
    let mut args = vec!["lie-induct".to_string()];
    for i in 0..argc {
        if argv.is_null() {
            set_error("null argv".into());
            return -1;
        }
        match read_str(*argv.add(i)) {
            Ok(s) => args.push(s.to_string()),
            Err(_) => return -1,
        }
    }
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = match catch_unwind(AssertUnwindSafe(|| lie_induct::cli::run(&args, &mut stdout, &mut stderr))) {
        Ok(c) => c,
        Err(_) => {
            set_error("panic while running command".into());
            return -1;
        }
    };
    if !out.is_null() {
        *out = into_c(String::from_utf8_lossy(&stdout).into_owned());
    }
    if !err.is_null() {
        *err = into_c(String::from_utf8_lossy(&stderr).into_owned());
    }
    code
}
