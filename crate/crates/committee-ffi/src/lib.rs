//! C-callable interface to the committee selection library.
//!
//! Profiles are opaque heap handles created by [`committee_profile_parse`]
//! or [`committee_profile_read_file`] and released with
//! [`committee_profile_free`]. Fallible calls return a [`CommitteeStatus`];
//! when a call fails, [`committee_last_error_message`] returns a
//! human-readable description of that failure for the current thread. The
//! matching C header is `include/committee.h`, regenerated by the build
//! script.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::Path;
use std::ptr;
use std::slice;

use committee_core::experiment::{run_algorithm, AlgorithmId, RunSettings};
use committee_core::{ApprovalProfile, Committee, Error as CoreError};

/// Opaque handle to a parsed approval profile.
pub struct CommitteeProfile {
    inner: ApprovalProfile,
}

/// Outcome of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommitteeStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text did not parse as a profile.
    ParseError = 3,
    /// An argument violated a documented precondition.
    InvalidArgument = 4,
    /// Reading a file failed.
    IoError = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn set_last_error(message: String) {
    let text = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn fail(status: CommitteeStatus, message: impl std::fmt::Display) -> CommitteeStatus {
    set_last_error(message.to_string());
    status
}

fn status_for(error: &CoreError) -> CommitteeStatus {
    match error {
        CoreError::Parse { .. } => CommitteeStatus::ParseError,
        CoreError::Io(_) => CommitteeStatus::IoError,
        _ => CommitteeStatus::InvalidArgument,
    }
}

/// Returns the library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn committee_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Returns the message of the most recent failure on the calling thread, or
/// null if the most recent call succeeded.
///
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn committee_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |text| text.as_ptr())
    })
}

/// Parses profile text ("n m" header, then one line of approved indices per
/// voter) into a new handle. Returns null on failure; see
/// [`committee_last_error_message`].
///
/// # Safety
/// `text` must be null or point to a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn committee_profile_parse(text: *const c_char) -> *mut CommitteeProfile {
    clear_last_error();
    if text.is_null() {
        set_last_error("text pointer is null".to_string());
        return ptr::null_mut();
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(text) => text,
        Err(error) => {
            set_last_error(format!("text is not valid UTF-8: {error}"));
            return ptr::null_mut();
        }
    };
    match ApprovalProfile::parse(text) {
        Ok(inner) => Box::into_raw(Box::new(CommitteeProfile { inner })),
        Err(error) => {
            set_last_error(error.to_string());
            ptr::null_mut()
        }
    }
}

/// Reads a profile file into a new handle. Returns null on failure; see
/// [`committee_last_error_message`].
///
/// # Safety
/// `path` must be null or point to a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn committee_profile_read_file(path: *const c_char) -> *mut CommitteeProfile {
    clear_last_error();
    if path.is_null() {
        set_last_error("path pointer is null".to_string());
        return ptr::null_mut();
    }
    let path = match CStr::from_ptr(path).to_str() {
        Ok(path) => path,
        Err(error) => {
            set_last_error(format!("path is not valid UTF-8: {error}"));
            return ptr::null_mut();
        }
    };
    match ApprovalProfile::read_file(Path::new(path)) {
        Ok(inner) => Box::into_raw(Box::new(CommitteeProfile { inner })),
        Err(error) => {
            set_last_error(error.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `profile` must be null or a pointer returned by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn committee_profile_free(profile: *mut CommitteeProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Returns the number of voters, or 0 for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn committee_profile_voters(profile: *const CommitteeProfile) -> u32 {
    profile.as_ref().map_or(0, |p| p.inner.voters() as u32)
}

/// Returns the number of candidates, or 0 for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn committee_profile_candidates(profile: *const CommitteeProfile) -> u32 {
    profile.as_ref().map_or(0, |p| p.inner.candidates() as u32)
}

/// Runs a selection algorithm and writes the chosen committee.
///
/// `algorithm` is one of the CLI identifiers ("greedy", "greedy-eps",
/// "local-search", "approval-voting", "ls-pav", "greedy-incomplete",
/// "ls-incomplete", "greedy-inaccurate"). `t` is the query-set size used by
/// the sampled algorithms (pass 0 when not applicable) and `p` the response
/// flip probability (pass 0 for accurate responses). On success,
/// `out_members` receives the selected candidate indices, `out_len` how many
/// were written, and `out_score` the committee's coverage score on the true
/// ballots.
///
/// # Safety
/// `profile` must be a live handle; `algorithm` a NUL-terminated string;
/// `out_members` must point to at least `k` writable elements; `out_len` and
/// `out_score` must be writable.
#[no_mangle]
pub unsafe extern "C" fn committee_select(
    profile: *const CommitteeProfile,
    algorithm: *const c_char,
    k: u32,
    t: u32,
    p: f64,
    seed: u64,
    out_members: *mut u32,
    out_len: *mut u32,
    out_score: *mut f64,
) -> CommitteeStatus {
    clear_last_error();
    let Some(profile) = profile.as_ref() else {
        return fail(CommitteeStatus::NullArgument, "profile pointer is null");
    };
    if algorithm.is_null() {
        return fail(CommitteeStatus::NullArgument, "algorithm pointer is null");
    }
    if out_members.is_null() || out_len.is_null() || out_score.is_null() {
        return fail(CommitteeStatus::NullArgument, "output pointer is null");
    }
    let algorithm = match CStr::from_ptr(algorithm).to_str() {
        Ok(name) => name,
        Err(error) => {
            return fail(
                CommitteeStatus::InvalidUtf8,
                format!("algorithm is not valid UTF-8: {error}"),
            )
        }
    };
    let id = match AlgorithmId::parse(algorithm) {
        Ok(id) => id,
        Err(error) => return fail(CommitteeStatus::InvalidArgument, error),
    };
    let settings = RunSettings {
        k: k as usize,
        t: t as usize,
        p,
        ..RunSettings::default()
    };
    match run_algorithm(id, &profile.inner, None, &settings, seed) {
        Ok(run) => {
            let members = run.committee.members();
            let out = slice::from_raw_parts_mut(out_members, k as usize);
            for (slot, member) in out.iter_mut().zip(members) {
                *slot = *member;
            }
            *out_len = members.len() as u32;
            *out_score = run.score;
            CommitteeStatus::Ok
        }
        Err(error) => fail(status_for(&error), error),
    }
}

/// Computes the coverage score (fraction of voters approving at least one
/// member) of an arbitrary candidate set.
///
/// # Safety
/// `profile` must be a live handle; `members` must point to `len` readable
/// elements; `out_score` must be writable.
#[no_mangle]
pub unsafe extern "C" fn committee_cc_score(
    profile: *const CommitteeProfile,
    members: *const u32,
    len: u32,
    out_score: *mut f64,
) -> CommitteeStatus {
    clear_last_error();
    let Some(profile) = profile.as_ref() else {
        return fail(CommitteeStatus::NullArgument, "profile pointer is null");
    };
    if (members.is_null() && len > 0) || out_score.is_null() {
        return fail(CommitteeStatus::NullArgument, "output pointer is null");
    }
    let members = if len == 0 {
        Vec::new()
    } else {
        slice::from_raw_parts(members, len as usize).to_vec()
    };
    let committee = match Committee::new(members, len as usize) {
        Ok(committee) => committee,
        Err(error) => return fail(CommitteeStatus::InvalidArgument, error),
    };
    match profile.inner.covered_count(&committee) {
        Ok(covered) => {
            *out_score = covered as f64 / profile.inner.voters() as f64;
            CommitteeStatus::Ok
        }
        Err(error) => fail(status_for(&error), error),
    }
}
