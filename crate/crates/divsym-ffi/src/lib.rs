//! C ABI for the divsym library.
//!
//! Conventions:
//! - Opaque handles (`DivsymPolynomial`, `DivsymGraph`) are created and freed
//!   by this library; never dereference them.
//! - Every fallible function returns a [`DivsymStatus`]; on failure a
//!   human-readable message is available from `divsym_last_error_message`
//!   (thread-local, valid until the next failing call on the same thread).
//! - Strings returned through out-parameters are owned by the caller and
//!   must be released with `divsym_string_free`.
//! - Structured results are JSON in the same shapes the CLI prints; exact
//!   rationals are `["numerator", "denominator"]` decimal-string pairs.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use divsym_core::divsym::{ds_constant, DsOptions};
use divsym_core::error::{Error, ErrorCategory};
use divsym_core::graph::{cycle_graph, path_graph, validate_tree, Graph};
use divsym_core::poly::Polynomial;
use divsym_core::sandpile::{
    exact_absorption, simulate, CoinConfig, RobPolicy, SimOptions, SolveOptions,
};
use divsym_core::tree_formula::{classify_edges, tau, WeightAssignment};

/// Status codes; nonzero values match the CLI exit-code taxonomy where a
/// counterpart exists.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivsymStatus {
    Ok = 0,
    /// Unreadable or malformed input.
    InputError = 2,
    /// Structurally valid input violating an operation precondition.
    PreconditionViolation = 3,
    /// A safety cap was exceeded.
    CapExceeded = 4,
    /// A cross-check between two computation paths failed.
    VerificationFailed = 5,
    /// A required pointer argument was null.
    NullPointer = 6,
    /// Invalid UTF-8 in a string argument.
    InvalidUtf8 = 7,
    /// An internal panic was caught at the boundary.
    InternalError = 8,
}

/// Opaque polynomial handle.
pub struct DivsymPolynomial {
    inner: Polynomial,
}

/// Opaque graph handle.
pub struct DivsymGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("nul bytes removed");
    });
}

fn status_of(e: &Error) -> DivsymStatus {
    match e.category() {
        ErrorCategory::Input => DivsymStatus::InputError,
        ErrorCategory::Precondition => DivsymStatus::PreconditionViolation,
        ErrorCategory::CapExceeded => DivsymStatus::CapExceeded,
        ErrorCategory::Verification => DivsymStatus::VerificationFailed,
    }
}

fn fail(e: Error) -> DivsymStatus {
    set_error(&e.to_string());
    status_of(&e)
}

/// Run `body` with panics converted to `InternalError`.
fn guarded(body: impl FnOnce() -> DivsymStatus) -> DivsymStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            DivsymStatus::InternalError
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, DivsymStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(DivsymStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        DivsymStatus::InvalidUtf8
    })
}

fn give_string(out: *mut *mut c_char, s: String) -> DivsymStatus {
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(_) => {
            set_error("result contained an interior nul byte");
            return DivsymStatus::InternalError;
        }
    };
    unsafe { *out = c.into_raw() };
    DivsymStatus::Ok
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn divsym_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread; do not free. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn divsym_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by this library (or null), and
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn divsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        unsafe { drop(CString::from_raw(s)) };
    }
}

/// Parse a polynomial from its JSON form:
/// `{"format":1,"m":3,"terms":[{"coef":["1","1"],"exp":[2,0,0]}]}`.
///
/// # Safety
/// `json` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_polynomial_from_json(
    json: *const c_char,
    out: *mut *mut DivsymPolynomial,
) -> DivsymStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out-parameter");
            return DivsymStatus::NullPointer;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let value: serde_json::Value = match serde_json::from_str(text) {
            Ok(v) => v,
            Err(e) => return fail(Error::Json(e.to_string())),
        };
        match Polynomial::from_json(&value) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(DivsymPolynomial { inner: p }));
                DivsymStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Release a polynomial handle.
///
/// # Safety
/// `p` must be a handle previously returned by this library (or null), and
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn divsym_polynomial_free(p: *mut DivsymPolynomial) {
    if !p.is_null() {
        unsafe { drop(Box::from_raw(p)) };
    }
}

/// Parse a graph from its JSON form: `{"format":1,"m":3,"edges":[[0,1],[1,2]]}`.
///
/// # Safety
/// `json` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_graph_from_json(
    json: *const c_char,
    out: *mut *mut DivsymGraph,
) -> DivsymStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out-parameter");
            return DivsymStatus::NullPointer;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let value: serde_json::Value = match serde_json::from_str(text) {
            Ok(v) => v,
            Err(e) => return fail(Error::Json(e.to_string())),
        };
        match Graph::from_json(&value) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(DivsymGraph { inner: g }));
                DivsymStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// The path graph on m vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_graph_path(m: usize, out: *mut *mut DivsymGraph) -> DivsymStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out-parameter");
            return DivsymStatus::NullPointer;
        }
        match path_graph(m) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(DivsymGraph { inner: g }));
                DivsymStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// The cycle graph on m >= 3 vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_graph_cycle(m: usize, out: *mut *mut DivsymGraph) -> DivsymStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out-parameter");
            return DivsymStatus::NullPointer;
        }
        match cycle_graph(m) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(DivsymGraph { inner: g }));
                DivsymStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Release a graph handle.
///
/// # Safety
/// `g` must be a handle previously returned by this library (or null), and
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn divsym_graph_free(g: *mut DivsymGraph) {
    if !g.is_null() {
        unsafe { drop(Box::from_raw(g)) };
    }
}

/// Divided symmetrization of `poly` over `graph`, requiring `deg f <= |E|`.
/// The result is written as a `"numerator/denominator"` string (denominator
/// omitted when 1). `verify_point != 0` re-evaluates at a second generic
/// point; `max_m` caps the permutation count at `max_m!` (pass 0 for the
/// default of 10).
///
/// # Safety
/// `poly` and `graph` must be live handles from this library and `out_value`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_ds_constant(
    poly: *const DivsymPolynomial,
    graph: *const DivsymGraph,
    verify_point: i32,
    max_m: usize,
    out_value: *mut *mut c_char,
) -> DivsymStatus {
    guarded(|| {
        if poly.is_null() || graph.is_null() || out_value.is_null() {
            set_error("null argument");
            return DivsymStatus::NullPointer;
        }
        let opts = DsOptions {
            verify_point: verify_point != 0,
            max_m: if max_m == 0 { 10 } else { max_m },
            ..DsOptions::default()
        };
        match ds_constant(&(*poly).inner, &(*graph).inner, &opts) {
            Ok(v) => give_string(out_value, divsym_core::rational::display(&v)),
            Err(e) => fail(e),
        }
    })
}

/// Sign times acceptable-permutation count for a weighted tree, as a decimal
/// string. `graph` must be a tree; `weights` holds one entry per vertex,
/// each >= -1, summing to -1.
///
/// # Safety
/// `graph` must be a live handle, `weights` must point to `weights_len`
/// readable values, and `out_value` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_tree_tau(
    graph: *const DivsymGraph,
    weights: *const i64,
    weights_len: usize,
    out_value: *mut *mut c_char,
) -> DivsymStatus {
    guarded(|| {
        if graph.is_null() || weights.is_null() || out_value.is_null() {
            set_error("null argument");
            return DivsymStatus::NullPointer;
        }
        let w = std::slice::from_raw_parts(weights, weights_len).to_vec();
        let tree = match validate_tree((*graph).inner.clone()) {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        let assignment = match WeightAssignment::new(w) {
            Ok(a) => a,
            Err(e) => return fail(e),
        };
        if let Err(e) = classify_edges(&tree, &assignment) {
            return fail(e);
        }
        match tau(&tree, &assignment) {
            Ok(t) => give_string(out_value, t.to_string()),
            Err(e) => fail(e),
        }
    })
}

fn parse_policy(s: &str) -> Result<RobPolicy, Error> {
    match s {
        "lowest" => Ok(RobPolicy::LowestIndex),
        "highest" => Ok(RobPolicy::HighestIndex),
        _ => match s.strip_prefix("seeded:") {
            Some(seed) => seed
                .parse::<u64>()
                .map(RobPolicy::Seeded)
                .map_err(|e| Error::Json(format!("bad policy seed {seed:?}: {e}"))),
            None => Err(Error::Json(format!(
                "unknown policy {s:?}; use lowest, highest, or seeded:<u64>"
            ))),
        },
    }
}

/// Exact absorption distribution of the coin-robbing process.
///
/// `config_json` is `{"format":1,"counts":[2,0,0]}`; `policy` is `lowest`,
/// `highest`, or `seeded:<u64>`; `max_states` caps the reachable state count
/// (0 for the default of 100000). The result is the JSON array
/// `[{"final":[...],"prob":["num","den"]}, ...]`.
///
/// # Safety
/// The string arguments must be valid nul-terminated strings and `out_json`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_sandpile_solve(
    config_json: *const c_char,
    policy: *const c_char,
    max_states: usize,
    out_json: *mut *mut c_char,
) -> DivsymStatus {
    guarded(|| {
        if out_json.is_null() {
            set_error("null out-parameter");
            return DivsymStatus::NullPointer;
        }
        let config_text = match read_str(config_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let policy_text = match read_str(policy) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let value: serde_json::Value = match serde_json::from_str(config_text) {
            Ok(v) => v,
            Err(e) => return fail(Error::Json(e.to_string())),
        };
        let config = match CoinConfig::from_json(&value) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        let policy = match parse_policy(policy_text) {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        let opts = SolveOptions {
            max_states: if max_states == 0 { 100_000 } else { max_states },
        };
        match exact_absorption(&config, policy, &opts) {
            Ok(dist) => give_string(out_json, dist.to_json().to_string()),
            Err(e) => fail(e),
        }
    })
}

/// Seeded Monte Carlo estimate of the absorption distribution. The result is
/// the JSON array `[{"final":[...],"count":...,"freq":...,"stderr":...,
/// "trials":...}, ...]`; identical inputs give identical output.
///
/// # Safety
/// The string arguments must be valid nul-terminated strings and `out_json`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn divsym_sandpile_simulate(
    config_json: *const c_char,
    policy: *const c_char,
    seed: u64,
    trials: u64,
    out_json: *mut *mut c_char,
) -> DivsymStatus {
    guarded(|| {
        if out_json.is_null() {
            set_error("null out-parameter");
            return DivsymStatus::NullPointer;
        }
        let config_text = match read_str(config_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let policy_text = match read_str(policy) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let value: serde_json::Value = match serde_json::from_str(config_text) {
            Ok(v) => v,
            Err(e) => return fail(Error::Json(e.to_string())),
        };
        let config = match CoinConfig::from_json(&value) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        let policy = match parse_policy(policy_text) {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        let opts = SimOptions {
            seed,
            trials,
            policy,
            ..SimOptions::default()
        };
        match simulate(&config, &opts) {
            Ok(sim) => give_string(out_json, sim.to_json().to_string()),
            Err(e) => fail(e),
        }
    })
}
