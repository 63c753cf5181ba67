//! C ABI over the diam2col solvers.
//!
//! Instances and results are opaque heap handles released with their own
//! `_free` function. Every call returns a `D2cStatus`; on failure the
//! message is available from `d2c_last_error` on the same thread until the
//! next failing call. Strings returned through out-parameters belong to the
//! caller and are released with `d2c_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use diam2col::c3c7::solve_c3c7;
use diam2col::c4cs::solve_c4cs;
use diam2col::generate::{generate, Constraint, Family, GenError, GeneratorSpec};
use diam2col::graph::Graph;
use diam2col::instance::{parse_instance, write_instance, Instance};
use diam2col::oracle::Oracle;
use diam2col::palette::ColorSet;
use diam2col::properties::{check_property, Property, Report};
use diam2col::solve::{solve_oracle, SolveError, SolveResult, SolverConfig};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D2cStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The graph is outside the solver's class; the message holds the
    /// violated property and a certificate.
    ClassViolation = 4,
    BudgetExhausted = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D2cSolver {
    C4cs = 0,
    C3c7 = 1,
    Oracle = 2,
}

pub struct D2cInstance(Instance);

pub struct D2cResult(SolveResult);

struct Failure(D2cStatus, String);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> D2cStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => D2cStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("panic: {msg}"));
            D2cStatus::Panic
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(D2cStatus::InvalidArgument, msg.into())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(D2cStatus::NullPointer, format!("{what} is null")))
}

unsafe fn deref_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(D2cStatus::NullPointer, format!("{what} is null")))
}

unsafe fn utf8<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    deref(p, what)?;
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn solve_failure(e: SolveError) -> Failure {
    let status = match e {
        SolveError::InvalidCycleLength(_)
        | SolveError::ListMismatch { .. }
        | SolveError::Oracle(_) => D2cStatus::InvalidArgument,
        SolveError::InternalInvariantBroken(_) => D2cStatus::Internal,
        _ => D2cStatus::ClassViolation,
    };
    let witnesses: Vec<String> = e.witnesses().iter().map(|v| (v + 1).to_string()).collect();
    Failure(
        status,
        format!("{}: {e} [{}]", e.name(), witnesses.join(",")),
    )
}

/// Builds an instance with full lists from `m` edges given as `2m`
/// 0-indexed endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m` is
/// 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn d2c_instance_new(
    n: usize,
    edges: *const u32,
    m: usize,
    out: *mut *mut D2cInstance,
) -> D2cStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        let flat: &[u32] = if m == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(deref(edges, "edges")?, 2 * m)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        let g = Graph::new(n, pairs).map_err(|e| invalid(e.to_string()))?;
        *out = Box::into_raw(Box::new(D2cInstance(Instance::with_full_lists(g))));
        Ok(())
    })
}

/// Parses an instance file held in a nul-terminated string.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d2c_instance_parse(
    text: *const c_char,
    out: *mut *mut D2cInstance,
) -> D2cStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        let text = utf8(text, "text")?;
        let inst = parse_instance(text).map_err(|e| Failure(D2cStatus::Parse, e.to_string()))?;
        *out = Box::into_raw(Box::new(D2cInstance(inst)));
        Ok(())
    })
}

/// Sets the list of 0-indexed vertex `v`. Bits 0, 1 and 2 stand for
/// colors a, b and c; the mask must be nonempty.
///
/// # Safety
/// `inst` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn d2c_instance_set_list(
    inst: *mut D2cInstance,
    v: usize,
    mask: u8,
) -> D2cStatus {
    guard(|| {
        let inst = &mut deref_mut(inst, "inst")?.0;
        if v >= inst.graph.n() {
            return Err(invalid(format!("vertex {v} out of range")));
        }
        let set = ColorSet::from_bits(mask)
            .filter(|s| !s.is_empty())
            .ok_or_else(|| invalid(format!("bad mask {mask}")))?;
        inst.lists.set(v, set);
        Ok(())
    })
}

/// # Safety
/// `inst` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn d2c_instance_vertex_count(inst: *const D2cInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.graph.n())
}

/// Writes the instance in canonical file form.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d2c_instance_write(
    inst: *const D2cInstance,
    out: *mut *mut c_char,
) -> D2cStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        let text = write_instance(&deref(inst, "inst")?.0).map_err(|e| invalid(e.to_string()))?;
        *out = into_c_string(text);
        Ok(())
    })
}

/// # Safety
/// `inst` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn d2c_instance_free(inst: *mut D2cInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Runs a solver. `s` is read only by `D2C_SOLVER_C4CS`.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d2c_solve(
    inst: *const D2cInstance,
    solver: D2cSolver,
    s: usize,
    out: *mut *mut D2cResult,
) -> D2cStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        let Instance { graph, lists } = &deref(inst, "inst")?.0;
        let config = SolverConfig::default();
        let result = match solver {
            D2cSolver::C4cs => solve_c4cs(graph, lists, s, &config),
            D2cSolver::C3c7 => solve_c3c7(graph, lists, &config),
            D2cSolver::Oracle => solve_oracle(graph, lists, Oracle::default()),
        }
        .map_err(solve_failure)?;
        *out = Box::into_raw(Box::new(D2cResult(result)));
        Ok(())
    })
}

/// # Safety
/// `res` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn d2c_result_is_yes(res: *const D2cResult) -> bool {
    res.as_ref().is_some_and(|r| r.0.decision.is_yes())
}

/// Color letter of 0-indexed vertex `v`, or 0 for a NO result or a
/// vertex out of range.
///
/// # Safety
/// `res` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn d2c_result_color(res: *const D2cResult, v: usize) -> c_char {
    res.as_ref()
        .and_then(|r| r.0.decision.coloring())
        .and_then(|c| c.as_slice().get(v))
        .map_or(0, |c| c.letter() as c_char)
}

/// Number of 2-list instances solved.
///
/// # Safety
/// `res` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn d2c_result_instances(res: *const D2cResult) -> u64 {
    res.as_ref().map_or(0, |r| r.0.telemetry.instances as u64)
}

/// Whether the exhaustive fallback decided the instance.
///
/// # Safety
/// `res` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn d2c_result_fallback(res: *const D2cResult) -> bool {
    res.as_ref().is_some_and(|r| r.0.telemetry.fallback)
}

/// # Safety
/// `res` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn d2c_result_free(res: *mut D2cResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Checks one property (`diam2`, `c3`, `c4`, `c5`, `c7` or `cs=<k>`).
/// When it fails and `certificate` is not null, a 1-indexed certificate
/// string is stored there; otherwise null is stored.
///
/// # Safety
/// `inst` must be a live handle, `property` a valid C string, `holds`
/// writable, and `certificate` writable or null.
#[no_mangle]
pub unsafe extern "C" fn d2c_check_property(
    inst: *const D2cInstance,
    property: *const c_char,
    holds: *mut bool,
    certificate: *mut *mut c_char,
) -> D2cStatus {
    guard(|| {
        let holds = deref_mut(holds, "holds")?;
        let g = &deref(inst, "inst")?.0.graph;
        let p: Property = utf8(property, "property")?
            .parse()
            .map_err(|e: diam2col::properties::UnknownProperty| invalid(e.to_string()))?;
        let report = check_property(g, p);
        *holds = report == Report::Holds;
        if let Some(cert) = certificate.as_mut() {
            *cert = match report {
                Report::Holds => ptr::null_mut(),
                Report::Fails(text) => into_c_string(text),
            };
        }
        Ok(())
    })
}

/// Generates an instance with full lists. `constraints` is a
/// comma-separated list (`c3free,c4free,c7free,csfree(k)`) or null;
/// named families ignore `n`, `p`, `seed` and `constraints`.
///
/// # Safety
/// `family` must be a valid C string, `constraints` a valid C string or
/// null, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d2c_generate(
    family: *const c_char,
    n: usize,
    p: f64,
    seed: u64,
    constraints: *const c_char,
    out: *mut *mut D2cInstance,
) -> D2cStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        let family: Family = utf8(family, "family")?
            .parse()
            .map_err(|e: GenError| invalid(e.to_string()))?;
        let constraints: Vec<Constraint> = if constraints.is_null() {
            Vec::new()
        } else {
            utf8(constraints, "constraints")?
                .split(',')
                .filter(|s| !s.is_empty())
                .map(str::parse)
                .collect::<Result<_, GenError>>()
                .map_err(|e| invalid(e.to_string()))?
        };
        let spec = match family {
            Family::RandomDiam2 => GeneratorSpec::random(n, p, seed, &constraints),
            named => GeneratorSpec::named(named),
        };
        let g = generate(&spec).map_err(|e| match e {
            GenError::RejectionBudgetExhausted { .. } => {
                Failure(D2cStatus::BudgetExhausted, e.to_string())
            }
            other => invalid(other.to_string()),
        })?;
        *out = Box::into_raw(Box::new(D2cInstance(Instance::with_full_lists(g))));
        Ok(())
    })
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn d2c_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn d2c_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
