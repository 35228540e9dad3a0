//! C interface to the qcapon beamformers.
//!
//! Every fallible function returns a [`QcStatus`]; on failure a description
//! is available from [`qc_last_error_message`] on the same thread. Handles
//! are opaque and must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qcapon::beamform::cost::multiplication_cost;
use qcapon::beamform::{null_depths, output_sinr, BeamformerWeights, SolverKind};
use qcapon::harness::{parse_config, resolve_config, scenario_weights, CovarianceChoice, ScenarioConfig};
use qcapon::{Error, Quaternion};

/// Full beamformer (both sub-signals under one constraint set).
pub const QC_SOLVER_FULL: u32 = 0;
/// Baseline beamformer applied per sub-signal.
pub const QC_SOLVER_BASELINE: u32 = 1;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidConfig = 3,
    Singular = 4,
    DimensionMismatch = 5,
    Domain = 6,
    Io = 7,
    BufferTooSmall = 8,
    Internal = 9,
}

/// `a + b·i + c·j + d·k`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QcQuaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl From<Quaternion> for QcQuaternion {
    fn from(q: Quaternion) -> Self {
        QcQuaternion { a: q.a, b: q.b, c: q.c, d: q.d }
    }
}

impl From<QcQuaternion> for Quaternion {
    fn from(q: QcQuaternion) -> Self {
        Quaternion::new(q.a, q.b, q.c, q.d)
    }
}

/// A validated scenario configuration.
pub struct QcScenario {
    cfg: ScenarioConfig,
}

/// Beamformer weights for one scenario.
pub struct QcWeights {
    weights: BeamformerWeights,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn status_of(err: &Error) -> QcStatus {
    match err {
        Error::Config(_) | Error::Parse(_) => QcStatus::InvalidConfig,
        Error::Singular { .. } => QcStatus::Singular,
        Error::DimensionMismatch(_) => QcStatus::DimensionMismatch,
        Error::Domain(_) | Error::Contract(_) | Error::OutOfModel(_) => QcStatus::Domain,
        Error::Io(_) => QcStatus::Io,
        Error::Eigen(_) | Error::Run(_) => QcStatus::Internal,
    }
}

struct Fail(QcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(QcStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QcStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(QcStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

fn solver_arg(solver: u32) -> Result<SolverKind, Fail> {
    match solver {
        QC_SOLVER_FULL => Ok(SolverKind::FullQCapon),
        QC_SOLVER_BASELINE => Ok(SolverKind::BaselineQCapon),
        other => Err(Fail(QcStatus::InvalidArgument, format!("unknown solver {other}"))),
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn qc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Hamilton product `p·q`.
#[no_mangle]
pub extern "C" fn qc_quaternion_mul(p: QcQuaternion, q: QcQuaternion) -> QcQuaternion {
    (Quaternion::from(p) * Quaternion::from(q)).into()
}

/// Parses a TOML scenario.
///
/// # Safety
/// `toml_text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_scenario_from_toml(toml_text: *const c_char, out: *mut *mut QcScenario) -> QcStatus {
    guard(|| {
        let text = str_arg(toml_text, "toml_text")?;
        let cfg = parse_config(text)?;
        write_out(out, Box::into_raw(Box::new(QcScenario { cfg })))
    })
}

/// Loads a scenario from a file path, or by bundled name such as `paper_fig2`.
///
/// # Safety
/// `path_or_name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_scenario_load(path_or_name: *const c_char, out: *mut *mut QcScenario) -> QcStatus {
    guard(|| {
        let arg = str_arg(path_or_name, "path_or_name")?;
        let cfg = resolve_config(arg)?;
        write_out(out, Box::into_raw(Box::new(QcScenario { cfg })))
    })
}

/// # Safety
/// `scenario` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qc_scenario_free(scenario: *mut QcScenario) {
    if !scenario.is_null() {
        drop(Box::from_raw(scenario));
    }
}

/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_scenario_n_sensors(scenario: *const QcScenario, out: *mut usize) -> QcStatus {
    guard(|| {
        let s = scenario.as_ref().ok_or_else(|| null("scenario"))?;
        write_out(out, s.cfg.array.n_sensors)
    })
}

/// Weights from the model covariance at the scenario's SNR and INR.
///
/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_weights_true(
    scenario: *const QcScenario,
    solver: u32,
    out: *mut *mut QcWeights,
) -> QcStatus {
    guard(|| {
        let s = scenario.as_ref().ok_or_else(|| null("scenario"))?;
        let weights = scenario_weights(&s.cfg, solver_arg(solver)?, CovarianceChoice::True, 0, 1)?;
        write_out(out, Box::into_raw(Box::new(QcWeights { weights })))
    })
}

/// Weights from a sample covariance of `snapshots` synthesized snapshots.
///
/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_weights_sample(
    scenario: *const QcScenario,
    solver: u32,
    seed: u64,
    snapshots: usize,
    out: *mut *mut QcWeights,
) -> QcStatus {
    guard(|| {
        let s = scenario.as_ref().ok_or_else(|| null("scenario"))?;
        let weights = scenario_weights(&s.cfg, solver_arg(solver)?, CovarianceChoice::Sample, seed, snapshots)?;
        write_out(out, Box::into_raw(Box::new(QcWeights { weights })))
    })
}

/// # Safety
/// `weights` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qc_weights_free(weights: *mut QcWeights) {
    if !weights.is_null() {
        drop(Box::from_raw(weights));
    }
}

/// # Safety
/// `weights` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_weights_len(weights: *const QcWeights, out: *mut usize) -> QcStatus {
    guard(|| {
        let w = weights.as_ref().ok_or_else(|| null("weights"))?;
        write_out(out, w.weights.w.len())
    })
}

/// Copies the weight vector into `buf`. `written` receives the length even
/// when `cap` is too small (status `BufferTooSmall`, nothing copied).
///
/// # Safety
/// `buf` must hold `cap` elements; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_weights_get(
    weights: *const QcWeights,
    buf: *mut QcQuaternion,
    cap: usize,
    written: *mut usize,
) -> QcStatus {
    guard(|| {
        let w = weights.as_ref().ok_or_else(|| null("weights"))?;
        let items: Vec<QcQuaternion> = w.weights.w.iter().map(|q| (*q).into()).collect();
        copy_out(&items, buf, cap, written)
    })
}

unsafe fn copy_out<T: Copy>(items: &[T], buf: *mut T, cap: usize, written: *mut usize) -> Result<(), Fail> {
    write_out(written, items.len())?;
    if items.len() > cap {
        return Err(Fail(
            QcStatus::BufferTooSmall,
            format!("need {} elements, buffer holds {cap}", items.len()),
        ));
    }
    if !items.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len());
    }
    Ok(())
}

/// Output SINR in dB of `weights` against the scenario's true sources.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_output_sinr_db(
    scenario: *const QcScenario,
    weights: *const QcWeights,
    out: *mut f64,
) -> QcStatus {
    guard(|| {
        let s = scenario.as_ref().ok_or_else(|| null("scenario"))?;
        let w = weights.as_ref().ok_or_else(|| null("weights"))?;
        let truth = s.cfg.true_scenario(s.cfg.snr_db, s.cfg.inr_db)?;
        write_out(out, output_sinr(&w.weights, &truth)?)
    })
}

/// Response toward each interferer sub-signal relative to the SOI, in dB.
/// Same buffer protocol as [`qc_weights_get`].
///
/// # Safety
/// Both handles must be live; `buf` must hold `cap` elements.
#[no_mangle]
pub unsafe extern "C" fn qc_null_depths_db(
    scenario: *const QcScenario,
    weights: *const QcWeights,
    buf: *mut f64,
    cap: usize,
    written: *mut usize,
) -> QcStatus {
    guard(|| {
        let s = scenario.as_ref().ok_or_else(|| null("scenario"))?;
        let w = weights.as_ref().ok_or_else(|| null("weights"))?;
        let truth = s.cfg.true_scenario(s.cfg.snr_db, s.cfg.inr_db)?;
        copy_out(&null_depths(&w.weights, &truth)?, buf, cap, written)
    })
}

/// Real multiplications needed to compute one weight vector for `n` sensors.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_multiplication_cost(solver: u32, n: usize, out: *mut u64) -> QcStatus {
    guard(|| {
        let report = multiplication_cost(solver_arg(solver)?, n)?;
        write_out(out, report.counted_real_mults)
    })
}
