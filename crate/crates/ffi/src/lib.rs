//! C ABI for the `qselect` library.
//!
//! Conventions:
//!
//! - Every fallible function returns a [`QsStatus`]; results go through out
//!   pointers, which are left untouched on failure.
//! - On failure a message is stored per thread and can be read with
//!   [`qs_last_error_message`] until the next failing call on that thread.
//! - Objects are opaque handles created by `*_new` functions and released by
//!   the matching `*_free`. Passing `NULL` to a `*_free` is a no-op.
//! - Event numbers in theta specs are 1-based: A's outcomes are `1..=n`,
//!   B's are `n+1..=2n`. Grid indices are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qselect::evaluation::{criterion_classical, criterion_nonclassical, criterion_via_trace};
use qselect::scenarios::{
    cash_equivalent, ellsberg_s12, ellsberg_s43, machina_s12, machina_s43, phase_diagram, wta_wtp, AxisSpec, CEParams,
    DiagramKind, EllsbergParams, MachinaParams, Pattern, RegionMap,
};
use qselect::states::StateKind;
use qselect::weighting::{goldstein_einhorn, subjective_probs, w_xi, ProbabilityVector};
use qselect::{Error, Lottery, ThetaSpec};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    InvalidLottery = 4,
    InvalidTheta = 5,
    DimensionMismatch = 6,
    Numerical = 7,
    OutOfRange = 8,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsStateKind {
    Classical = 0,
    Nonclassical = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsDiagram {
    /// Ellsberg urn; the scale parameter is the utility gap.
    Ellsberg = 0,
    /// Machina urns with beta = alpha; the scale parameter is the unit `a`.
    Machina = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsPattern {
    /// f1 > f2 and f3 > f4.
    OneTwoThreeFour = 0,
    /// f1 > f2 and f4 > f3.
    OneTwoFourThree = 1,
    /// f2 > f1 and f4 > f3.
    TwoOneFourThree = 2,
    /// f2 > f1 and f3 > f4.
    TwoOneThreeFour = 3,
    Indifferent = 4,
}

impl From<Pattern> for QsPattern {
    fn from(p: Pattern) -> Self {
        match p {
            Pattern::OneOverTwoThreeOverFour => QsPattern::OneTwoThreeFour,
            Pattern::OneOverTwoFourOverThree => QsPattern::OneTwoFourThree,
            Pattern::TwoOverOneFourOverThree => QsPattern::TwoOneFourThree,
            Pattern::TwoOverOneThreeOverFour => QsPattern::TwoOneThreeFour,
            Pattern::Indifferent => QsPattern::Indifferent,
        }
    }
}

/// Additive parts of the non-classical criterion.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct QsBreakdown {
    pub risk_a: f64,
    pub risk_b: f64,
    pub comparison: f64,
    pub total: f64,
}

/// One node of a phase diagram.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QsRegionCell {
    pub x1: f64,
    pub x2: f64,
    pub s12: f64,
    pub s43: f64,
    pub pattern: QsPattern,
}

/// Opaque lottery handle.
pub struct QsLottery(Lottery);

/// Opaque set of `cos Theta` values.
pub struct QsTheta(ThetaSpec);

/// Opaque phase-diagram grid.
pub struct QsRegionMap(RegionMap);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(QsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidLottery { .. } | Error::UnmatchedLotteries { .. } | Error::UnknownOutcome(_) => {
                QsStatus::InvalidLottery
            }
            Error::InvalidTheta(_) | Error::MissingTheta { .. } | Error::NotSelfAdjoint { .. } => {
                QsStatus::InvalidTheta
            }
            Error::DimensionMismatch(_) => QsStatus::DimensionMismatch,
            Error::InvalidParameter { .. } | Error::NonFinite(_) => QsStatus::InvalidArgument,
            _ => QsStatus::Numerical,
        };
        Failure(status, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn fail<T>(status: QsStatus, msg: impl Into<String>) -> FfiResult<T> {
    Err(Failure(status, msg.into()))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> QsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            QsStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    match p.as_ref() {
        Some(r) => Ok(r),
        None => fail(QsStatus::NullPointer, format!("{what} is NULL")),
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> FfiResult<()> {
    if out.is_null() {
        return fail(QsStatus::NullPointer, format!("{what} is NULL"));
    }
    out.write(value);
    Ok(())
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return fail(QsStatus::NullPointer, format!("{what} is NULL"));
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|_| fail(QsStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn slice<'a, T>(p: *const T, n: usize, what: &str) -> FfiResult<&'a [T]> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return fail(QsStatus::NullPointer, format!("{what} is NULL"));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

/// Message for the last failing call on this thread, or `NULL` if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a lottery from `n` outcome labels, probabilities and utilities.
///
/// # Safety
/// `label` must be a NUL-terminated string; `outcomes`, `p` and `u` must point
/// to `n` valid elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_lottery_new(
    label: *const c_char,
    outcomes: *const *const c_char,
    p: *const f64,
    u: *const f64,
    n: usize,
    out: *mut *mut QsLottery,
) -> QsStatus {
    guard(|| {
        let label = c_str(label, "label")?;
        let names = slice(outcomes, n, "outcomes")?
            .iter()
            .enumerate()
            .map(|(k, &s)| c_str(s, &format!("outcomes[{k}]")))
            .collect::<FfiResult<Vec<_>>>()?;
        let lot = Lottery::from_parts(label, &names, slice(p, n, "p")?, slice(u, n, "u")?)?;
        write(out, Box::into_raw(Box::new(QsLottery(lot))), "out")
    })
}

/// Parses a lottery from its JSON form
/// `{"label": ..., "entries": [{"outcome": ..., "p": ..., "u": ...}]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qs_lottery_from_json(json: *const c_char, out: *mut *mut QsLottery) -> QsStatus {
    guard(|| {
        let text = c_str(json, "json")?;
        let lot: Lottery = serde_json::from_str(text).or_else(|e| fail(QsStatus::InvalidLottery, e.to_string()))?;
        write(out, Box::into_raw(Box::new(QsLottery(lot))), "out")
    })
}

/// # Safety
/// `lottery` must be `NULL` or a handle from `qs_lottery_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qs_lottery_free(lottery: *mut QsLottery) {
    if !lottery.is_null() {
        drop(Box::from_raw(lottery));
    }
}

/// Number of outcomes, or 0 for `NULL`.
///
/// # Safety
/// `lottery` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_lottery_len(lottery: *const QsLottery) -> usize {
    lottery.as_ref().map_or(0, |l| l.0.len())
}

/// # Safety
/// `lottery` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qs_lottery_expected_utility(lottery: *const QsLottery, out: *mut f64) -> QsStatus {
    guard(|| write(out, deref(lottery, "lottery")?.0.expected_utility(), "out"))
}

/// An empty theta spec.
#[no_mangle]
pub extern "C" fn qs_theta_new() -> *mut QsTheta {
    Box::into_raw(Box::new(QsTheta(ThetaSpec::new())))
}

/// The same `cos` on every pair of a `dim`-event basis.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_theta_uniform(dim: usize, cos: f64, out: *mut *mut QsTheta) -> QsStatus {
    guard(|| {
        let spec = ThetaSpec::uniform(dim, cos)?;
        write(out, Box::into_raw(Box::new(QsTheta(spec))), "out")
    })
}

/// Sets `cos Theta` for the 1-based event pair `(i, j)`, in either order.
///
/// # Safety
/// `theta` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_theta_set(theta: *mut QsTheta, i: usize, j: usize, cos: f64) -> QsStatus {
    guard(|| match theta.as_mut() {
        Some(t) => Ok(t.0.set(i, j, cos)?),
        None => fail(QsStatus::NullPointer, "theta is NULL"),
    })
}

/// # Safety
/// `theta` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_theta_free(theta: *mut QsTheta) {
    if !theta.is_null() {
        drop(Box::from_raw(theta));
    }
}

/// Classical criterion `sum P_i Q_j cos Theta (u_i - u_j)`; positive favours `a`.
///
/// # Safety
/// All handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qs_criterion_classical(
    a: *const QsLottery,
    b: *const QsLottery,
    theta: *const QsTheta,
    out: *mut f64,
) -> QsStatus {
    guard(|| {
        let v = criterion_classical(&deref(a, "a")?.0, &deref(b, "b")?.0, &deref(theta, "theta")?.0)?;
        write(out, v, "out")
    })
}

/// Non-classical criterion split into risk and comparison terms.
///
/// # Safety
/// All handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qs_criterion_nonclassical(
    a: *const QsLottery,
    b: *const QsLottery,
    theta: *const QsTheta,
    out: *mut QsBreakdown,
) -> QsStatus {
    guard(|| {
        let br = criterion_nonclassical(&deref(a, "a")?.0, &deref(b, "b")?.0, &deref(theta, "theta")?.0)?;
        let br = QsBreakdown {
            risk_a: br.risk_a,
            risk_b: br.risk_b,
            comparison: br.comparison,
            total: br.total,
        };
        write(out, br, "out")
    })
}

/// The criterion evaluated as `tr(D rho)` on an explicit comparison state.
///
/// # Safety
/// All handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qs_criterion_trace(
    a: *const QsLottery,
    b: *const QsLottery,
    theta: *const QsTheta,
    kind: QsStateKind,
    out: *mut f64,
) -> QsStatus {
    guard(|| {
        let kind = match kind {
            QsStateKind::Classical => StateKind::Classical,
            QsStateKind::Nonclassical => StateKind::Nonclassical,
        };
        let v = criterion_via_trace(&deref(a, "a")?.0, &deref(b, "b")?.0, &deref(theta, "theta")?.0, kind)?;
        write(out, v, "out")
    })
}

/// `w_xi(x)`; no validation, NaN propagates.
#[no_mangle]
pub extern "C" fn qs_w_xi(x: f64, xi: f64) -> f64 {
    w_xi(x, xi)
}

#[no_mangle]
pub extern "C" fn qs_goldstein_einhorn(x: f64, lambda_c: f64, delta: f64) -> f64 {
    goldstein_einhorn(x, lambda_c, delta)
}

/// Writes the `n` subjective probabilities of `p` into `out`.
///
/// # Safety
/// `p` must point to `n` readable and `out` to `n` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qs_subjective_probs(p: *const f64, n: usize, out: *mut f64) -> QsStatus {
    guard(|| {
        let pv = ProbabilityVector::new(slice(p, n, "p")?.to_vec())?;
        let s = subjective_probs(&pv)?;
        if out.is_null() {
            return fail(QsStatus::NullPointer, "out is NULL");
        }
        ptr::copy_nonoverlapping(s.values().as_ptr(), out, n);
        Ok(())
    })
}

/// Ellsberg criteria `s12` (f1 over f2) and `s43` (f4 over f3).
///
/// # Safety
/// Out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_ellsberg(alpha: f64, lambda: f64, delta_u: f64, s12: *mut f64, s43: *mut f64) -> QsStatus {
    guard(|| {
        let p = EllsbergParams::new(alpha, lambda, delta_u)?;
        write(s12, ellsberg_s12(&p), "s12")?;
        write(s43, ellsberg_s43(&p), "s43")
    })
}

/// Machina criteria `s12` and `s43`.
///
/// # Safety
/// Out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_machina(
    alpha: f64,
    beta: f64,
    lambda: f64,
    a: f64,
    s12: *mut f64,
    s43: *mut f64,
) -> QsStatus {
    guard(|| {
        let m = MachinaParams::new(alpha, beta, lambda, a)?;
        write(s12, machina_s12(&m), "s12")?;
        write(s43, machina_s43(&m), "s43")
    })
}

/// Utility of the cash equivalent of a lot paying `u_y` with probability `p`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_cash_equivalent(p: f64, lambda: f64, u_y: f64, out: *mut f64) -> QsStatus {
    guard(|| write(out, cash_equivalent(&CEParams::new(p, lambda, u_y)?), "out"))
}

/// Willingness to accept (seller) and to pay (buyer).
///
/// # Safety
/// Out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_wta_wtp(
    p: f64,
    u_y: f64,
    lambda_seller: f64,
    lambda_buyer: f64,
    wta: *mut f64,
    wtp: *mut f64,
) -> QsStatus {
    guard(|| {
        let (a, b) = wta_wtp(p, u_y, lambda_seller, lambda_buyer)?;
        write(wta, a, "wta")?;
        write(wtp, b, "wtp")
    })
}

/// Sweeps `alpha` over `[alpha_lo, alpha_hi]` and `lambda` over
/// `[lambda_lo, lambda_hi]`, both inclusive.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qs_phase_diagram(
    kind: QsDiagram,
    scale: f64,
    alpha_lo: f64,
    alpha_hi: f64,
    alpha_steps: usize,
    lambda_lo: f64,
    lambda_hi: f64,
    lambda_steps: usize,
    tol: f64,
    out: *mut *mut QsRegionMap,
) -> QsStatus {
    guard(|| {
        let kind = match kind {
            QsDiagram::Ellsberg => DiagramKind::Ellsberg { delta_u: scale },
            QsDiagram::Machina => DiagramKind::MachinaDiagonal { a: scale },
        };
        let alpha = AxisSpec::new("alpha", alpha_lo, alpha_hi, alpha_steps)?;
        let lambda = AxisSpec::new("lambda", lambda_lo, lambda_hi, lambda_steps)?;
        let map = phase_diagram(kind, &alpha, &lambda, tol)?;
        write(out, Box::into_raw(Box::new(QsRegionMap(map))), "out")
    })
}

/// Number of lambda rows, or 0 for `NULL`.
///
/// # Safety
/// `map` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_region_map_rows(map: *const QsRegionMap) -> usize {
    map.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of alpha columns, or 0 for `NULL`.
///
/// # Safety
/// `map` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_region_map_cols(map: *const QsRegionMap) -> usize {
    map.as_ref().map_or(0, |m| m.0.cols())
}

/// # Safety
/// `map` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qs_region_map_cell(
    map: *const QsRegionMap,
    row: usize,
    col: usize,
    out: *mut QsRegionCell,
) -> QsStatus {
    guard(|| {
        let m = &deref(map, "map")?.0;
        if row >= m.rows() || col >= m.cols() {
            return fail(
                QsStatus::OutOfRange,
                format!("cell ({row}, {col}) outside a {}x{} grid", m.rows(), m.cols()),
            );
        }
        let c = m.cell(row, col);
        let cell = QsRegionCell {
            x1: c.x1,
            x2: c.x2,
            s12: c.s12,
            s43: c.s43,
            pattern: c.pattern.pattern().into(),
        };
        write(out, cell, "out")
    })
}

/// # Safety
/// `map` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_region_map_free(map: *mut QsRegionMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}
