//! Closed-form criteria for the Ellsberg and Machina urns, their phase
//! diagrams, and the cash-equivalent / WTA-WTP analysis.
//!
//! The Ellsberg criteria are also reachable through the general machinery
//! ([`ellsberg_via_general`], [`ellsberg_via_trace`]) so the two paths can be
//! checked against each other.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::error::{param, Error, Result};
use crate::evaluation::{
    criterion_nonclassical, criterion_via_trace, decide, Direction, Preference, ThetaSpec, Verdict,
};
use crate::sigfig::format_sig12;
use crate::states::{nonclassical_state, ComparisonState, Lottery, PhaseSpec, StateKind};

/// Probability mass of the 50-ball group in the Machina urn.
pub const MACHINA_P: f64 = 50.0 / 101.0;
/// Probability mass of the 51-ball group in the Machina urn.
pub const MACHINA_Q: f64 = 51.0 / 101.0;
/// Utility unit of the Machina lotteries.
pub const MACHINA_DEFAULT_A: f64 = 101.0;

fn unit_interval(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || !(0.0..=1.0).contains(&v) {
        return Err(param(name, format!("{v} is not in [0, 1]")));
    }
    Ok(())
}

fn signed_unit(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || !(-1.0..=1.0).contains(&v) {
        return Err(param(name, format!("{v} is not in [-1, 1]")));
    }
    Ok(())
}

fn positive(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(param(name, format!("{v} must be positive")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllsbergParams {
    /// Unknown share of white balls among the 60 non-red balls.
    pub alpha: f64,
    /// Degree of evaluation of risk for the ambiguous lots.
    pub lambda: f64,
    /// `u($100) - u($0)`.
    pub delta_u: f64,
}

impl EllsbergParams {
    pub fn new(alpha: f64, lambda: f64, delta_u: f64) -> Result<Self> {
        unit_interval("alpha", alpha)?;
        signed_unit("lambda", lambda)?;
        positive("delta_u", delta_u)?;
        Ok(Self { alpha, lambda, delta_u })
    }
}

fn ellsberg_terms(alpha: f64) -> (f64, f64, f64) {
    let known = (3.0 - 2.0 * alpha).sqrt() / 3.0;
    let ambiguous = 2.0 * alpha.sqrt() / 3.0;
    let risk = (2.0 * alpha * (3.0 - 2.0 * alpha)).sqrt() / 3.0;
    (known, ambiguous, risk)
}

/// Criterion for `f1` over `f2`; positive means `f1 > f2`.
pub fn ellsberg_s12(p: &EllsbergParams) -> f64 {
    let (known, ambiguous, risk) = ellsberg_terms(p.alpha);
    (known - ambiguous + p.lambda * risk) * p.delta_u
}

/// Criterion for `f4` over `f3`; positive means `f4 > f3`.
pub fn ellsberg_s43(p: &EllsbergParams) -> f64 {
    let (known, ambiguous, risk) = ellsberg_terms(p.alpha);
    (ambiguous - known + p.lambda * risk) * p.delta_u
}

/// The four Ellsberg lotteries over outcomes `"100"` and `"0"`.
pub fn ellsberg_lotteries(alpha: f64, delta_u: f64) -> Result<[Lottery; 4]> {
    unit_interval("alpha", alpha)?;
    positive("delta_u", delta_u)?;
    let outcomes = ["100", "0"];
    let u = [delta_u, 0.0];
    let two_alpha = 2.0 * alpha / 3.0;
    let rest = (3.0 - 2.0 * alpha) / 3.0;
    Ok([
        Lottery::from_parts("f1", &outcomes, &[1.0 / 3.0, 2.0 / 3.0], &u)?,
        Lottery::from_parts("f2", &outcomes, &[two_alpha, rest], &u)?,
        Lottery::from_parts("f3", &outcomes, &[rest, two_alpha], &u)?,
        Lottery::from_parts("f4", &outcomes, &[2.0 / 3.0, 1.0 / 3.0], &u)?,
    ])
}

/// Effective angles for an Ellsberg pair (known lot first, ambiguous second).
///
/// Both cross comparisons carry `cos = 1`: with the gap written as
/// `u_i - u_j`, the `($0, $100)` term is already negative. The known lot has
/// no risk evaluation and the ambiguous lot has `cos Theta_34 = lambda`.
pub fn ellsberg_theta(lambda: f64) -> Result<ThetaSpec> {
    signed_unit("lambda", lambda)?;
    ThetaSpec::new()
        .with(1, 4, 1.0)?
        .with(2, 3, 1.0)?
        .with(1, 2, 0.0)?
        .with(3, 4, lambda)?
        .with(1, 3, 0.0)?
        .with(2, 4, 0.0)
}

/// Non-classical comparison states for `(f1, f2)` and `(f4, f3)`.
pub fn ellsberg_states(p: &EllsbergParams) -> Result<(ComparisonState, ComparisonState)> {
    let [f1, f2, f3, f4] = ellsberg_lotteries(p.alpha, p.delta_u)?;
    let zero = PhaseSpec::zeros(4);
    Ok((
        nonclassical_state(&f1, &f2, &zero)?,
        nonclassical_state(&f4, &f3, &zero)?,
    ))
}

/// `(s12, s43)` through [`criterion_nonclassical`] on the Ellsberg lotteries.
pub fn ellsberg_via_general(p: &EllsbergParams) -> Result<(f64, f64)> {
    let [f1, f2, f3, f4] = ellsberg_lotteries(p.alpha, p.delta_u)?;
    let theta = ellsberg_theta(p.lambda)?;
    Ok((
        criterion_nonclassical(&f1, &f2, &theta)?.total,
        criterion_nonclassical(&f4, &f3, &theta)?.total,
    ))
}

/// `(s12, s43)` as `tr(D rho)` with explicit phases realising [`ellsberg_theta`].
pub fn ellsberg_via_trace(p: &EllsbergParams) -> Result<(f64, f64)> {
    let [f1, f2, f3, f4] = ellsberg_lotteries(p.alpha, p.delta_u)?;
    let theta = ellsberg_theta(p.lambda)?;
    Ok((
        criterion_via_trace(&f1, &f2, &theta, StateKind::Nonclassical)?,
        criterion_via_trace(&f4, &f3, &theta, StateKind::Nonclassical)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MachinaParams {
    /// Unknown share of red among the 50 red/black balls.
    pub alpha: f64,
    /// Unknown share of white among the 51 white/yellow balls.
    pub beta: f64,
    pub lambda: f64,
    /// Utility unit; the outcomes are worth `3a, 2a, a, 0`.
    pub a: f64,
}

impl MachinaParams {
    pub fn new(alpha: f64, beta: f64, lambda: f64, a: f64) -> Result<Self> {
        unit_interval("alpha", alpha)?;
        unit_interval("beta", beta)?;
        signed_unit("lambda", lambda)?;
        positive("a", a)?;
        Ok(Self { alpha, beta, lambda, a })
    }

    /// Probability that `f2` pays `2a`.
    fn mix(&self) -> f64 {
        (MACHINA_P * self.alpha + MACHINA_Q * self.beta).clamp(0.0, 1.0)
    }
}

/// Parts of the `f1` vs `f2` criterion: known-lot risk (zero), ambiguous-lot
/// risk, comparison.
pub fn machina_s12_parts(m: &MachinaParams) -> (f64, f64, f64) {
    let (p, q) = (MACHINA_P, MACHINA_Q);
    let r = m.mix();
    let risk_f2 = (r * (1.0 - r)).sqrt() * m.lambda * m.a;
    let comparison = ((p * (1.0 - r)).sqrt() - (q * r).sqrt()) * m.a;
    (0.0, risk_f2, comparison)
}

/// Criterion for `f1` over `f2`; positive means `f1 > f2`.
pub fn machina_s12(m: &MachinaParams) -> f64 {
    let (a, b, c) = machina_s12_parts(m);
    a + b + c
}

/// Parts of the `f4` vs `f3` criterion: risk of `f4`, risk of `f3`, comparison.
pub fn machina_s43_parts(m: &MachinaParams) -> (f64, f64, f64) {
    let (p, q) = (MACHINA_P, MACHINA_Q);
    let (al, be) = (m.alpha, m.beta);
    let spread = p * (al * (1.0 - al)).sqrt() + q * (be * (1.0 - be)).sqrt();
    let risk_f4 = -2.0 * spread * m.lambda * m.a;
    let risk_f3 = spread * m.lambda * m.a;
    let gain = (p * q * al * be).sqrt() + q * (be * (1.0 - be)).sqrt() + q * be;
    let loss = (p * q * (1.0 - al) * (1.0 - be)).sqrt() + p * (al * (1.0 - al)).sqrt() + p * (1.0 - al);
    (risk_f4, risk_f3, (gain - loss) * m.a)
}

/// Criterion for `f4` over `f3`; positive means `f4 > f3`.
pub fn machina_s43(m: &MachinaParams) -> f64 {
    let (a, b, c) = machina_s43_parts(m);
    a + b + c
}

/// `f1` vs `f2` through the general criterion: every cross pair at `cos = 1`,
/// no risk evaluation for `f1`, `lambda` for `f2`.
pub fn machina_s12_via_general(m: &MachinaParams) -> Result<f64> {
    let r = m.mix();
    let outcomes = ["2a", "a"];
    let u = [2.0 * m.a, m.a];
    let f1 = Lottery::from_parts("f1", &outcomes, &[MACHINA_P, MACHINA_Q], &u)?;
    let f2 = Lottery::from_parts("f2", &outcomes, &[r, 1.0 - r], &u)?;
    let theta = ThetaSpec::uniform_cross(2, 1.0)?
        .with(1, 2, 0.0)?
        .with(3, 4, m.lambda)?;
    Ok(criterion_nonclassical(&f1, &f2, &theta)?.total)
}

/// Inclusive, evenly spaced parameter axis written `lo:hi:steps`. A fixed
/// value is written `v:v:1`.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisSpec {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl AxisSpec {
    pub fn new(name: impl Into<String>, lo: f64, hi: f64, steps: usize) -> Result<Self> {
        let name = name.into();
        if !lo.is_finite() || !hi.is_finite() {
            return Err(param(&name, "range bounds must be finite"));
        }
        if lo > hi {
            return Err(param(&name, format!("lower bound {lo} exceeds upper bound {hi}")));
        }
        // a single node only makes sense for a degenerate range
        if steps == 0 || (steps == 1 && lo != hi) {
            return Err(param(
                &name,
                format!("steps must be at least 2 for a range, got {steps}"),
            ));
        }
        Ok(Self { name, lo, hi, steps })
    }

    /// Parses `lo:hi:steps`.
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(param(name, format!("`{text}` is not of the form lo:hi:steps")));
        }
        let num = |s: &str| f64::from_str(s.trim()).map_err(|_| param(name, format!("`{s}` is not a number")));
        let steps =
            usize::from_str(parts[2].trim()).map_err(|_| param(name, format!("`{}` is not a step count", parts[2])))?;
        Self::new(name, num(parts[0])?, num(parts[1])?, steps)
    }

    pub fn value(&self, k: usize) -> f64 {
        if k == 0 {
            self.lo
        } else if k + 1 == self.steps {
            self.hi
        } else {
            self.lo + (self.hi - self.lo) * k as f64 / (self.steps - 1) as f64
        }
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|k| self.value(k))
    }
}

/// Outcome of the two choices of a paradox: (f1 vs f2, f4 vs f3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreferencePattern {
    /// `First` means `f1 > f2`.
    pub first_choice: Preference,
    /// `First` means `f4 > f3`.
    pub second_choice: Preference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    OneOverTwoThreeOverFour,
    OneOverTwoFourOverThree,
    TwoOverOneFourOverThree,
    TwoOverOneThreeOverFour,
    Indifferent,
}

impl Pattern {
    pub fn label(self) -> &'static str {
        match self {
            Pattern::OneOverTwoThreeOverFour => "1>2,3>4",
            Pattern::OneOverTwoFourOverThree => "1>2,4>3",
            Pattern::TwoOverOneFourOverThree => "2>1,4>3",
            Pattern::TwoOverOneThreeOverFour => "2>1,3>4",
            Pattern::Indifferent => "indiff",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl PreferencePattern {
    pub fn from_criteria(s12: f64, s43: f64, tol: f64) -> Self {
        Self {
            first_choice: decide(s12, Direction::Forward, tol),
            second_choice: decide(s43, Direction::Forward, tol),
        }
    }

    pub fn pattern(&self) -> Pattern {
        use Verdict::*;
        match (self.first_choice.verdict, self.second_choice.verdict) {
            (First, Second) => Pattern::OneOverTwoThreeOverFour,
            (First, First) => Pattern::OneOverTwoFourOverThree,
            (Second, First) => Pattern::TwoOverOneFourOverThree,
            (Second, Second) => Pattern::TwoOverOneThreeOverFour,
            _ => Pattern::Indifferent,
        }
    }
}

/// Which paradox a phase diagram sweeps, with its fixed scale parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiagramKind {
    /// Sweeps `(alpha, lambda)`.
    Ellsberg { delta_u: f64 },
    /// Sweeps `(alpha, lambda)` with `beta = alpha`.
    MachinaDiagonal { a: f64 },
}

impl DiagramKind {
    /// `(s12, s43)` at one grid node.
    pub fn criteria(&self, alpha: f64, lambda: f64) -> Result<(f64, f64)> {
        match *self {
            DiagramKind::Ellsberg { delta_u } => {
                let p = EllsbergParams::new(alpha, lambda, delta_u)?;
                Ok((ellsberg_s12(&p), ellsberg_s43(&p)))
            }
            DiagramKind::MachinaDiagonal { a } => {
                let m = MachinaParams::new(alpha, alpha, lambda, a)?;
                Ok((machina_s12(&m), machina_s43(&m)))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionCell {
    pub x1: f64,
    pub x2: f64,
    pub s12: f64,
    pub s43: f64,
    pub pattern: PreferencePattern,
}

/// Grid of preference patterns. Row `r` holds the nodes with `axis2` at its
/// `r`-th value; columns follow `axis1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionMap {
    pub axis1: AxisSpec,
    pub axis2: AxisSpec,
    cells: Vec<RegionCell>,
}

pub const REGION_CSV_HEADER: &str = "axis1,axis2,s12,s43,pattern";

impl RegionMap {
    pub fn rows(&self) -> usize {
        self.axis2.steps
    }

    pub fn cols(&self) -> usize {
        self.axis1.steps
    }

    pub fn cell(&self, row: usize, col: usize) -> &RegionCell {
        &self.cells[row * self.cols() + col]
    }

    pub fn cells(&self) -> &[RegionCell] {
        &self.cells
    }

    pub fn count(&self, pattern: Pattern) -> usize {
        self.cells.iter().filter(|c| c.pattern.pattern() == pattern).count()
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{REGION_CSV_HEADER}")?;
        for c in &self.cells {
            writeln!(
                out,
                "{},{},{},{},{}",
                format_sig12(c.x1),
                format_sig12(c.x2),
                format_sig12(c.s12),
                format_sig12(c.s43),
                c.pattern.pattern()
            )?;
        }
        Ok(())
    }
}

/// Evaluates both criteria over the grid `axis1 x axis2` (`alpha x lambda`).
pub fn phase_diagram(kind: DiagramKind, axis1: &AxisSpec, axis2: &AxisSpec, tol: f64) -> Result<RegionMap> {
    if tol.is_nan() || tol < 0.0 {
        return Err(param("tol", format!("{tol} must be non-negative")));
    }
    for axis in [axis1, axis2] {
        AxisSpec::new(axis.name.clone(), axis.lo, axis.hi, axis.steps)?;
    }
    // Validate the corners up front so range errors name the axis.
    for &(x1, x2) in &[(axis1.lo, axis2.lo), (axis1.hi, axis2.hi)] {
        kind.criteria(x1, x2).map_err(|e| match e {
            Error::InvalidParameter { name, reason } => {
                let axis = if name == "lambda" { &axis2.name } else { &axis1.name };
                param(axis, reason)
            }
            other => other,
        })?;
    }
    let mut cells = Vec::with_capacity(axis1.steps * axis2.steps);
    for x2 in axis2.values() {
        for x1 in axis1.values() {
            let (s12, s43) = kind.criteria(x1, x2)?;
            cells.push(RegionCell {
                x1,
                x2,
                s12,
                s43,
                pattern: PreferencePattern::from_criteria(s12, s43, tol),
            });
        }
    }
    Ok(RegionMap {
        axis1: axis1.clone(),
        axis2: axis2.clone(),
        cells,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MachinaCell {
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
    pub s12: f64,
    pub s43: f64,
    pub pattern: PreferencePattern,
}

/// The full `(alpha, beta, lambda)` Machina sweep, ordered lambda-major then
/// beta then alpha.
pub fn machina_cube(
    alpha: &AxisSpec,
    beta: &AxisSpec,
    lambda: &AxisSpec,
    a: f64,
    tol: f64,
) -> Result<Vec<MachinaCell>> {
    let mut out = Vec::with_capacity(alpha.steps * beta.steps * lambda.steps);
    for l in lambda.values() {
        for b in beta.values() {
            for al in alpha.values() {
                let m = MachinaParams::new(al, b, l, a)?;
                let (s12, s43) = (machina_s12(&m), machina_s43(&m));
                out.push(MachinaCell {
                    alpha: al,
                    beta: b,
                    lambda: l,
                    s12,
                    s43,
                    pattern: PreferencePattern::from_criteria(s12, s43, tol),
                });
            }
        }
    }
    Ok(out)
}

/// A lot paying `y` with probability `p` and nothing otherwise, with `u(0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CEParams {
    pub p: f64,
    pub lambda: f64,
    pub u_y: f64,
}

impl CEParams {
    pub fn new(p: f64, lambda: f64, u_y: f64) -> Result<Self> {
        if !p.is_finite() || p <= 0.0 || p > 1.0 {
            return Err(param("p", format!("{p} is not in (0, 1]")));
        }
        if !lambda.is_finite() {
            return Err(param("lambda", "must be finite"));
        }
        positive("u_y", u_y)?;
        Ok(Self { p, lambda, u_y })
    }
}

/// Criterion of the lot against sure cash with utility `u_x`; positive favours the lot.
pub fn ce_criterion(c: &CEParams, u_x: f64) -> f64 {
    let q = 1.0 - c.p;
    c.p.sqrt() * (c.u_y - u_x) - q.sqrt() * u_x - c.lambda * (c.p * q).sqrt() * c.u_y
}

/// Utility of the cash amount at which [`ce_criterion`] vanishes.
pub fn cash_equivalent(c: &CEParams) -> f64 {
    let sp = c.p.sqrt();
    let sq = (1.0 - c.p).sqrt();
    sp * (1.0 - c.lambda * sq) * c.u_y / (sp + sq)
}

/// `(WTA, WTP)`: cash equivalents at the seller's and the buyer's DER.
pub fn wta_wtp(p: f64, u_y: f64, lambda_seller: f64, lambda_buyer: f64) -> Result<(f64, f64)> {
    let seller = CEParams::new(p, lambda_seller, u_y).map_err(|e| rename(e, "lambda", "lambda_seller"))?;
    let buyer = CEParams::new(p, lambda_buyer, u_y).map_err(|e| rename(e, "lambda", "lambda_buyer"))?;
    Ok((cash_equivalent(&seller), cash_equivalent(&buyer)))
}

fn rename(e: Error, from: &str, to: &str) -> Error {
    match e {
        Error::InvalidParameter { name, reason } if name == from => param(to, reason),
        other => other,
    }
}
