//! Command implementations behind the `qselect` binary. Each command writes to
//! any `Write` sink so the output can be tested without spawning a process.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::error::{param, Error};
use crate::evaluation::{
    criterion_classical, criterion_nonclassical, criterion_via_trace, decide, CriterionBreakdown, Direction, Verdict,
};
use crate::scenarios::{cash_equivalent, phase_diagram, AxisSpec, CEParams, DiagramKind};
use crate::sigfig::format_sig12;
use crate::states::{Lottery, StateKind};
use crate::weighting::w_xi;
use crate::ThetaSpec;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] Error),

    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("write failed: {0}")]
    Write(#[from] io::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// `x,w` rows of `w_xi` on an evenly spaced grid over `[0, 1]`.
pub fn pwf_csv<W: Write>(xi: f64, steps: usize, mut out: W) -> CliResult<()> {
    if !xi.is_finite() || xi < 1.0 {
        return Err(param("xi", format!("{xi} must be at least 1")).into());
    }
    let axis = AxisSpec::new("steps", 0.0, 1.0, steps)?;
    writeln!(out, "x,w")?;
    for x in axis.values() {
        writeln!(out, "{},{}", format_sig12(x), format_sig12(w_xi(x, xi)))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classical,
    Nonclassical,
}

impl From<Mode> for StateKind {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Classical => StateKind::Classical,
            Mode::Nonclassical => StateKind::Nonclassical,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub mode: Mode,
    pub lottery_a: String,
    pub lottery_b: String,
    pub criterion: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<CriterionBreakdown>,
    pub verdict: Verdict,
    pub margin: f64,
    /// The same criterion evaluated as `tr(D rho)`.
    pub trace_criterion: f64,
    pub trace_residual: f64,
}

pub fn compare(a: &Lottery, b: &Lottery, theta: &ThetaSpec, mode: Mode, tol: f64) -> CliResult<CompareReport> {
    if tol.is_nan() || tol < 0.0 {
        return Err(param("tol", format!("{tol} must be non-negative")).into());
    }
    let (criterion, breakdown) = match mode {
        Mode::Classical => (criterion_classical(a, b, theta)?, None),
        Mode::Nonclassical => {
            let br = criterion_nonclassical(a, b, theta)?;
            (br.total, Some(br))
        }
    };
    let trace_criterion = criterion_via_trace(a, b, theta, mode.into())?;
    let pref = decide(criterion, Direction::Forward, tol);
    Ok(CompareReport {
        mode,
        lottery_a: a.label().to_string(),
        lottery_b: b.label().to_string(),
        criterion,
        breakdown,
        verdict: pref.verdict,
        margin: pref.margin,
        trace_criterion,
        trace_residual: (criterion - trace_criterion).abs(),
    })
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn load_lottery(path: &Path) -> CliResult<Lottery> {
    parse(path)
}

pub fn load_theta(path: &Path) -> CliResult<ThetaSpec> {
    parse(path)
}

pub fn write_report<W: Write>(report: &CompareReport, mut out: W) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut out, report).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn ellsberg_csv<W: Write>(alpha: &AxisSpec, lambda: &AxisSpec, delta_u: f64, tol: f64, out: W) -> CliResult<()> {
    if !delta_u.is_finite() || delta_u <= 0.0 {
        return Err(param("delta-u", format!("{delta_u} must be positive")).into());
    }
    let map = phase_diagram(DiagramKind::Ellsberg { delta_u }, alpha, lambda, tol)?;
    map.write_csv(out)?;
    Ok(())
}

pub fn machina_csv<W: Write>(alpha: &AxisSpec, lambda: &AxisSpec, a: f64, tol: f64, out: W) -> CliResult<()> {
    if !a.is_finite() || a <= 0.0 {
        return Err(param("a", format!("{a} must be positive")).into());
    }
    let map = phase_diagram(DiagramKind::MachinaDiagonal { a }, alpha, lambda, tol)?;
    map.write_csv(out)?;
    Ok(())
}

/// `p,lambda,u_ce_over_u_y` rows, `p`-major.
pub fn ce_csv<W: Write>(p: &AxisSpec, lambda: &AxisSpec, u_y: f64, mut out: W) -> CliResult<()> {
    if p.lo <= 0.0 || p.hi > 1.0 {
        return Err(param(&p.name, "probabilities must lie in (0, 1]").into());
    }
    if !u_y.is_finite() || u_y <= 0.0 {
        return Err(param("u-y", format!("{u_y} must be positive")).into());
    }
    writeln!(out, "p,lambda,u_ce_over_u_y")?;
    for pv in p.values() {
        for lv in lambda.values() {
            let c = CEParams::new(pv, lv, u_y)?;
            writeln!(
                out,
                "{},{},{}",
                format_sig12(pv),
                format_sig12(lv),
                format_sig12(cash_equivalent(&c) / u_y)
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::{ellsberg_lotteries, ellsberg_s12, ellsberg_theta, EllsbergParams};

    fn run(f: impl FnOnce(&mut Vec<u8>) -> CliResult<()>) -> String {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    #[allow(clippy::approx_constant)] // the truncated value a user would type
    fn pwf_three_steps() {
        let text = run(|b| pwf_csv(1.41421356, 3, b));
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[1], "0,0");
        let w: f64 = rows[2].split(',').nth(1).unwrap().parse().unwrap();
        assert!((w - 0.41421).abs() < 1e-5);
        assert_eq!(rows[3], "1,1");

        let text = run(|b| pwf_csv(1.0, 3, b));
        assert_eq!(text.lines().nth(2).unwrap(), "0.5,0.5");
        assert_eq!(run(|b| pwf_csv(1.0, 7, b)).lines().count(), 8);
    }

    #[test]
    fn pwf_validation_names_flag() {
        let err = pwf_csv(0.5, 3, Vec::new()).unwrap_err();
        assert!(err.to_string().contains("xi"));
        let err = pwf_csv(1.0, 1, Vec::new()).unwrap_err();
        assert!(err.to_string().contains("steps"));
    }

    #[test]
    fn compare_identical_lotteries() {
        let a = Lottery::from_parts("a", &["x", "y"], &[0.3, 0.7], &[2.0, 1.0]).unwrap();
        let theta = ThetaSpec::uniform(4, 0.6).unwrap();
        let r = compare(&a, &a, &theta, Mode::Classical, 1e-12).unwrap();
        assert_eq!(r.verdict, Verdict::Indifferent);
        assert!(r.trace_residual < 1e-9);

        // superposed lots keep their risk terms, which add up here
        let r = compare(&a, &a, &theta, Mode::Nonclassical, 1e-12).unwrap();
        let br = r.breakdown.unwrap();
        assert!(br.comparison.abs() < 1e-15);
        assert!((br.risk_a - 0.6 * 0.21f64.sqrt()).abs() < 1e-15);
        assert_eq!(br.risk_a, br.risk_b);
        assert!(r.trace_residual < 1e-9);
    }

    #[test]
    fn compare_ellsberg_matches_closed_form() {
        let [f1, f2, _, _] = ellsberg_lotteries(0.3, 1.0).unwrap();
        let theta = ellsberg_theta(0.2).unwrap();
        let r = compare(&f1, &f2, &theta, Mode::Nonclassical, 1e-12).unwrap();
        let expect = ellsberg_s12(&EllsbergParams::new(0.3, 0.2, 1.0).unwrap());
        assert!((r.criterion - expect).abs() < 1e-9);
        assert!(r.trace_residual < 1e-9);
        assert_eq!(r.verdict, Verdict::First);
        let text = run(|b| write_report(&r, b));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["mode"], "nonclassical");
        assert!(v["breakdown"]["risk_b"].is_number());
    }

    #[test]
    fn ce_rows() {
        let p = AxisSpec::parse("p", "0.5:0.5:2").unwrap();
        let l = AxisSpec::parse("lambda", "0:1:3").unwrap();
        let text = run(|b| ce_csv(&p, &l, 2.0, b));
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows[0], "p,lambda,u_ce_over_u_y");
        assert_eq!(rows[1], "0.5,0,0.5");
        assert_eq!(rows.len(), 7);
        let bad = AxisSpec::parse("p", "0:1:3").unwrap();
        let err = ce_csv(&bad, &l, 1.0, Vec::new()).unwrap_err();
        assert!(err.to_string().contains('p'));
    }
}
