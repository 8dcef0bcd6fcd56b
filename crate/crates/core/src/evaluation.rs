//! The evaluation operator `D`, the functional `rho -> tr(D rho)`, and the
//! closed-form classical and non-classical criteria.
//!
//! Pair sums run over unordered within-lot pairs `i < j` and over every cross
//! pair `(i, jbar)`, one term each. This is the convention under which the
//! trace of `D rho` and the closed forms agree term for term.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{Complex64, SquareMatrix, STRUCTURE_TOL};
use crate::states::{
    classical_state, nonclassical_state, ComparisonBasis, ComparisonState, Lottery, PhaseSpec, StateKind,
};

/// Default margin below which a criterion is reported as indifferent.
pub const DEFAULT_DECISION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct PairCos {
    i: usize,
    j: usize,
    cos: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawTheta {
    pairs: Vec<PairCos>,
}

/// `cos Theta_kl` for unordered pairs of basis events.
///
/// Events are numbered from 1, so for `n` outcomes lot A occupies `1..=n` and
/// lot B `n+1..=2n`, matching the JSON form `{"pairs": [{"i", "j", "cos"}]}`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTheta", into = "RawTheta")]
pub struct ThetaSpec {
    cos: BTreeMap<(usize, usize), f64>,
}

impl TryFrom<RawTheta> for ThetaSpec {
    type Error = Error;
    fn try_from(raw: RawTheta) -> Result<Self> {
        let mut spec = ThetaSpec::new();
        for (k, p) in raw.pairs.iter().enumerate() {
            let key = ordered(p.i, p.j);
            if spec.cos.contains_key(&key) {
                return Err(Error::InvalidTheta(format!(
                    "pairs[{k}]: duplicate pair ({}, {})",
                    p.i, p.j
                )));
            }
            spec.set(p.i, p.j, p.cos)
                .map_err(|e| Error::InvalidTheta(format!("pairs[{k}]: {e}")))?;
        }
        Ok(spec)
    }
}

impl From<ThetaSpec> for RawTheta {
    fn from(spec: ThetaSpec) -> Self {
        RawTheta {
            pairs: spec
                .cos
                .into_iter()
                .map(|((i, j), cos)| PairCos { i, j, cos })
                .collect(),
        }
    }
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl ThetaSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets `cos Theta_ij` for 1-based events `i != j`.
    pub fn set(&mut self, i: usize, j: usize, cos: f64) -> Result<()> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidTheta("event numbers start at 1".into()));
        }
        if i == j {
            return Err(Error::InvalidTheta(format!("pair ({i}, {j}) is not a pair")));
        }
        if !cos.is_finite() || !(-1.0..=1.0).contains(&cos) {
            return Err(Error::InvalidTheta(format!(
                "cos for ({i}, {j}) is {cos}, outside [-1, 1]"
            )));
        }
        self.cos.insert(ordered(i, j), cos);
        Ok(())
    }

    pub fn with(mut self, i: usize, j: usize, cos: f64) -> Result<Self> {
        self.set(i, j, cos)?;
        Ok(self)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.cos.get(&ordered(i, j)).copied()
    }

    pub fn len(&self) -> usize {
        self.cos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cos.is_empty()
    }

    /// `((i, j), cos)` with `i < j`, in ascending order.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.cos.iter().map(|(&k, &v)| (k, v))
    }

    /// The same `cos` on every pair of a `dim`-event basis.
    pub fn uniform(dim: usize, cos: f64) -> Result<Self> {
        let mut spec = Self::new();
        for i in 1..=dim {
            for j in (i + 1)..=dim {
                spec.set(i, j, cos)?;
            }
        }
        Ok(spec)
    }

    /// The same `cos` on every cross pair `(i, n + j)`; within-lot pairs unset.
    pub fn uniform_cross(n: usize, cos: f64) -> Result<Self> {
        let mut spec = Self::new();
        for i in 1..=n {
            for j in 1..=n {
                spec.set(i, n + j, cos)?;
            }
        }
        Ok(spec)
    }

    /// `cos(phi_kl - theta_k + theta_l)` for every pair `k < l`.
    pub fn from_phases(phi: &PhiSpec, phases: &PhaseSpec) -> Result<Self> {
        if phi.dim() != phases.dim() {
            return Err(Error::DimensionMismatch(format!(
                "phi spec {} vs phase spec {}",
                phi.dim(),
                phases.dim()
            )));
        }
        let mut spec = Self::new();
        for k in 0..phi.dim() {
            for l in (k + 1)..phi.dim() {
                let angle = phi.angle(k, l) - phases.angle(k) + phases.angle(l);
                spec.set(k + 1, l + 1, angle.cos().clamp(-1.0, 1.0))?;
            }
        }
        Ok(spec)
    }

    /// Relabels events as if lots A and B were exchanged (`i <-> n + i`).
    pub fn swap_sides(&self, n: usize) -> Self {
        let flip = |i: usize| if i <= n { i + n } else { i - n };
        Self {
            cos: self
                .cos
                .iter()
                .map(|(&(i, j), &c)| (ordered(flip(i), flip(j)), c))
                .collect(),
        }
    }

    fn max_event(&self) -> usize {
        self.cos.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        let max = self.max_event();
        if max > dim {
            return Err(Error::InvalidTheta(format!(
                "event {max} is outside a {dim}-event basis"
            )));
        }
        Ok(())
    }

    /// Coefficient for 0-based positions `k, l` with utilities `uk, ul`.
    fn coefficient(&self, k: usize, l: usize, uk: f64, ul: f64) -> Result<f64> {
        match self.get(k + 1, l + 1) {
            Some(c) => Ok(c),
            None if uk == ul => Ok(0.0),
            None => Err(Error::MissingTheta {
                i: (k + 1).min(l + 1),
                j: (k + 1).max(l + 1),
            }),
        }
    }
}

/// Phase angles `phi_kl` of the evaluation operator, indexed by 0-based
/// positions.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiSpec {
    dim: usize,
    angles: Vec<f64>,
}

impl PhiSpec {
    /// Takes `phi_kl` for `k < l` from `f` and completes the lower triangle with
    /// `phi_lk = pi - phi_kl`, the choice that makes `D` self-adjoint whatever
    /// the utilities.
    pub fn from_upper(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut angles = vec![0.0; dim * dim];
        for k in 0..dim {
            for l in (k + 1)..dim {
                let phi = f(k, l);
                angles[k * dim + l] = phi;
                angles[l * dim + k] = PI - phi;
            }
        }
        Self { dim, angles }
    }

    /// Raw row-major `dim x dim` angles; self-adjointness is checked by [`build_d`].
    pub fn from_matrix(dim: usize, angles: Vec<f64>) -> Result<Self> {
        if angles.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} angles for dimension {dim}",
                angles.len()
            )));
        }
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite("phi spec".into()));
        }
        Ok(Self { dim, angles })
    }

    /// Angles realising `theta` against `phases`:
    /// `phi_kl = acos(cos Theta_kl) + theta_k - theta_l`. Unset pairs get `cos = 0`.
    pub fn realizing(theta: &ThetaSpec, phases: &PhaseSpec) -> Result<Self> {
        let dim = phases.dim();
        theta.check_dim(dim)?;
        Ok(Self::from_upper(dim, |k, l| {
            let c = theta.get(k + 1, l + 1).unwrap_or(0.0);
            c.acos() + phases.angle(k) - phases.angle(l)
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn angle(&self, k: usize, l: usize) -> f64 {
        self.angles[k * self.dim + l]
    }
}

/// `D = sum_kl (u_k - u_l) e^{i phi_kl} |k><l|`.
pub fn build_d(utilities: &[f64], phi: &PhiSpec) -> Result<SquareMatrix> {
    let dim = utilities.len();
    if phi.dim() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{dim} utilities vs phi spec of dimension {}",
            phi.dim()
        )));
    }
    let d = SquareMatrix::from_fn(dim, |k, l| {
        if k == l {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::from_polar(utilities[k] - utilities[l], phi.angle(k, l))
        }
    });
    for k in 0..dim {
        for l in (k + 1)..dim {
            let scale = (utilities[k] - utilities[l]).abs().max(1.0);
            if (d[(k, l)] - d[(l, k)].conj()).norm() > STRUCTURE_TOL * scale {
                return Err(Error::NotSelfAdjoint { k: k + 1, l: l + 1 });
            }
        }
    }
    Ok(d)
}

/// `Re tr(D rho)`, after checking that the imaginary part vanishes.
pub fn evaluate_trace(d: &SquareMatrix, s: &ComparisonState) -> Result<f64> {
    let rho = s.rho().matrix();
    if d.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator {} vs state {}",
            d.dim(),
            rho.dim()
        )));
    }
    let deviation = d.hermitian_deviation();
    if deviation > STRUCTURE_TOL * d.frobenius_norm().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    let n = d.dim();
    let mut tr = Complex64::new(0.0, 0.0);
    for k in 0..n {
        for l in 0..n {
            tr += d[(k, l)] * rho[(l, k)];
        }
    }
    if tr.im.abs() > STRUCTURE_TOL * d.frobenius_norm().max(1.0) {
        return Err(Error::ComplexEvaluation(tr.im));
    }
    Ok(tr.re)
}

/// Probabilities of `lot` in the basis outcome order.
fn aligned(basis: &ComparisonBasis, lot: &Lottery) -> Vec<f64> {
    basis
        .outcomes()
        .iter()
        .map(|o| lot.entry(o).map_or(0.0, |e| e.p))
        .collect()
}

fn prepare(a: &Lottery, b: &Lottery, theta: &ThetaSpec) -> Result<(ComparisonBasis, Vec<f64>, Vec<f64>)> {
    let basis = ComparisonBasis::for_pair(a, b)?;
    theta.check_dim(basis.dim())?;
    let p = aligned(&basis, a);
    let q = aligned(&basis, b);
    Ok((basis, p, q))
}

/// `sum_ij P_i Q_j cos Theta_{i jbar} (u_i - u_j)`.
pub fn criterion_classical(a: &Lottery, b: &Lottery, theta: &ThetaSpec) -> Result<f64> {
    let (basis, p, q) = prepare(a, b, theta)?;
    let n = basis.n();
    let u = basis.event_utilities();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let c = theta.coefficient(i, n + j, u[i], u[j])?;
            total += p[i] * q[j] * c * (u[i] - u[j]);
        }
    }
    Ok(total)
}

/// The three additive parts of the non-classical criterion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriterionBreakdown {
    pub risk_a: f64,
    pub risk_b: f64,
    pub comparison: f64,
    pub total: f64,
}

impl CriterionBreakdown {
    pub fn new(risk_a: f64, risk_b: f64, comparison: f64) -> Self {
        Self {
            risk_a,
            risk_b,
            comparison,
            total: risk_a + risk_b + comparison,
        }
    }
}

/// Risk terms `sqrt(P_i P_j) cos Theta_ij (u_i - u_j)` for each lot plus the
/// comparison term `sqrt(P_i Q_j) cos Theta_{i jbar} (u_i - u_j)`.
pub fn criterion_nonclassical(a: &Lottery, b: &Lottery, theta: &ThetaSpec) -> Result<CriterionBreakdown> {
    let (basis, p, q) = prepare(a, b, theta)?;
    let n = basis.n();
    let u = basis.event_utilities();
    let mut risk_a = 0.0;
    let mut risk_b = 0.0;
    let mut comparison = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = u[i] - u[j];
            risk_a += (p[i] * p[j]).sqrt() * theta.coefficient(i, j, u[i], u[j])? * gap;
            risk_b += (q[i] * q[j]).sqrt() * theta.coefficient(n + i, n + j, u[i], u[j])? * gap;
        }
    }
    for i in 0..n {
        for j in 0..n {
            let c = theta.coefficient(i, n + j, u[i], u[j])?;
            comparison += (p[i] * q[j]).sqrt() * c * (u[i] - u[j]);
        }
    }
    Ok(CriterionBreakdown::new(risk_a, risk_b, comparison))
}

/// The same criterion computed as `tr(D rho)` with zero event phases and
/// `phi_kl = acos(cos Theta_kl)`.
pub fn criterion_via_trace(a: &Lottery, b: &Lottery, theta: &ThetaSpec, kind: StateKind) -> Result<f64> {
    let basis = ComparisonBasis::for_pair(a, b)?;
    let phases = PhaseSpec::zeros(basis.dim());
    let phi = PhiSpec::realizing(theta, &phases)?;
    let d = build_d(&basis.event_utilities(), &phi)?;
    let state = match kind {
        StateKind::Classical => classical_state(a, b, &phases)?,
        StateKind::Nonclassical => nonclassical_state(a, b, &phases)?,
    };
    evaluate_trace(&d, &state)
}

/// Whether a positive criterion favours the first lot or the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    #[default]
    Forward,
    Reversed,
}

impl Direction {
    pub fn sign(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Reversed => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    First,
    Second,
    Indifferent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Preference {
    pub verdict: Verdict,
    pub margin: f64,
}

pub fn decide(total: f64, direction: Direction, tol: f64) -> Preference {
    let margin = direction.sign() * total;
    let verdict = if margin > tol {
        Verdict::First
    } else if margin < -tol {
        Verdict::Second
    } else {
        Verdict::Indifferent
    };
    Preference { verdict, margin }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lot(label: &str, p: &[f64], u: &[f64]) -> Lottery {
        let names: Vec<String> = (0..p.len()).map(|i| format!("x{}", i + 1)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Lottery::from_parts(label, &refs, p, u).unwrap()
    }

    #[test]
    fn two_event_operator_matches_worked_example() {
        let (u1, u2, phi12) = (3.0, 1.0, 0.8);
        let phi = PhiSpec::from_upper(2, |_, _| phi12);
        let d = build_d(&[u1, u2], &phi).unwrap();
        assert_eq!(d[(0, 0)], Complex64::new(0.0, 0.0));
        assert!((d[(0, 1)] - Complex64::from_polar(u1 - u2, phi12)).norm() < 1e-15);
        assert!((d[(1, 0)] - Complex64::from_polar(u1 - u2, -phi12)).norm() < 1e-15);
    }

    #[test]
    fn equal_utilities_give_zero_operator() {
        let phi = PhiSpec::from_upper(3, |k, l| (k + 2 * l) as f64);
        let d = build_d(&[2.0, 2.0, 2.0], &phi).unwrap();
        assert_eq!(d.frobenius_norm(), 0.0);
    }

    #[test]
    fn non_self_adjoint_phi_rejected() {
        let phi = PhiSpec::from_matrix(2, vec![0.0, 0.3, 0.3, 0.0]).unwrap();
        assert!(matches!(
            build_d(&[1.0, 0.0], &phi),
            Err(Error::NotSelfAdjoint { k: 1, l: 2 })
        ));
        // With equal utilities the entries vanish and any angles are fine.
        assert!(build_d(&[1.0, 1.0], &phi).is_ok());
    }

    #[test]
    fn worked_two_event_evaluation() {
        // Fair two-event state with phase theta12 against D with phi12.
        let (u1, u2, theta12, phi12) = (5.0, 2.0, 0.4, 1.3);
        let rho = SquareMatrix::from_rows(&[
            vec![Complex64::new(0.5, 0.0), Complex64::from_polar(0.5, theta12)],
            vec![Complex64::from_polar(0.5, -theta12), Complex64::new(0.5, 0.0)],
        ])
        .unwrap();
        let d = build_d(&[u1, u2], &PhiSpec::from_upper(2, |_, _| phi12)).unwrap();
        let tr: Complex64 = (0..2)
            .flat_map(|k| (0..2).map(move |l| (k, l)))
            .map(|(k, l)| d[(k, l)] * rho[(l, k)])
            .sum();
        assert!((tr.re - (phi12 - theta12).cos() * (u1 - u2)).abs() < 1e-14);
        assert!(tr.im.abs() < 1e-14);
    }

    #[test]
    fn trace_of_zero_operator_is_zero() {
        let a = lot("a", &[0.4, 0.6], &[1.0, 0.0]);
        let b = lot("b", &[0.7, 0.3], &[1.0, 0.0]);
        let s = nonclassical_state(&a, &b, &PhaseSpec::zeros(4)).unwrap();
        assert_eq!(evaluate_trace(&SquareMatrix::zeros(4), &s).unwrap(), 0.0);
        assert!(matches!(
            evaluate_trace(&SquareMatrix::zeros(2), &s),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn classical_examples() {
        let a = lot("a", &[0.2, 0.5, 0.3], &[4.0, 1.0, -2.0]);
        let b = lot("b", &[0.6, 0.1, 0.3], &[4.0, 1.0, -2.0]);
        let c = 0.37;
        let theta = ThetaSpec::uniform_cross(3, c).unwrap();
        let got = criterion_classical(&a, &b, &theta).unwrap();
        let expect = c * (a.expected_utility() - b.expected_utility());
        assert!((got - expect).abs() < 1e-12);

        let same = criterion_classical(&a, &a, &theta).unwrap();
        assert!(same.abs() < 1e-12);

        let a = lot("a", &[1.0, 0.0], &[1.0, 0.0]);
        let b = lot("b", &[0.0, 1.0], &[1.0, 0.0]);
        let theta = ThetaSpec::uniform_cross(2, 1.0).unwrap();
        assert_eq!(criterion_classical(&a, &b, &theta).unwrap(), 1.0);
    }

    #[test]
    fn missing_theta_is_an_error_only_for_unequal_utilities() {
        let a = lot("a", &[0.5, 0.5], &[1.0, 0.0]);
        let b = lot("b", &[0.3, 0.7], &[1.0, 0.0]);
        let theta = ThetaSpec::new().with(1, 3, 1.0).unwrap().with(2, 4, 1.0).unwrap();
        assert!(matches!(
            criterion_classical(&a, &b, &theta),
            Err(Error::MissingTheta { i: 1, j: 4 })
        ));
        let a = lot("a", &[0.5, 0.5], &[1.0, 1.0]);
        let b = lot("b", &[0.3, 0.7], &[1.0, 1.0]);
        assert_eq!(criterion_classical(&a, &b, &ThetaSpec::new()).unwrap(), 0.0);
    }

    #[test]
    fn ellsberg_f1_risk_term() {
        let du = 2.5;
        let c12 = -0.6;
        let f1 = Lottery::from_parts("f1", &["100", "0"], &[1.0 / 3.0, 2.0 / 3.0], &[du, 0.0]).unwrap();
        let theta = ThetaSpec::uniform(4, 0.0).unwrap().with(1, 2, c12).unwrap();
        let br = criterion_nonclassical(&f1, &f1, &theta).unwrap();
        assert!((br.risk_a - 2f64.sqrt() / 3.0 * c12 * du).abs() < 1e-15);
        assert_eq!(br.risk_b, 0.0);
    }

    #[test]
    fn sure_lotteries_have_no_risk_terms() {
        let a = lot("a", &[1.0], &[2.0]);
        let theta = ThetaSpec::uniform(2, 0.5).unwrap();
        let br = criterion_nonclassical(&a, &a, &theta).unwrap();
        assert_eq!((br.risk_a, br.risk_b), (0.0, 0.0));
    }

    #[test]
    fn breakdown_total_is_sum() {
        let a = lot("a", &[0.2, 0.5, 0.3], &[4.0, 1.0, -2.0]);
        let b = lot("b", &[0.6, 0.1, 0.3], &[4.0, 1.0, -2.0]);
        let theta = ThetaSpec::uniform(6, 0.3).unwrap().with(2, 5, -0.9).unwrap();
        let br = criterion_nonclassical(&a, &b, &theta).unwrap();
        assert!((br.total - (br.risk_a + br.risk_b + br.comparison)).abs() < 1e-12);
    }

    #[test]
    fn trace_path_agrees_on_fixed_case() {
        let a = lot("a", &[0.2, 0.5, 0.3], &[4.0, 1.0, -2.0]);
        let b = lot("b", &[0.6, 0.1, 0.3], &[4.0, 1.0, -2.0]);
        let theta = ThetaSpec::uniform(6, 0.3)
            .unwrap()
            .with(2, 5, -0.9)
            .unwrap()
            .with(1, 2, 0.8)
            .unwrap();
        let closed = criterion_nonclassical(&a, &b, &theta).unwrap().total;
        let traced = criterion_via_trace(&a, &b, &theta, StateKind::Nonclassical).unwrap();
        assert!((closed - traced).abs() < 1e-12);
        let closed = criterion_classical(&a, &b, &theta).unwrap();
        let traced = criterion_via_trace(&a, &b, &theta, StateKind::Classical).unwrap();
        assert!((closed - traced).abs() < 1e-12);
    }

    #[test]
    fn decide_examples() {
        assert_eq!(decide(0.5, Direction::Forward, 1e-12).verdict, Verdict::First);
        assert_eq!(decide(0.5, Direction::Reversed, 1e-12).verdict, Verdict::Second);
        assert_eq!(decide(0.0, Direction::Forward, 1e-12).verdict, Verdict::Indifferent);
        assert_eq!(decide(-0.5, Direction::Reversed, 0.0).margin, 0.5);
    }

    #[test]
    fn theta_json_uses_one_based_pairs() {
        let spec: ThetaSpec =
            serde_json::from_str(r#"{"pairs":[{"i":4,"j":1,"cos":1},{"i":3,"j":4,"cos":-0.25}]}"#).unwrap();
        assert_eq!(spec.get(1, 4), Some(1.0));
        assert_eq!(spec.get(4, 3), Some(-0.25));
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"pairs":[{"i":1,"j":4,"cos":1.0},{"i":3,"j":4,"cos":-0.25}]}"#);

        for bad in [
            r#"{"pairs":[{"i":0,"j":1,"cos":1}]}"#,
            r#"{"pairs":[{"i":2,"j":2,"cos":1}]}"#,
            r#"{"pairs":[{"i":1,"j":2,"cos":1.5}]}"#,
            r#"{"pairs":[{"i":1,"j":2,"cos":1},{"i":2,"j":1,"cos":0}]}"#,
        ] {
            assert!(serde_json::from_str::<ThetaSpec>(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn theta_outside_basis_rejected() {
        let a = lot("a", &[0.5, 0.5], &[1.0, 0.0]);
        let theta = ThetaSpec::uniform(4, 1.0).unwrap().with(1, 7, 0.0).unwrap();
        assert!(matches!(
            criterion_classical(&a, &a, &theta),
            Err(Error::InvalidTheta(_))
        ));
    }
}
