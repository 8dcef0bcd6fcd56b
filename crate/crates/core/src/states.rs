//! Lotteries and the comparison states built from a pair of them.
//!
//! For lots A and B over the same `n` outcomes, events `(A, x_i)` sit at basis
//! positions `0..n` and `(B, x_i)` at `n..2n`, both in the outcome order of A.

use std::collections::HashSet;
use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{outer_product, Complex64, DensityMatrix, SquareMatrix, StateVector};

/// Tolerance on the probability sum of a lottery.
pub const PROBABILITY_SUM_TOL: f64 = 1e-12;

/// One `(outcome, probability, utility)` row of a lottery.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub outcome: String,
    pub p: f64,
    pub u: f64,
}

impl Entry {
    pub fn new(outcome: impl Into<String>, p: f64, u: f64) -> Self {
        Self {
            outcome: outcome.into(),
            p,
            u,
        }
    }
}

#[derive(Deserialize)]
struct RawLottery {
    label: String,
    entries: Vec<Entry>,
}

/// A labelled discrete lottery. Validated on construction and on deserialization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawLottery")]
pub struct Lottery {
    label: String,
    entries: Vec<Entry>,
}

impl TryFrom<RawLottery> for Lottery {
    type Error = Error;
    fn try_from(raw: RawLottery) -> Result<Self> {
        Lottery::new(raw.label, raw.entries)
    }
}

impl Lottery {
    pub fn new(label: impl Into<String>, entries: Vec<Entry>) -> Result<Self> {
        let label = label.into();
        let bad = |reason: String| Error::InvalidLottery {
            label: label.clone(),
            reason,
        };
        if entries.is_empty() {
            return Err(bad("entries: at least one outcome is required".into()));
        }
        let mut seen = HashSet::new();
        for (k, e) in entries.iter().enumerate() {
            if !seen.insert(e.outcome.as_str()) {
                return Err(bad(format!("entries[{k}].outcome: duplicate `{}`", e.outcome)));
            }
            if !e.p.is_finite() || !(0.0..=1.0).contains(&e.p) {
                return Err(bad(format!("entries[{k}].p: {} is not in [0, 1]", e.p)));
            }
            if !e.u.is_finite() {
                return Err(bad(format!("entries[{k}].u: {} is not finite", e.u)));
            }
        }
        let total: f64 = entries.iter().map(|e| e.p).sum();
        if (total - 1.0).abs() > PROBABILITY_SUM_TOL {
            return Err(bad(format!("entries[].p: probabilities sum to {total}")));
        }
        Ok(Self { label, entries })
    }

    /// Convenience constructor from parallel slices.
    pub fn from_parts(label: impl Into<String>, outcomes: &[&str], p: &[f64], u: &[f64]) -> Result<Self> {
        let label = label.into();
        if outcomes.len() != p.len() || p.len() != u.len() {
            return Err(Error::InvalidLottery {
                label,
                reason: "outcomes, probabilities and utilities differ in length".into(),
            });
        }
        let entries = outcomes
            .iter()
            .zip(p)
            .zip(u)
            .map(|((o, &p), &u)| Entry::new(*o, p, u))
            .collect();
        Self::new(label, entries)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.p).collect()
    }

    pub fn utilities(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.u).collect()
    }

    pub fn expected_utility(&self) -> f64 {
        self.entries.iter().map(|e| e.p * e.u).sum()
    }

    pub fn entry(&self, outcome: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.outcome == outcome)
    }
}

/// Which lot of the pair an event belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// Event ordering for a lottery pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonBasis {
    label_a: String,
    label_b: String,
    outcomes: Vec<String>,
    utilities: Vec<f64>,
}

impl ComparisonBasis {
    /// Builds the basis for `a` vs `b`. Both lotteries must list the same
    /// outcomes with the same utilities; the order of `a` is used for both sides.
    pub fn for_pair(a: &Lottery, b: &Lottery) -> Result<Self> {
        let unmatched = |reason: String| Error::UnmatchedLotteries {
            a: a.label.clone(),
            b: b.label.clone(),
            reason,
        };
        if a.len() != b.len() {
            return Err(unmatched(format!("outcome counts differ ({} vs {})", a.len(), b.len())));
        }
        for ea in &a.entries {
            let eb = b
                .entry(&ea.outcome)
                .ok_or_else(|| unmatched(format!("outcome `{}` missing from `{}`", ea.outcome, b.label)))?;
            let scale = ea.u.abs().max(eb.u.abs()).max(1.0);
            if (ea.u - eb.u).abs() > 1e-12 * scale {
                return Err(unmatched(format!(
                    "outcome `{}` has utility {} vs {}",
                    ea.outcome, ea.u, eb.u
                )));
            }
        }
        Ok(Self {
            label_a: a.label.clone(),
            label_b: b.label.clone(),
            outcomes: a.entries.iter().map(|e| e.outcome.clone()).collect(),
            utilities: a.utilities(),
        })
    }

    /// Number of outcomes per lot.
    pub fn n(&self) -> usize {
        self.outcomes.len()
    }

    /// Hilbert-space dimension `2n`.
    pub fn dim(&self) -> usize {
        2 * self.n()
    }

    /// 0-based basis position of `(side, outcome)`.
    pub fn position(&self, side: Side, outcome: &str) -> Option<usize> {
        let i = self.outcomes.iter().position(|o| o == outcome)?;
        Some(match side {
            Side::A => i,
            Side::B => self.n() + i,
        })
    }

    /// The `(side, outcome)` event at a 0-based position.
    pub fn event(&self, position: usize) -> Option<(Side, &str)> {
        let n = self.n();
        if position < n {
            Some((Side::A, &self.outcomes[position]))
        } else if position < 2 * n {
            Some((Side::B, &self.outcomes[position - n]))
        } else {
            None
        }
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn label(&self, side: Side) -> &str {
        match side {
            Side::A => &self.label_a,
            Side::B => &self.label_b,
        }
    }

    /// Utility of every basis event, length `2n`.
    pub fn event_utilities(&self) -> Vec<f64> {
        self.utilities.iter().chain(&self.utilities).copied().collect()
    }
}

/// Per-event phase angles in radians, indexed by basis position.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpec {
    angles: Vec<f64>,
}

impl PhaseSpec {
    pub fn zeros(dim: usize) -> Self {
        Self { angles: vec![0.0; dim] }
    }

    pub fn new(angles: Vec<f64>) -> Result<Self> {
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite("phase spec".into()));
        }
        Ok(Self { angles })
    }

    pub fn dim(&self) -> usize {
        self.angles.len()
    }

    pub fn angle(&self, position: usize) -> f64 {
        self.angles[position]
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    fn check(&self, basis: &ComparisonBasis) -> Result<()> {
        if self.dim() != basis.dim() {
            return Err(Error::DimensionMismatch(format!(
                "phase spec has {} angles, basis has {} events",
                self.dim(),
                basis.dim()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Classical,
    Nonclassical,
}

/// A comparison state `rho` on the event basis of a lottery pair.
#[derive(Debug, Clone)]
pub struct ComparisonState {
    basis: ComparisonBasis,
    rho: DensityMatrix,
    kind: StateKind,
    lots: Option<(StateVector, StateVector)>,
}

impl ComparisonState {
    pub fn basis(&self) -> &ComparisonBasis {
        &self.basis
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }

    pub fn kind(&self) -> StateKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    /// `|psi_A>` and `|psi_B>` of a non-classical state.
    pub fn lot_vectors(&self) -> Option<(&StateVector, &StateVector)> {
        self.lots.as_ref().map(|(a, b)| (a, b))
    }
}

/// `sum_i sqrt(P_i) e^{i theta_i} |i>` on one side of the basis.
pub fn superposed_lot_vector(
    lot: &Lottery,
    phases: &PhaseSpec,
    basis: &ComparisonBasis,
    side: Side,
) -> Result<StateVector> {
    phases.check(basis)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); basis.dim()];
    for e in &lot.entries {
        let k = basis
            .position(side, &e.outcome)
            .ok_or_else(|| Error::UnknownOutcome(e.outcome.clone()))?;
        amps[k] = Complex64::from_polar(e.p.sqrt(), phases.angle(k));
    }
    StateVector::new(amps)
}

/// The mixed state `sum_ij P_i Q_j |psi_ij><psi_ij|` with
/// `|psi_ij> = (e^{i theta_i}|i> + e^{i theta_jbar}|jbar>) / sqrt 2`.
pub fn classical_state(a: &Lottery, b: &Lottery, phases: &PhaseSpec) -> Result<ComparisonState> {
    let basis = ComparisonBasis::for_pair(a, b)?;
    phases.check(&basis)?;
    let n = basis.n();
    let dim = basis.dim();
    let mut rho = SquareMatrix::zeros(dim);
    for ea in &a.entries {
        let i = basis.position(Side::A, &ea.outcome).expect("basis built from a");
        for eb in &b.entries {
            let weight = ea.p * eb.p;
            if weight == 0.0 {
                continue;
            }
            let j = basis.position(Side::B, &eb.outcome).expect("basis checked b");
            debug_assert!(j >= n);
            let mut amps = vec![Complex64::new(0.0, 0.0); dim];
            amps[i] = Complex64::from_polar(FRAC_1_SQRT_2, phases.angle(i));
            amps[j] = Complex64::from_polar(FRAC_1_SQRT_2, phases.angle(j));
            let psi = StateVector::new(amps)?;
            rho = &rho + &outer_product(&psi, &psi)?.scale(Complex64::new(weight, 0.0));
        }
    }
    Ok(ComparisonState {
        basis,
        rho: DensityMatrix::new(rho)?,
        kind: StateKind::Classical,
        lots: None,
    })
}

/// The superposed state `|Psi><Psi|`, `|Psi> = (|psi_A> + |psi_B>) / sqrt 2`.
pub fn nonclassical_state(a: &Lottery, b: &Lottery, phases: &PhaseSpec) -> Result<ComparisonState> {
    let basis = ComparisonBasis::for_pair(a, b)?;
    let psi_a = superposed_lot_vector(a, phases, &basis, Side::A)?;
    let psi_b = superposed_lot_vector(b, phases, &basis, Side::B)?;
    let psi = StateVector::normalized(
        psi_a
            .amplitudes()
            .iter()
            .zip(psi_b.amplitudes())
            .map(|(x, y)| x + y)
            .collect(),
    )?;
    Ok(ComparisonState {
        basis,
        rho: DensityMatrix::pure(&psi)?,
        kind: StateKind::Nonclassical,
        lots: Some((psi_a, psi_b)),
    })
}

/// `rho = sigma_A/2 + sigma_B/2 + C_{A<->B}/2` for a non-classical state.
#[derive(Debug, Clone)]
pub struct NonclassicalParts {
    pub sigma_a_half: SquareMatrix,
    pub sigma_b_half: SquareMatrix,
    pub cross_half: SquareMatrix,
}

impl NonclassicalParts {
    pub fn sum(&self) -> SquareMatrix {
        &(&self.sigma_a_half + &self.sigma_b_half) + &self.cross_half
    }
}

pub fn decompose_nonclassical(s: &ComparisonState) -> Result<NonclassicalParts> {
    let (psi_a, psi_b) = s.lot_vectors().ok_or(Error::NotNonclassical)?;
    let half = Complex64::new(0.5, 0.0);
    let ab = outer_product(psi_a, psi_b)?;
    let ba = outer_product(psi_b, psi_a)?;
    Ok(NonclassicalParts {
        sigma_a_half: outer_product(psi_a, psi_a)?.scale(half),
        sigma_b_half: outer_product(psi_b, psi_b)?.scale(half),
        cross_half: (&ab + &ba).scale(half),
    })
}
