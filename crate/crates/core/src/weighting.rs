//! Subjective probabilities and the probability weighting function they induce.

use crate::error::{param, Result};

const SUM_TOL: f64 = 1e-12;

/// A probability distribution over a finite outcome list.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(param("p", "probability vector is empty"));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite() || !(0.0..=1.0).contains(v)) {
            return Err(param(&format!("p[{k}]"), format!("{} is not in [0, 1]", values[k])));
        }
        let total: f64 = values.iter().sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(param("p", format!("sums to {total}, expected 1")));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Normalized square roots of a probability vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SubjectiveProbabilityVector(Vec<f64>);

impl SubjectiveProbabilityVector {
    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

/// `P~_i = sqrt(P_i) / sum_k sqrt(P_k)`.
pub fn subjective_probs(p: &ProbabilityVector) -> Result<SubjectiveProbabilityVector> {
    let roots: Vec<f64> = p.values().iter().map(|v| v.sqrt()).collect();
    let total: f64 = roots.iter().sum();
    if total <= 0.0 {
        return Err(param("p", "all probabilities are zero"));
    }
    Ok(SubjectiveProbabilityVector(
        roots.into_iter().map(|r| r / total).collect(),
    ))
}

/// `xi = sum_{k != i} sqrt(P_k / (1 - P_i))`, which lies in `[1, sqrt(m - 1)]`
/// for `m` outcomes. Undefined when `P_i = 1`.
pub fn xi(p: &ProbabilityVector, i: usize) -> Result<f64> {
    let values = p.values();
    let pi = *values
        .get(i)
        .ok_or_else(|| param("i", format!("index {i} out of range for {} outcomes", values.len())))?;
    let rest = 1.0 - pi;
    if rest <= 0.0 {
        return Err(param("i", format!("P[{i}] = 1 leaves no remaining outcomes")));
    }
    Ok(values
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, &pk)| (pk / rest).sqrt())
        .sum())
}

/// `w_xi(x) = sqrt(x) / (sqrt(x) + xi sqrt(1 - x))` on `[0, 1]`.
pub fn w_xi(x: f64, xi: f64) -> f64 {
    let a = x.sqrt();
    let b = xi * (1.0 - x).sqrt();
    a / (a + b)
}

/// Two-parameter weighting `delta x^l / (delta x^l + (1 - x)^l)`.
pub fn goldstein_einhorn(x: f64, lambda_c: f64, delta: f64) -> f64 {
    let a = delta * x.powf(lambda_c);
    a / (a + (1.0 - x).powf(lambda_c))
}
