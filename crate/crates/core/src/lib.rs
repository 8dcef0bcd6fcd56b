//! A quantum-like model of choice between lotteries.
//!
//! A decision maker's awareness of the events of two lotteries is a density
//! operator on the event basis (the *comparison state*); a self-adjoint
//! operator `D` built from utility gaps turns it into a real criterion
//! `tr(D rho)`. Mixed comparison states reproduce expected-utility comparison,
//! superposed ones add risk-evaluation terms and square-root probability
//! weights.
//!
//! - [`qcore`]: dense complex matrices, density operators, Hermitian eigenvalues.
//! - [`states`]: lotteries and classical / non-classical comparison states.
//! - [`evaluation`]: the operator `D`, trace evaluation and closed-form criteria.
//! - [`weighting`]: subjective probabilities and the weighting function `w_xi`.
//! - [`scenarios`]: Ellsberg and Machina criteria, phase diagrams, cash equivalents.
//! - [`cli`]: the command implementations used by the `qselect` binary.

pub mod cli;
pub mod error;
pub mod evaluation;
pub mod qcore;
pub mod scenarios;
pub mod sigfig;
pub mod states;
pub mod weighting;

pub use error::{Error, Result};
pub use evaluation::{
    build_d, criterion_classical, criterion_nonclassical, decide, evaluate_trace, CriterionBreakdown, Direction,
    PhiSpec, Preference, ThetaSpec, Verdict,
};
pub use qcore::{Complex64, DensityMatrix, SquareMatrix, StateVector};
pub use states::{
    classical_state, decompose_nonclassical, nonclassical_state, ComparisonBasis, ComparisonState, Entry, Lottery,
    PhaseSpec, Side, StateKind,
};
