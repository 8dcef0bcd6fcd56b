use thiserror::Error;

/// Errors produced by the library. Messages name the offending quantity so the
/// CLI can surface them unchanged.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("eigenvalue iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid lottery `{label}`: {reason}")]
    InvalidLottery { label: String, reason: String },

    #[error("lotteries `{a}` and `{b}` do not share an outcome list: {reason}")]
    UnmatchedLotteries { a: String, b: String, reason: String },

    #[error("unknown outcome `{0}`")]
    UnknownOutcome(String),

    #[error("invalid theta spec: {0}")]
    InvalidTheta(String),

    #[error("missing cos(theta) for basis pair ({i}, {j}) whose utilities differ")]
    MissingTheta { i: usize, j: usize },

    #[error("phase spec breaks self-adjointness at ({k}, {l})")]
    NotSelfAdjoint { k: usize, l: usize },

    #[error("operation requires a non-classical comparison state")]
    NotNonclassical,

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("imaginary part of tr(D rho) is {0:e}")]
    ComplexEvaluation(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name: name.to_string(),
        reason: reason.into(),
    }
}
