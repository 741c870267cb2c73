use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not Hermitian (max |a_ij - conj(a_ji)| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("singular scale: {0} vanishes")]
    SingularScale(&'static str),

    #[error("no dissipation (gamma = 0): steady state is not unique")]
    NoDissipation,

    #[error("integration unstable at t = {t}: trace deviation {deviation:e}")]
    StepUnstable { t: f64, deviation: f64 },

    #[error("state is not X-form (off-block leakage {leakage:e})")]
    NotXForm { leakage: f64 },

    #[error("density matrix has eigenvalue {value:e} below the clamp window")]
    NegativeEigenvalue { value: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("unknown column: {0}")]
    UnknownColumn(String),

    #[error("empty series: nothing to plot")]
    EmptySeries,
}

pub type Result<T> = std::result::Result<T, Error>;
