use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Validation and I/O failures. Validation variants name the invariant
/// that was violated and the measured residual.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("state not normalized: | ‖ψ‖² − 1 | = {residual:e}")]
    NotNormalized { residual: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("observable not Hermitian: max |M − M†| = {residual:e}")]
    NotHermitian { residual: f64 },

    #[error("gate not unitary: max |U·U† − I| = {residual:e}")]
    NotUnitary { residual: f64 },

    #[error("observable is degenerate (eigenvalue gap {gap:e})")]
    Degenerate { gap: f64 },

    #[error("observable eigenvalues ({plus}, {minus}) are not ±1")]
    NotDichotomic { plus: f64, minus: f64 },

    #[error("basis not orthonormal: |⟨plus|minus⟩| = {overlap:e}")]
    NotOrthonormal { overlap: f64 },

    #[error("state violates the balanced constraint: |⟨σ_z⟩| = {residual:e}")]
    Unbalanced { residual: f64 },

    #[error("empty phase grid")]
    EmptyGrid,

    #[error("shot count must be at least 1")]
    ZeroShots,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
