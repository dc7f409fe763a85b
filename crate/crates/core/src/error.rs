use thiserror::Error;

/// Errors raised by the library. Numeric payloads are reported as `f64`
/// regardless of the scalar type in use.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported matrix dimension {0} (expected 2 or 4)")]
    InvalidDim(usize),
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("matrix is not diagonal (off-diagonal magnitude {offdiag:e})")]
    NotDiagonal { offdiag: f64 },
    #[error("the identity label cannot belong to a Hamiltonian span")]
    IdentityInSpan,
    #[error("span is empty")]
    EmptySpan,
    #[error("label {0} appears twice")]
    DuplicateLabel(String),
    #[error("length mismatch: {labels} labels vs {coeffs} coefficients")]
    LengthMismatch { labels: usize, coeffs: usize },
    #[error("non-finite value encountered at t = {time}")]
    NonFinite { time: f64 },
    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("Hamiltonian is not trace-free (|Tr H| = {0:e})")]
    NotTraceless(f64),
    #[error("Hamiltonian has components outside its declared span (residual {0:e})")]
    OutsideSpan(f64),
    #[error("constraint is not trace-orthogonal to the Hamiltonian (|Tr HF| = {0:e})")]
    NotOrthogonal(f64),
    #[error("constraint must be real symmetric and traceless (residual {0:e})")]
    InvalidConstraint(f64),
    #[error("eigenframe does not diagonalize the supplied Hamiltonian (residual {0:e})")]
    FrameMismatch(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid kinematics: {0}")]
    Kinematics(String),
}

pub type Result<T> = std::result::Result<T, Error>;
