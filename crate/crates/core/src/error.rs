use thiserror::Error;

/// Errors raised by the verification core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("matrix is not Hermitian (symmetry residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("eigensolver failed: {0}")]
    Eigensolver(String),
    #[error("Pochhammer factor vanishes at index {index}")]
    ZeroFactor { index: usize },
    #[error("J-form is not positive: eigenvalue {min_eigenvalue:e}")]
    NotPositive {
        min_eigenvalue: f64,
        /// Eigenvector in subspace coordinates as (re, im) pairs.
        eigenvector: Vec<(f64, f64)>,
    },
    #[error("subspace is not invariant (residual {residual:e})")]
    InvarianceViolation { residual: f64 },
    #[error("J-relation violated (residual {residual:e})")]
    RelationViolation { residual: f64 },
    #[error("induced operator is not self-adjoint (residual {residual:e})")]
    NonSelfadjoint { residual: f64 },
    #[error("induced operator is not contractive (norm {norm})")]
    NonContractive { norm: f64 },
    #[error("generator spectra disagree between sample times ({disagreement:e})")]
    InconsistentSamples { disagreement: f64 },
    #[error("no semigroup sample available at t = {t}")]
    MissingSample { t: f64 },
    #[error("permutation is not an involution")]
    NonInvolutive,
    #[error("denominator d - b t vanishes at t = {node}")]
    SingularDenominator { node: f64 },
    #[error("Moebius image leaves the unit disc (|w| = {modulus})")]
    DomainEscape { modulus: f64 },
    #[error("truncated operator is ill conditioned (eigenvalue {min_eigenvalue:e})")]
    IllConditioned { min_eigenvalue: f64 },
    #[error("grid truncation: boundary mass {boundary:e} above threshold")]
    TruncationWarning { boundary: f64 },
    #[error("invalid rank parameter {rank} for {family}")]
    InvalidRank { family: String, rank: i64 },
    #[error("subspace not invariant under the sampled action (residual {residual:e})")]
    NotInvariant { residual: f64 },
    #[error("probe has mass at y <= 0 (value {value:e})")]
    SupportViolation { value: f64 },
    #[error("truncation too small to resolve a negative direction (min eigenvalue {min_eigenvalue:e})")]
    Unresolved { min_eigenvalue: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
