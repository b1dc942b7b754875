use thiserror::Error;

/// Failures raised by the exact constructions and the certificate checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {n} exceeds the supported maximum of {max}")]
    NTooLarge { n: usize, max: usize },

    #[error("n = {n} is outside the supported range {min}..={max}")]
    NOutOfRange { n: usize, min: usize, max: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("Gram matrix is singular (the basis is linearly dependent)")]
    SingularGram,

    #[error("subspace is not invariant under {action}")]
    NotInvariant { action: String },

    #[error("affine map does not match at vertex {vertex}")]
    AffineMismatch { vertex: String },

    #[error("fiber mismatch: {0}")]
    FiberMismatch(String),

    #[error("value mismatch at coset of {coset}: {detail}")]
    ValueMismatch { coset: String, detail: String },

    #[error("facet enumeration limited to dimension <= {max_dim} and <= {max_points} points (got {dim}, {points})")]
    DimTooLarge {
        dim: usize,
        points: usize,
        max_dim: usize,
        max_points: usize,
    },

    #[error("vertex set is not full-dimensional (affine rank {rank} in dimension {dim})")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("claim violated by facet {facet}: {detail}")]
    ClaimViolation { facet: String, detail: String },

    #[error("pulled-back inequality {inequality} is violated at vertex {vertex}")]
    NotValid { inequality: String, vertex: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid index pair ({i}, {j}) for n = {n}")]
    InvalidPair { n: usize, i: usize, j: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable upper-case identifier, e.g. `N_TOO_LARGE`.
    pub fn code(&self) -> &'static str {
        match self {
            Self::NTooLarge { .. } => "N_TOO_LARGE",
            Self::NOutOfRange { .. } => "N_OUT_OF_RANGE",
            Self::SizeMismatch { .. } => "SIZE_MISMATCH",
            Self::SingularGram => "SINGULAR_GRAM",
            Self::NotInvariant { .. } => "NOT_INVARIANT",
            Self::AffineMismatch { .. } => "AFFINE_MISMATCH",
            Self::FiberMismatch(_) => "FIBER_MISMATCH",
            Self::ValueMismatch { .. } => "VALUE_MISMATCH",
            Self::DimTooLarge { .. } => "DIM_TOO_LARGE",
            Self::NotFullDimensional { .. } => "NOT_FULL_DIMENSIONAL",
            Self::ClaimViolation { .. } => "CLAIM_VIOLATION",
            Self::NotValid { .. } => "NOT_VALID",
            Self::InvalidPermutation(_) => "INVALID_PERMUTATION",
            Self::InvalidPair { .. } => "INVALID_PAIR",
            Self::Parse(_) => "PARSE",
        }
    }

    /// Whether the error comes from a bad request rather than a failed check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Self::NTooLarge { .. }
                | Self::NOutOfRange { .. }
                | Self::InvalidPermutation(_)
                | Self::InvalidPair { .. }
                | Self::Parse(_)
                | Self::DimTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
