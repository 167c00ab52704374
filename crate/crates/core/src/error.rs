use thiserror::Error;

/// Everything that can go wrong while building or manipulating flag data.
///
/// The split matters to callers: everything except [`Error::Internal`] is a
/// problem with the input, while `Internal` means an invariant of the
/// algorithm itself was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid flag shape: {0}")]
    InvalidShape(String),
    #[error("invalid coset: {0}")]
    InvalidCoset(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("position {pos} out of range 1..={n}")]
    OutOfRange { pos: usize, n: usize },
    #[error("invalid rim hook (q={q}, t={t}): need 1 <= q < t <= {max}")]
    InvalidRimHook { q: usize, t: usize, max: usize },
    #[error("invalid block index {index}: need 1 <= j <= {k}")]
    InvalidBlock { index: usize, k: usize },
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("invalid Maya diagram: {0}")]
    InvalidDiagram(String),
    #[error("degree length {got} does not match k = {expected}")]
    DegreeLength { got: usize, expected: usize },
    #[error("shape has {count} cosets, above the oracle limit of {limit}")]
    SizeLimit { count: u128, limit: u128 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
