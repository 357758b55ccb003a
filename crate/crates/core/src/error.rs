use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operand dimensions do not line up.
    #[error("shape mismatch in {op}: expected {expected}, found {found}")]
    Shape {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    /// Bad character in a Pauli string or GF(4)/binary row. `position` is 1-based.
    #[error("invalid character {found:?} at position {position}")]
    Parse { position: usize, found: char },

    /// Input matrices violate a structural requirement (rank, orthogonality, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("replay failed: {0}")]
    Replay(String),

    #[error("random code generation failed: {0}")]
    Generation(String),
}
