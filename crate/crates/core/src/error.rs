//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A token in a braid-word or group-word input is not a nonzero integer.
    #[error("malformed token {token:?}: expected a nonzero integer")]
    MalformedToken { token: String },

    /// A generator index does not fit the ambient strand count.
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    /// A braid word needs at least one strand.
    #[error("strand count must be at least 1")]
    InvalidStrandCount,

    /// Cross-word operation on words over different braid groups.
    #[error("strand counts differ: {left} vs {right}")]
    GroupMismatch { left: usize, right: usize },

    /// Image list does not describe a bijection.
    #[error("images do not form a permutation of 1..=n")]
    NotAPermutation,

    /// Handle reduction exceeded its step budget.
    #[error("handle reduction exceeded the step budget of {budget}")]
    BudgetExceeded { budget: usize },

    /// A group-word letter references a generator the presentation lacks.
    #[error("generator {id} out of range for {generators} generators")]
    GeneratorOutOfRange { id: usize, generators: usize },

    /// The subword test requires a nonempty relator.
    #[error("relator is empty")]
    EmptyRelator,

    /// Vector/matrix dimensions disagree.
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    /// Intersection-form input is not symmetric (or not square).
    #[error("matrix is not a symmetric square matrix")]
    NotSymmetric,

    /// Enumeration and obstruction operations require a negative definite form.
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,

    /// Class enumeration is only defined for negative squares.
    #[error("square {square} is not negative")]
    NonNegativeSquare { square: i64 },

    /// The adjunction bound applies to nontrivial classes only.
    #[error("homology class is zero")]
    ZeroClass,

    /// Genus arguments must be nonnegative.
    #[error("genus {genus} is negative")]
    NegativeGenus { genus: i64 },

    /// Lattice assembly from a handle diagram that fails the framing rule.
    #[error("diagram is not Stein: {reason}")]
    NotStein { reason: String },

    /// Integer overflow in an exact computation on i64 input.
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    /// Structured input file did not match its schema.
    #[error("invalid input file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
