use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("linear change of coordinates is singular")]
    SingularChange,

    #[error("variable index {index} out of range for a ring with {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("polynomial {0} is not homogeneous")]
    NotHomogeneous(String),

    #[error("ideal is not strongly stable: {generator} fails the exchange x{i} <- x{j}")]
    NotStronglyStable { generator: String, i: usize, j: usize },

    #[error("hyperplane {index} is not central: {form}")]
    NonCentral { index: usize, form: String },

    #[error("hyperplanes {first} and {second} coincide")]
    RepeatedHyperplane { first: usize, second: usize },

    #[error("generic initial ideal not certified after {trials} trials; candidates: {}", .candidates.join(" | "))]
    GinFailure { trials: usize, candidates: Vec<String> },

    #[error("arrangement generation failed: {0}")]
    Generation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
