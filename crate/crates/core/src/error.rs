use thiserror::Error;

/// Errors raised by register, gate, circuit and file-format operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid register shape: {0}")]
    InvalidShape(String),

    #[error("index {index} out of range for dimension {dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },

    #[error("digit {digit} on wire {wire} exceeds radix {radix}")]
    DigitOutOfRange { wire: usize, digit: usize, radix: usize },

    #[error("expected {expected} digits, got {got}")]
    WordLength { expected: usize, got: usize },

    #[error("not a bijection: {0}")]
    NotBijective(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operator is not unitary (deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("state is not normalized (norm² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("unknown gate `{0}`")]
    UnknownGate(String),

    #[error("radix mismatch on wire {wire}: gate expects {expected}, register has {found}")]
    RadixMismatch { wire: usize, expected: usize, found: usize },

    #[error("wire {0} used twice in one step")]
    DuplicateWire(usize),

    #[error("wire {wire} out of range for {wires}-wire register")]
    WireOutOfRange { wire: usize, wires: usize },

    #[error("gate `{0}` has no classical permutation")]
    NonClassical(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
