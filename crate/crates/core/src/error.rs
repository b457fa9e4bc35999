use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("p must be prime (got {0}); supported base fields are Q and F_p")]
    NotPrime(u64),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("unsupported field/dimension regime: {0}")]
    UnsupportedRegime(String),

    #[error("associativity fails at basis triple ({i}, {j}, {k})")]
    Associativity { i: usize, j: usize, k: usize },

    #[error("unit law fails at basis element {index}")]
    UnitFailure { index: usize },

    #[error("invalid Cayley table: {0}")]
    InvalidGroup(String),

    #[error("Hopf axiom '{axiom}' fails at {witness}")]
    HopfAxiom { axiom: String, witness: String },

    #[error("action check '{kind}' fails at h = e{h}, a = e{a}")]
    Action { kind: String, h: usize, a: usize },

    #[error("factorization condition '{condition}' fails at {witness}")]
    Factorization { condition: String, witness: String },

    #[error("multiplication algebra M(A) is not contained in the operator algebra")]
    MissingMultiplicationAlgebra,

    #[error("subspace is not stable under generator {generator}")]
    NotStable { generator: usize },

    #[error("ideal must be proper")]
    ImproperIdeal,

    #[error("extension is not B-semiprime (nilpotent core has dimension {core_dim})")]
    NotSemiprime { core_dim: usize },

    #[error("standing assumption fails: annihilator of {ideal} is not B-stable")]
    StandingAssumption { ideal: String },

    #[error("assembly kernel is not stable under generator {generator} (kernel vector {vector})")]
    KernelNotStable { generator: usize, vector: String },

    #[error("idempotent splitting incomplete for block of dimension {block_dim}")]
    SplittingIncomplete { block_dim: usize },

    #[error("missing section: {0}")]
    Dependency(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Regime errors are limitations of the available algorithms, not
    /// defects of the input.
    pub fn is_regime(&self) -> bool {
        matches!(self, Error::UnsupportedRegime(_))
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn dim(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected,
            found,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
