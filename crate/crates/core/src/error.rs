use thiserror::Error;

/// Errors raised by the library. Every variant names the module it comes from
/// through [`Error::module`], which the CLI uses when reporting failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vectors have different lengths ({a} and {b})")]
    LengthMismatch { a: usize, b: usize },
    #[error("exponent vectors must have at least one entry")]
    EmptyInput,
    #[error("entry {index} of the {vector} vector is negative ({value})")]
    NegativeEntry {
        vector: char,
        index: usize,
        value: i64,
    },
    #[error("entry {index} of the {vector} vector exceeds the supported maximum {max} ({value})")]
    EntryTooLarge {
        vector: char,
        index: usize,
        value: i64,
        max: u64,
    },
    #[error("variable {0} has exponent 0 in both ideals")]
    ZeroPair(usize),
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("exponent pair is degenerate: consecutive ratios coincide")]
    DegenerateInput,
    #[error("bound does not apply: {0}")]
    NotApplicable(&'static str),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("fan-linear function takes a non-integral value at ({r}, {s})")]
    NonIntegralValue { r: u64, s: u64 },
    #[error("fan-linear function has {found} cone pieces, the fan has {expected} cones")]
    PieceCount { expected: usize, found: usize },
    #[error("fan-linear coefficient {0} is negative")]
    NegativeCoefficient(String),
    #[error("box bound {bound} is smaller than the required {required}")]
    BoxTooSmall { bound: u64, required: u64 },
}

impl Error {
    /// Name of the module that raises this error.
    pub fn module(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. }
            | Error::EmptyInput
            | Error::NegativeEntry { .. }
            | Error::EntryTooLarge { .. }
            | Error::ZeroPair(_) => "exponents",
            Error::ZeroVector => "cones",
            Error::VectorLength { .. } | Error::DegenerateInput => "diophantine",
            Error::NotApplicable(_) | Error::NotCoprime { .. } => "algebra",
            Error::NonIntegralValue { .. }
            | Error::PieceCount { .. }
            | Error::NegativeCoefficient(_) => "fanalg",
            Error::BoxTooSmall { .. } => "oracle",
        }
    }

    /// Short variant name, stable across releases.
    pub fn name(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::EmptyInput => "EmptyInput",
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::EntryTooLarge { .. } => "EntryTooLarge",
            Error::ZeroPair(_) => "ZeroPair",
            Error::ZeroVector => "ZeroVector",
            Error::VectorLength { .. } => "LengthMismatch",
            Error::DegenerateInput => "DegenerateInput",
            Error::NotApplicable(_) => "NotApplicable",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::NonIntegralValue { .. } => "NonIntegralValue",
            Error::PieceCount { .. } => "PieceCount",
            Error::NegativeCoefficient(_) => "NegativeCoefficient",
            Error::BoxTooSmall { .. } => "BoxTooSmall",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
