use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the operator engine.
///
/// Several variants signal a violated algebraic identity rather than bad
/// input; they carry the rendered operands so a failure can be reproduced.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: {0}")]
    NonExactDivision(String),
    #[error("coefficient not divisible by (1 - t)^{order}: {value}")]
    NotDivisible { order: u32, value: String },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("cell ({row}, {col}) lies outside the diagram of {partition}")]
    CellOutsideDiagram {
        partition: String,
        row: usize,
        col: usize,
    },
    #[error("partition {partition} has more than {nvars} parts")]
    LengthExceedsVars { partition: String, nvars: usize },
    #[error("negative q-exponent required: {0}")]
    NegativeExponent(String),
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("singular transition matrix: {0}")]
    SingularTransition(String),
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("specialization q = t required: {0}")]
    SpecializationRequired(String),
    #[error("non-integral entry: {0}")]
    NonIntegralEntry(String),
    #[error("verification failed: {lhs} != {rhs}")]
    VerificationFailed { lhs: String, rhs: String },
    #[error("identity failed; witness {0}")]
    IdentityFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by the request itself rather than by a failed
    /// computation.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::IndexOutOfRange(_)
                | Error::OutOfRange(_)
                | Error::CellOutsideDiagram { .. }
                | Error::LengthExceedsVars { .. }
                | Error::NegativeExponent(_)
                | Error::NotSymmetric(_)
                | Error::SpecializationRequired(_)
                | Error::Parse(_)
                | Error::TooManyVariables(_)
        )
    }
}
