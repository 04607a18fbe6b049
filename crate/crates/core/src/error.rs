use thiserror::Error;

/// Errors raised by the algebra routines and the input parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent {0} exceeds the limit of {max}", max = crate::monomial::MAX_EXPONENT)]
    ExponentTooLarge(u64),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("the ideal does not have finite colength")]
    InfiniteColength,

    #[error("candidate components do not intersect to the source ideal")]
    InvalidCandidates,

    #[error("monomial is not in the staircase")]
    NotInStaircase,

    #[error("the staircase is empty")]
    EmptyStaircase,

    #[error("not an order ideal: {0}")]
    NotOrderIdeal(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,

    #[error("degree {0} exceeds the factorization limit of {max}", max = crate::univariate::MAX_FACTOR_DEGREE)]
    DegreeTooLarge(usize),

    #[error("field of size {0} exceeds the limit of {max}", max = crate::univariate::MAX_FIELD_SIZE)]
    FieldTooLarge(u64),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("constant polynomial has no hypersurface index")]
    UnitInput,

    #[error("the group is trivial")]
    TrivialGroup,

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for errors caused by a size cap rather than malformed input.
    pub fn is_size_cap(&self) -> bool {
        matches!(
            self,
            Error::TooLarge(_)
                | Error::DegreeTooLarge(_)
                | Error::FieldTooLarge(_)
                | Error::ExponentTooLarge(_)
        )
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
