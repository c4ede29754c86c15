use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rational function does not reduce to a polynomial: {0}")]
    NotPolynomial(String),
    #[error("known entries are inconsistent with the moment-matrix kernel")]
    Inconsistent,
    #[error("underdetermined: need at least {needed} known entries, got {given}")]
    Underdetermined { needed: usize, given: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("fixed point `{id}` has a zero weight")]
    ZeroWeight { id: String },
    #[error("fixed point `{id}` has {found} weights, expected {expected}")]
    WrongWeightCount {
        id: String,
        expected: usize,
        found: usize,
    },
    #[error("duplicate fixed point id `{id}`")]
    DuplicateId { id: String },
    #[error("fixed point `{id}` carries no moment value")]
    MissingMomentValue { id: String },
    #[error("fixed point `{id}` has moment value 0, so 0 is not a regular value")]
    ZeroIsCritical { id: String },

    #[error("fixed point `{id}` has a weight other than +1/-1")]
    NotSemifree { id: String },
    #[error("search space has {size} configurations, above the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("class is not in the module spanned by the canonical basis: {0}")]
    NotInModule(String),
    #[error("no integer solution with sum {sum} over {count} values")]
    NoIntegerSolution { sum: i64, count: usize },
    #[error("fixed point `{id}` has {found} generators restricting to x, expected {expected}")]
    WrongCount {
        id: String,
        expected: usize,
        found: usize,
    },
    #[error("subset {subset} is hit by more than one fixed point: {ids:?}")]
    NotInjective { subset: String, ids: Vec<String> },
    #[error("subset {subset} is not hit by any fixed point")]
    NotSurjective { subset: String },
    #[error("fixed-point counts {found:?} differ from the binomial row {expected:?}")]
    CountMismatch { expected: Vec<u64>, found: Vec<u64> },
    #[error("restriction table violates a forced constraint: {0}")]
    TableViolation(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-range input, as opposed
    /// to data that is well formed but fails a mathematical constraint.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidArgument(_)
                | Error::ZeroWeight { .. }
                | Error::WrongWeightCount { .. }
                | Error::DuplicateId { .. }
                | Error::MissingMomentValue { .. }
                | Error::ZeroIsCritical { .. }
                | Error::SearchSpaceTooLarge { .. }
                | Error::Underdetermined { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
