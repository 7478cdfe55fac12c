use alloc::string::String;

use crate::ExactRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-integral value where an integer was required: {context}")]
    NotIntegral { context: String },

    #[error("hypergeometric series does not terminate: no upper parameter is a non-positive integer")]
    NonTerminating,

    #[error("unsupported derivative order {0} (only 1 and 2)")]
    UnsupportedDerivativeOrder(i64),

    #[error("unknown recurrence name `{0}`")]
    UnknownRecurrence(String),

    #[error("leading coefficient a_0(n) vanishes at n = {n}")]
    VanishingLeadingCoefficient { n: i64 },

    #[error("index {n} lies below the validity range (valid from n = {valid_from})")]
    BelowValidRange { n: i64, valid_from: i64 },

    #[error("oracle does not cover index {n}")]
    InsufficientOracle { n: i64 },

    #[error("characteristic polynomial is degenerate: a_0 has lower degree than the recurrence")]
    DegenerateCharacteristic,

    #[error("{lambda} is not a root of the characteristic polynomial")]
    NotACharacteristicRoot { lambda: ExactRational },

    #[error("unsupported asymptotic class: {0}")]
    UnsupportedAsymptotics(String),

    #[error("dominant characteristic root is not unique: {0}")]
    DominantRootTie(String),

    #[error("division by zero: {0}")]
    ZeroDivision(String),

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("empty interval: lower endpoint must be below upper endpoint")]
    EmptyInterval,

    #[error("degenerate distribution: variance is zero at n = {n}")]
    ZeroVariance { n: i64 },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
