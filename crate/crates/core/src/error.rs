use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDenominator,

    #[error("series with zero constant term has no reciprocal")]
    NonInvertibleSeries,

    #[error("{what} is {value}, which exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u128,
        bound: u128,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("poset has no {0}")]
    MissingBound(&'static str),

    #[error("cover {0} -> {1} carries no label")]
    UnlabeledCover(usize, usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn bound(what: &'static str, value: impl Into<u128>, bound: impl Into<u128>) -> Self {
        Error::BoundExceeded {
            what,
            value: value.into(),
            bound: bound.into(),
        }
    }
}
