use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid semigroup generators ({p}, {q}): {reason}")]
    InvalidGenerators { p: i64, q: i64, reason: &'static str },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("no decision possible at this truncation: {0}")]
    UndecidableAtTruncation(String),

    #[error("no holomorphic power found up to n = {bound}")]
    NoPowerWithinBound { bound: i64 },

    #[error("invalid germ: {0}")]
    InvalidGerm(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no witness site for n = {n}: the curve only has sites up to {max_k}; enlarge max-k beyond n")]
    NoWitnessInRange { n: i64, max_k: i64 },

    #[error("tail at site {site} is not in the ideal m^{power}: {reason}")]
    TailOutsideIdeal { site: i64, power: i64, reason: String },

    #[error("product of two essential factors exp(1/z) is not representable")]
    UnsupportedEssentialProduct,

    #[error("sum of a plain and an essential object is not representable")]
    UnsupportedMixedSum,
}
