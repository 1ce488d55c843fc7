use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("denominator is divisible by the modulus")]
    DenominatorNotCoprime,
    #[error("element is zero to the available precision")]
    ZeroToPrecision,
    #[error("zero input where a nonzero polynomial is required")]
    ZeroInput,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("precision too low: {0}")]
    PrecisionTooLow(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("modulus is not irreducible")]
    WrongModulus,
    #[error("bracket of {0} is not invertible in the target ring")]
    BracketNotInvertible(String),
    #[error("precision could not be certified: {0}")]
    PrecisionNotCertified(String),
    #[error("coefficient {0} is not in A")]
    NonIntegralCoefficient(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
