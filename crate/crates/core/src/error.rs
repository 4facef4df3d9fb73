use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has a term with negative exponent {0}")]
    NegativeExponent(i64),
    #[error("polynomial has a term with odd exponent {0}")]
    OddExponent(i64),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant term is not a unit monomial")]
    NonUnitConstantTerm,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("pyramidal index k = {0} is below -1")]
    KOutOfRange(i64),
    #[error("coefficient of y^{n} has degree {degree} > {n}")]
    DegreeTooHigh { n: usize, degree: i64 },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("field modulus {0} exceeds the supported bound {1}")]
    ModulusTooLarge(u32, u32),
    #[error("{k} punctures do not fit in a field with {q} elements")]
    TooManyPunctures { q: u32, k: u32 },
    #[error("enumeration of {q}^{n} items exceeds the budget of {budget}")]
    TooLarge { q: u32, n: u32, budget: u64 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
