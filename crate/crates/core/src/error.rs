use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent overflow: value does not fit in 63 bits")]
    ExponentOverflow,
    #[error("degree {degree} exceeds the dense cap {cap}; use the lacunary path")]
    DegreeCapExceeded { degree: u64, cap: u64 },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("line parameters must satisfy a != 0 and b != 0")]
    DegenerateLine,
    #[error("empty interval: lower endpoint must be below the upper endpoint")]
    EmptyInterval,
    #[error("invalid trinomial modulus: n = {0} must be odd and at least 3")]
    InvalidModulus(u64),
    #[error("prime {0} divides a coefficient denominator")]
    BadPrime(u64),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("malformed rational literal {0:?}")]
    BadRational(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
