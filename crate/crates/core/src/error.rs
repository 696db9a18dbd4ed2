use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ValuationOfZero,
    #[error("square class of zero undefined")]
    SquareClassOfZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a polynomial of degree at least 1")]
    ConstantPolynomial,
    #[error("polynomial vanishes at 0; strip the power of x first")]
    VanishesAtZero,
    #[error("not squarefree")]
    NotSquarefree,
    #[error("leading coefficient is divisible by {0}")]
    NotMonicAt(u64),
    #[error("degree {degree} exceeds budget {budget}")]
    BudgetExceeded { degree: u64, budget: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}
