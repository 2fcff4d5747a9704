use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("polynomial is not primitive (content {0})")]
    NotPrimitive(String),
    #[error("modulus {0} is not a prime below 2^63")]
    BadModulus(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("randomized splitting did not succeed after {0} attempts")]
    SplittingFailed(usize),
    #[error("could not factor {0} within the iteration budget")]
    FactorizationFailed(String),
}
