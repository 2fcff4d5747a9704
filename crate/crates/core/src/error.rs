use eigencong_kernels::KernelError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("polynomial is not monic irreducible over Q: {0}")]
    NotIrreducible(String),
    #[error("degree {got} exceeds configured bound {cap}")]
    DegreeBoundExceeded { got: usize, cap: usize },
    #[error("element is not an algebraic integer: {0}")]
    NotAlgebraicInteger(String),
    #[error("lattice has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("lattice is not contained in the larger order")]
    NotSublattice,
    #[error("order is not maximal")]
    NotMaximalOrder,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("multiplicative closure did not stabilize after {0} rounds")]
    ClosureUnstable(usize),
    #[error("unsupported weight {0}")]
    WeightUnsupported(i64),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("no Hecke operator combination generates the algebra")]
    GeneratorFailure,
    #[error("coefficient field does not embed: {0}")]
    EmbeddingFailure(String),
    #[error("proposition violated: {0}")]
    PropositionViolated(String),
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("witness failed verification: {0}")]
    WitnessVerificationFailed(String),
    #[error("field is not Galois")]
    NotGalois,
    #[error("corollary violated: {0}")]
    CorollaryViolated(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True for the signals that would contradict a proved statement.
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            Error::PropositionViolated(_) | Error::WitnessVerificationFailed(_) | Error::CorollaryViolated(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
