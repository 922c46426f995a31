use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot combine elements of Q(sqrt {0}) and Q(sqrt {1})")]
    MixedRadicand(u64, u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("gaussian binomial [{n} choose {k}] is out of range")]
    BinomialRange { n: i64, k: i64 },
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid flag type: {0}")]
    InvalidFlagType(String),
    #[error("cartan matrices are indexed differently")]
    IndexMismatch,
    #[error("elements belong to different generator sets")]
    GeneratorSetMismatch,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` is imaginary; serre elements need a real generator")]
    ImaginaryGenerator(String),
    #[error("vertex `{0}` is not imaginary")]
    NotImaginary(String),
    #[error("multiplicity must be positive, got {0}")]
    NonPositive(i64),
    #[error("instance too large: {size} points exceeds the budget of {budget}")]
    InstanceTooLarge { size: u128, budget: u128 },
    #[error("vertex `{0}` is not a sink of the loop-free part")]
    NotSink(String),
    #[error("functions live on different representation spaces")]
    SpaceMismatch,
    #[error("matrices not ≈-equivalent: {0}")]
    NotEquivalent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
