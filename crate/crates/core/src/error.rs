use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not a root of unity")]
    NotRootOfUnity,
    #[error(transparent)]
    Parse(#[from] crate::cyclo::ParseError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("word is not written in pure generators: {0}")]
    NotPureWord(String),
    #[error("conjugating scale must be nonzero")]
    ZeroScale,
    #[error("lambda_1 = 1; rotate the punctures first")]
    LinearPartFirstTrivial,
    #[error("invalid linear part: {0}")]
    InvalidLinearPart(String),
    #[error("invalid translation part: {0}")]
    InvalidTranslation(String),
    #[error("linear part does not give a finite group")]
    NotFiniteCase,
    #[error("bound {0} exceeded")]
    BoundExceeded(usize),
    #[error("theta_1 must be nonzero")]
    ThetaOneZero,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("integration failed: {0}")]
    IntegrationFailure(String),
    #[error("base point or path too close to a pole")]
    PoleTooClose,
    #[error("ambiguous tolerance match in numeric closure")]
    AmbiguousMatch,
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
