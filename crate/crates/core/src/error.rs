use crate::scalar::ScalarParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("degree {degree} exceeds the cache cap {cap}")]
    DegreeOverCap { degree: usize, cap: usize },

    #[error("degree {degree} needs {words} words, over the budget of {budget}")]
    BudgetExceeded { degree: usize, words: u128, budget: u64 },

    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("element is not normal at degree {degree}")]
    NotNormal { degree: usize },

    #[error("twisting automorphism is not unique at degree {degree}: element is not regular there")]
    NonUnique { degree: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed bicharacter: {0}")]
    MalformedBicharacter(String),

    #[error("color Lie algebra is not generated in degree one: {0}")]
    NotGeneratedInDegreeOne(String),

    #[error("sequence of {len} points is too short; need at least {needed}")]
    TooShort { len: usize, needed: usize },

    #[error("fiber of projective dimension {dim} exceeds the configured bound {bound}")]
    FiberBudget { dim: usize, bound: usize },

    #[error("sampling failed: {0}")]
    SamplingFailure(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
