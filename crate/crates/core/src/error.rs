use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse {
        message: String,
        token: String,
        position: usize,
    },
    #[error("generator `{0}` is not declared")]
    UndeclaredGenerator(String),
    #[error("generator `{0}` is not one of x, y")]
    ForeignGenerator(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("zero does not divide a nonzero element")]
    ZeroDivisor,
    #[error("relator index {index} out of range (source has {count} relators)")]
    RelatorIndex { index: usize, count: usize },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("certificates have incompatible sources `{0}` and `{1}`")]
    IncompatibleSources(String, String),
    #[error("presentations have different generator lists")]
    GeneratorMismatch,
    #[error("invalid Stafford instance: {0}")]
    InvalidInstance(&'static str),
    #[error("element is not in V")]
    NotInV,
    #[error("witness construction failed: {0}")]
    Witness(String),
    #[error("exponent not invertible: {0}")]
    NotInvertible(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(message: impl Into<String>, token: impl Into<String>, position: usize) -> Self {
        Error::Parse {
            message: message.into(),
            token: token.into(),
            position,
        }
    }
}
