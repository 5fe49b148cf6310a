use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("exponent overflow: exponents are capped at 65535 per variable")]
    ExponentOverflow,

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit reached: {0}")]
    ResourceLimit(String),

    #[error("singular matrix after {0} draws")]
    SingularDraw(usize),

    #[error("genericity not certified: {0}")]
    GenericityNotCertified(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: i64, got: i64 },

    #[error("inconsistent results: {0}")]
    Inconsistent(String),

    #[error("gin shape: {0}")]
    Shape(String),

    #[error("not contained: {0}")]
    NotContained(String),

    #[error("search exhausted: {0}")]
    Exhausted(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("bound violated: {0}")]
    BoundViolated(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Errors that signal a mathematical inconsistency (as opposed to bad input).
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::GenericityNotCertified(_)
                | Error::Inconsistent(_)
                | Error::BoundViolated(_)
                | Error::Shape(_)
        )
    }
}
