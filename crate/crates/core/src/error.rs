use thiserror::Error;

/// Every failure mode of the toolkit. Codes returned by [`Error::code`] are
/// stable and appear in CLI diagnostics.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("singular linear change")]
    Singular,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("genericity check failed: {0}")]
    Genericity(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a Hilbert polynomial: {0}")]
    NotHilbertPolynomial(String),
    #[error("not a Hilbert function: {0}")]
    NotHilbertFunction(String),
    #[error("missing invariant: {0}")]
    IncompleteInput(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("unit ideal")]
    UnitIdeal,
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("non-homogeneous generator: offending term {0}")]
    NonHomogeneous(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "E_DIMENSION",
            Error::RingMismatch(_) => "E_RING",
            Error::InvalidField(_) => "E_FIELD",
            Error::InvalidOrder(_) => "E_ORDER",
            Error::ExponentOverflow => "E_OVERFLOW",
            Error::Singular => "E_SINGULAR",
            Error::Budget(_) => "E_BUDGET",
            Error::Genericity(_) => "E_GENERICITY",
            Error::Hypothesis(_) => "E_HYPOTHESIS",
            Error::InvalidInput(_) => "E_INPUT",
            Error::NotHilbertPolynomial(_) => "E_NOT_HILBERT_POLY",
            Error::NotHilbertFunction(_) => "E_NOT_HILBERT_FN",
            Error::IncompleteInput(_) => "E_INCOMPLETE",
            Error::SizeCap(_) => "E_SIZE_CAP",
            Error::UnitIdeal => "E_UNIT_IDEAL",
            Error::Syntax { .. } => "E_SYNTAX",
            Error::NonHomogeneous(_) => "E_NONHOMOGENEOUS",
            Error::Io(_) => "E_IO",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
