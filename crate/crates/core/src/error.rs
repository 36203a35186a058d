use thiserror::Error;

/// Errors raised by mesh construction, recovery and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("interval ({alpha}, {beta}) is empty or not finite")]
    InvalidInterval { alpha: f64, beta: f64 },

    #[error("mesh has {n} elements, at least {min} are required")]
    TooCoarse { n: usize, min: usize },

    #[error("grading amplitude {0} outside [0, 1/pi)")]
    InvalidDelta(f64),

    #[error("perturbation fraction {0} outside [0, 0.5)")]
    InvalidRho(f64),

    #[error("nodes are not strictly increasing at index {0}")]
    NotIncreasing(usize),

    #[error("index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("coordinate {x} outside [{alpha}, {beta}]")]
    OutOfDomain { x: f64, alpha: f64, beta: f64 },

    #[error("function has no exact derivative")]
    NoExactDerivative,

    #[error("zero pivot in tridiagonal solve at row {0}")]
    SingularSystem(usize),

    #[error("mesh with {n} elements exceeds the dense limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("no Gauss-Legendre rule with {0} points")]
    UnsupportedOrder(usize),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("sample {row} at x = {x} does not match mesh node {node}")]
    NodeMismatch { row: usize, x: f64, node: f64 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable code used on the CLI's diagnostic stream.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInterval { .. } => "invalid-interval",
            Error::TooCoarse { .. } => "too-coarse",
            Error::InvalidDelta(_) => "invalid-delta",
            Error::InvalidRho(_) => "invalid-rho",
            Error::NotIncreasing(_) => "not-increasing",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::OutOfDomain { .. } => "out-of-domain",
            Error::NoExactDerivative => "no-exact-derivative",
            Error::SingularSystem(_) => "singular-system",
            Error::TooLarge { .. } => "too-large",
            Error::UnsupportedOrder(_) => "unsupported-order",
            Error::Parse { .. } => "parse-error",
            Error::NodeMismatch { .. } => "node-mismatch",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::Io(_) => "io",
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
