use std::fmt;

/// A malformed textual input. `token` is the offending piece of text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub token: String,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(token: impl Into<String>, message: impl Into<String>) -> ParseError {
        ParseError { token: token.into(), message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at '{}'", self.message, self.token)
    }
}

impl std::error::Error for ParseError {}

/// Domain errors raised by library operations.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid beta-set {entries:?}: entries must be strictly decreasing")]
    InvalidBetaSet { entries: Vec<u64> },
    #[error("invalid partition {parts:?}: parts must be positive and weakly decreasing")]
    InvalidPartition { parts: Vec<u64> },
    #[error("symbol {symbol} is not in {family}")]
    NotInFamily { symbol: String, family: String },
    #[error("symbol {symbol} lies in no {world} family")]
    NotInWorld { symbol: String, world: String },
    #[error("parameter {n} exceeds the enumeration ceiling {max}")]
    BoundExceeded { n: u64, max: u64 },
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("Θ-rank {k} is not attainable in {family}")]
    Inadmissible { family: String, k: u64 },
    #[error("tower {tower} does not apply to {family}")]
    IncompatibleTower { tower: String, family: String },
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("operation not defined for {0}")]
    Unsupported(String),
    #[error("no partner for {symbol} at {target}: {reason}")]
    NoPartner { symbol: String, target: String, reason: String },
    #[error("ambiguous partner for {symbol}: candidates {candidates:?}")]
    Ambiguous { symbol: String, candidates: Vec<String> },
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("witness {witness} has Θ-rank {got}, expected {expected}")]
    WitnessMismatch { witness: String, expected: u64, got: u64 },
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidBetaSet { .. } => "invalid-beta-set",
            Error::InvalidPartition { .. } => "invalid-partition",
            Error::NotInFamily { .. } => "not-in-family",
            Error::NotInWorld { .. } => "not-in-world",
            Error::BoundExceeded { .. } => "bound-exceeded",
            Error::OutOfRange { .. } => "out-of-range",
            Error::Inadmissible { .. } => "inadmissible",
            Error::IncompatibleTower { .. } => "incompatible-tower",
            Error::InvalidDatum(_) => "invalid-datum",
            Error::Unsupported(_) => "unsupported",
            Error::NoPartner { .. } => "no-partner",
            Error::Ambiguous { .. } => "ambiguous",
            Error::Calibration(_) => "calibration",
            Error::WitnessMismatch { .. } => "witness-mismatch",
            Error::UnknownSuite(_) => "unknown-suite",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
