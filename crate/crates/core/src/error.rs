use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("invalid vertex map: {0}")]
    MapInvalid(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("graph is distance exceptional")]
    DistanceExceptional,
    #[error("eigendecomposition failed")]
    EigenFailure,
    #[error("certificate violation: {0}")]
    CertificateViolation(String),
    #[error("value must be positive")]
    NonPositive,
    #[error("placement length mismatch: expected {expected}, got {got}")]
    PlacementLengthMismatch { expected: usize, got: usize },
    #[error("order {0} too large for built-in enumeration (max 7); scan a graph6 file instead")]
    OrderTooLarge(usize),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Disconnected => "Disconnected",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::MalformedGraph6 { .. } => "MalformedGraph6",
            Error::MapInvalid(_) => "MapInvalid",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSymmetric => "NotSymmetric",
            Error::DistanceExceptional => "DistanceExceptional",
            Error::EigenFailure => "EigenFailure",
            Error::CertificateViolation(_) => "CertificateViolation",
            Error::NonPositive => "NonPositive",
            Error::PlacementLengthMismatch { .. } => "PlacementLengthMismatch",
            Error::OrderTooLarge(_) => "OrderTooLarge",
            Error::ParseRational(_) => "ParseRational",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
