use crate::euclidean::EuclideanHubSolution;
use crate::geometry::EuclideanPoint;
use crate::multihub::TwoHubSolution;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid coordinate: {0}")]
    InvalidCoordinate(String),

    #[error("midpoint of antipodal points is not unique")]
    AntipodalMidpoint,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no sites given")]
    EmptySites,

    #[error("total weight must be positive")]
    ZeroTotalWeight,

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("gradient undefined: point coincides with a site")]
    GradientAtSite,

    #[error("site index {index} out of range (len {len})")]
    SiteIndexOutOfRange { index: usize, len: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("solver did not converge within {iterations} iterations")]
    DidNotConverge {
        iterations: usize,
        /// Best iterate seen before giving up.
        best: Box<EuclideanHubSolution>,
    },

    #[error("two-hub search did not converge within the evaluation budget")]
    TwoHubDidNotConverge { best: Box<TwoHubSolution<EuclideanPoint>> },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("invalid quadrature: {0}")]
    InvalidQuadrature(String),

    #[error("hub location out of range: {0}")]
    HubOutOfRange(String),

    #[error("line {line}: {message}")]
    ParseLine { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
