//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("evaluation at the origin of a kernel singular there")]
    SingularOrigin,

    #[error("kernel moment integral diverges: {0}")]
    DivergentMoment(String),

    #[error("quadrature did not converge: estimate {estimate}, error {error}, requested {requested}")]
    QuadratureNonConvergence {
        estimate: f64,
        error: f64,
        requested: f64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point {0:?} is outside the domain")]
    OutsideDomain(Vec<f64>),

    #[error("point {0:?} is not on the domain boundary")]
    NotOnBoundary(Vec<f64>),

    #[error("domain boundary is not twice differentiable at {0:?}")]
    BoundaryNotSmooth(Vec<f64>),

    #[error("no analytic cone is available for this domain kind at {0:?}")]
    NoAnalyticCone(Vec<f64>),

    #[error("rejection envelope violated: density value {value} exceeds bound {bound}")]
    EnvelopeViolated { value: f64, bound: f64 },

    #[error("sampling requires a bounded proposal region; domain is unbounded")]
    UnboundedProposal,

    #[error("first-moment cancellation fails at the evaluation point; the operator value diverges as the bandwidth shrinks")]
    DivergentRegime,

    #[error("degenerate statistic: {0}")]
    DegenerateStatistic(String),

    #[error("configuration invalid:\n{}", .0.join("\n"))]
    ConfigInvalid(Vec<String>),

    #[error("config syntax error: {0}")]
    ConfigSyntax(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
