use thiserror::Error;

/// Errors raised by the quaternion algebra, the beamformer solvers and the
/// experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix in {context}: pivot modulus {pivot:.3e} below threshold {threshold:.3e}")]
    Singular {
        context: String,
        pivot: f64,
        threshold: f64,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("signal model: {0}")]
    OutOfModel(String),

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("config parse error: {0}")]
    Parse(String),

    #[error("run failed: {0}")]
    Run(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short stable identifier used in machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::Singular { .. } => "singular",
            Error::Contract(_) => "contract",
            Error::OutOfModel(_) => "out_of_model",
            Error::Eigen(_) => "eigen",
            Error::Config(_) => "config",
            Error::Parse(_) => "parse",
            Error::Run(_) => "run",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
