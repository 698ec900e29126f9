use thiserror::Error;

/// Errors produced by graph construction, centrality kernels, curve
/// computation, and the random-graph generators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("score at index {index} is {value}, expected a finite nonnegative value")]
    InvalidScore { index: usize, value: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("no convergence after {iterations} iterations (last residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("divergent walk sum: alpha {alpha} times spectral radius {spectral_radius} is not below 1")]
    Divergence { alpha: f64, spectral_radius: f64 },

    #[error("degenerate spectrum: adjacency matrix has spectral radius 0")]
    DegenerateSpectrum,

    #[error("graphon kernel returned {value}, outside [0, 1]")]
    KernelRange { value: f64 },

    #[error("graph generation failed: {0}")]
    Generation(String),

    #[error("replicate {index} failed: {source}")]
    Replicate {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
