use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid stencil specification: {0}")]
    InvalidStencil(String),

    #[error("{scheme} does not support {what}")]
    Unsupported { scheme: &'static str, what: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("Gram system is degenerate: no singular value above the truncation threshold")]
    DegenerateGram,

    #[error("all singular values fall below the truncation threshold")]
    AllSingular,

    #[error("SVD did not converge")]
    SvdNoConvergence,

    #[error("symmetric eigensolver did not converge")]
    EigenNoConvergence,

    #[error("matrix is singular to working precision")]
    Singular,

    #[error("iterative solver did not converge after {iterations} iterations (relative residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("iterative solver broke down at iteration {iteration} (vanishing inner product)")]
    Breakdown { iteration: usize },

    #[error("stencil of half-width {half_width} overruns a bounded grid with no exterior values")]
    MissingExterior { half_width: usize },

    #[error("solution blew up at t = {time}")]
    BlowUp { time: f64 },

    #[error("unknown experiment '{0}'")]
    UnknownExperiment(String),

    #[error("unknown scheme '{0}'")]
    UnknownScheme(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("malformed record: {0}")]
    Parse(String),
}

impl Error {
    /// Whether the error reports a solver that failed to reach its tolerance.
    pub fn is_convergence_failure(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::Breakdown { .. }
                | Error::SvdNoConvergence
                | Error::EigenNoConvergence
        )
    }
}
