use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants fall into three broad groups which the command-line driver maps
/// to distinct exit codes: malformed input, unsupported (non-Dynkin) input,
/// and internal invariant breaches. See [`Error::category`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("quiver has a directed cycle through vertex {0}")]
    Cycle(String),

    #[error("automorphism is not admissible: arrow {arrow} joins {tail} and {head}, which lie in the same orbit")]
    NotAdmissible { arrow: String, tail: String, head: String },

    #[error("permutation is not compatible with the quiver: {0}")]
    Incompatible(String),

    #[error("quiver is not of Dynkin type: {0}")]
    NotDynkin(String),

    #[error("unsupported Coxeter data: {0}")]
    Unsupported(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("representation could not be identified: {0}")]
    Identification(String),

    #[error("tilt precondition violated: {0}")]
    TiltPrecondition(String),

    #[error("central charge is not F-invariant")]
    NotInvariant,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Input,
    Unsupported,
    Internal,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. }
            | Error::InvalidQuiver(_)
            | Error::Cycle(_)
            | Error::NotAdmissible { .. }
            | Error::Incompatible(_)
            | Error::ShapeMismatch(_)
            | Error::TiltPrecondition(_)
            | Error::NotInvariant => ErrorCategory::Input,
            Error::NotDynkin(_) | Error::Unsupported(_) => ErrorCategory::Unsupported,
            Error::Identification(_) | Error::Invariant(_) => ErrorCategory::Internal,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
