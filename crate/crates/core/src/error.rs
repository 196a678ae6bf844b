use thiserror::Error;

/// Errors raised by the exact geometry routines.
///
/// Degenerate inputs are reported as errors rather than as a negative
/// predicate, so callers can tell "the condition fails" apart from "the
/// hypotheses of the condition do not hold".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("rank deficiency: {0}")]
    Rank(String),

    #[error("projection undefined: {0}")]
    ProjectionUndefined(String),

    #[error("line is contained in the hyperplane: {0}")]
    Containment(String),

    #[error("degenerate configuration: {0}")]
    Degeneracy(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("term ceiling of {ceiling} exceeded ({reached} live terms)")]
    Resource { ceiling: usize, reached: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },

    #[error("index {index} out of range (bound {bound})")]
    Index { index: usize, bound: usize },

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors meaning the input violates a geometric hypothesis
    /// (degenerate or non-general configuration), as opposed to malformed
    /// input or exhausted resources.
    pub fn is_hypothesis(&self) -> bool {
        matches!(
            self,
            Error::Rank(_)
                | Error::ProjectionUndefined(_)
                | Error::Containment(_)
                | Error::Degeneracy(_)
                | Error::Hypothesis(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
