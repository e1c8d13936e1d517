use thiserror::Error;

/// Every fallible operation in this crate reports one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A padding target has fewer 0s or fewer 1s than the string already holds.
    #[error("content too small: {0}")]
    ContentTooSmall(String),

    /// Side labels whose lengths must agree do not.
    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    /// No triangle-with-corner-cuts realizes the requested side lengths.
    #[error("infeasible shape: {0}")]
    InfeasibleShape(String),

    /// The requested rotation is not defined for this piece or filling.
    #[error("unrotatable: {0}")]
    Unrotatable(String),

    /// Strings that must share content do not.
    #[error("content mismatch: {0}")]
    ContentMismatch(String),

    /// A completion corner admits no identity filling.
    #[error("infeasible corner: {0}")]
    InfeasibleCorner(String),

    /// A triangle filling disagrees with the forced corner fillings.
    #[error("corner mismatch: {0}")]
    CornerMismatch(String),

    /// The operation is undefined for the given piece set.
    #[error("unsupported piece set: {0}")]
    UnsupportedPieceSet(String),

    /// Verification parameters violate the statement's hypotheses.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
