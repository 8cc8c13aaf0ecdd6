use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed type spec `{spec}`: {reason}")]
    BadTypeSpec { spec: String, reason: String },

    #[error("enumeration cap {cap} exceeded")]
    CapExceeded { cap: usize },

    #[error("{0} is not a root of the system")]
    NotARoot(String),

    #[error("elements belong to different root systems")]
    MixedRootSystems,

    #[error("Levi subset {lower} is not contained in {upper}")]
    LeviNotContained { lower: String, upper: String },

    #[error("invalid Levi subset: {0}")]
    BadLevi(String),

    #[error("not a diagram involution: {0}")]
    BadInvolution(String),

    #[error("not a twisted involution: {0}")]
    NotTwisted(String),

    #[error("vertex invariant violated: {0}")]
    InvalidVertex(String),

    #[error("relative coroot depends on the choice of lift: {0}")]
    LiftCorootMismatch(String),

    #[error("not a simple relative root of the given Levi")]
    NotSimpleRelative,

    #[error("element does not normalize the Levi minimally: {0}")]
    NotInRelativeWeylSet(String),

    #[error("vertex is not maximal")]
    NotMaximal,

    #[error("{0} is not an ascent of the vertex")]
    NotAnAscent(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
