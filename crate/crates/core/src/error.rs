use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input or a precondition the caller violated.
    Input,
    /// A configured enumeration budget was exhausted.
    Budget,
    /// An internal invariant failed; always a bug in this crate.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("the two vertices must differ")]
    EqualVertices,
    #[error("budget exceeded: {what} passed the cap of {cap}")]
    BudgetExceeded { what: &'static str, cap: usize },
    #[error("half-spaces live on different graphs ({left} vs {right} vertices)")]
    GraphMismatch { left: usize, right: usize },
    #[error("half-space is not a member of the pocset")]
    NotMember,
    #[error("operation requires a non-trivial half-space")]
    TrivialInput,
    #[error("pocset validation failed: {0}")]
    InvalidPocset(String),
    #[error("members {0} and {1} are comparable, not an antichain")]
    NotAntichain(usize, usize),
    #[error("upward closure chooses both sides of member {0}")]
    Inconsistent(usize),
    #[error("no side of member {0} is implied by the antichain")]
    Incomplete(usize),
    #[error("not a valid orientation: {0}")]
    InvalidOrientation(String),
    #[error("orientations belong to different pocsets")]
    PocsetMismatch,
    #[error("graph is not median: {0}")]
    NotMedianGraph(String),
    #[error("not a convex co-convex half-space")]
    NotHalfSpace,
    #[error("set is not convex")]
    NotConvex,
    #[error("sets are not disjoint")]
    NotDisjoint,
    #[error("sets {0} and {1} do not intersect")]
    PairwiseEmpty(usize, usize),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("inner radius {inner} must be below truncation radius {outer}")]
    RadiusOrder { inner: usize, outer: usize },
    #[error("no component of the set reaches the frontier")]
    NoRay,
    #[error("quasi-map domain mismatch: {0}")]
    MapDomain(String),
    #[error("colour class {colour} is not nested: {detail}")]
    NestednessViolation { colour: usize, detail: String },
    #[error("roundtrip failure: {0}")]
    RoundtripFailure(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::BudgetExceeded { .. } => ErrorClass::Budget,
            Error::NestednessViolation { .. } | Error::RoundtripFailure(_) | Error::Invariant(_) => {
                ErrorClass::Internal
            }
            _ => ErrorClass::Input,
        }
    }
}
