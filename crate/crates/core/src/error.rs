use std::fmt;

/// Errors reported by the engine.
///
/// `InternalMismatch` and `NonUniqueMax` indicate a violated internal
/// consistency guarantee and should never occur on valid input; they are
/// assertions surfaced as errors rather than panics so the CLI can exit
/// with a distinct status code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The (family, rank) pair is not a supported simple type, e.g. (D, 3).
    UnsupportedType { family: char, rank: usize },
    /// Coefficient vector length differs from the rank.
    DimensionMismatch { expected: usize, got: usize },
    /// Node index outside 1..=rank.
    NodeOutOfRange { node: usize, rank: usize },
    /// Crossing set must be nonempty.
    EmptyCrossSet,
    /// The word does not satisfy the length-two Hasse conditions for this grading.
    InvalidWord { word: (usize, usize) },
    /// Cascade index outside 1..=orbit_count.
    CascadeIndexOutOfRange { index: usize, count: usize },
    /// The component is Yamaguchi-rigid (non-positive homogeneity); no
    /// prolongation profile is defined for it.
    RigidComponent { word: (usize, usize) },
    /// Cascade termination: no top-slot root orthogonal to the previous ones.
    NoOrthogonalRoot,
    /// More than one maximal candidate root survived; internal consistency failure.
    NonUniqueMax,
    /// Two independent computations of the same quantity disagree.
    InternalMismatch(String),
    /// Negative chart exceeds the configured size limit.
    ChartTooLarge { dim: usize, limit: usize },
    /// Jet truncation order must be at least 1.
    TruncationTooLow { order: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedType { family, rank } => {
                write!(f, "unsupported simple type {family}{rank}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "coefficient vector has length {got}, expected {expected}")
            }
            Error::NodeOutOfRange { node, rank } => {
                write!(f, "node {node} out of range 1..={rank}")
            }
            Error::EmptyCrossSet => write!(f, "crossing set must be nonempty"),
            Error::InvalidWord { word: (j, k) } => {
                write!(f, "({j},{k}) is not a length-two Hasse word for this grading")
            }
            Error::CascadeIndexOutOfRange { index, count } => {
                write!(f, "cascade index {index} out of range 1..={count}")
            }
            Error::RigidComponent { word: (j, k) } => {
                write!(f, "component ({j},{k}) has non-positive homogeneity")
            }
            Error::NoOrthogonalRoot => write!(f, "no orthogonal top-slot root remains"),
            Error::NonUniqueMax => write!(f, "maximal orthogonal root is not unique"),
            Error::InternalMismatch(what) => write!(f, "internal mismatch: {what}"),
            Error::ChartTooLarge { dim, limit } => {
                write!(f, "negative chart has dimension {dim}, limit is {limit}")
            }
            Error::TruncationTooLow { order } => {
                write!(f, "truncation order {order} is below 1")
            }
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// True for errors that signal a broken internal invariant rather than
    /// bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonUniqueMax | Error::InternalMismatch(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
