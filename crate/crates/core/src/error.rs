use thiserror::Error;

/// Errors raised by the finite and affine backends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point index {index} out of range for a space with {points} points")]
    PointOutOfRange { index: usize, points: usize },

    #[error("a space with {points} points exceeds the hard limit of {max} points")]
    TooManyPoints { points: usize, max: usize },

    #[error("space has {points} points, above the size cap of {cap}; raise the cap to force enumeration")]
    SizeCapExceeded { points: usize, cap: usize },

    #[error("assignment has {got} entries but the source has {expected} points")]
    AssignmentLength { expected: usize, got: usize },

    #[error("map is not continuous: {lo} <= {hi} in the source but {f_lo} <= {f_hi} fails in the target")]
    NotContinuous {
        lo: usize,
        hi: usize,
        f_lo: usize,
        f_hi: usize,
    },

    #[error("maps are not composable: inner target has {inner} points, outer source has {outer}")]
    NotComposable { inner: usize, outer: usize },

    #[error("precondition violated: {0}")]
    Misuse(String),

    #[error("ring context mismatch: expected {expected} variables, found {found}")]
    MixedContext { expected: usize, found: usize },

    #[error("resource guard tripped: {0}")]
    Resource(String),

    #[error("brute-force oracle disagrees with the criterion on {0}")]
    OracleDisagreement(String),

    #[error("theorem-violation alarm: {0}")]
    TheoremViolation(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
