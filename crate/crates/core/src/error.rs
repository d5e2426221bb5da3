use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("points {0}, {1} and {2} are collinear")]
    Collinear(usize, usize, usize),
    #[error("points {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("polygon is not simple")]
    NonSimple,
    #[error("no general-position sample found after {0} attempts")]
    SamplingExhausted(usize),
    #[error("malformed input at byte {offset}: {msg}")]
    Format { offset: u64, msg: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
}
