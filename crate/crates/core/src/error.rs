use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("box ({row}, {col}) is not in the shape")]
    OutOfShape { row: usize, col: usize },
    #[error("operation needs a nonempty partition")]
    EmptyPartition,
    #[error("t = {t} is outside 0..={n}")]
    TOutOfRange { t: usize, n: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("|nu| = {size} exceeds k = {k}")]
    NuTooLarge { size: usize, k: usize },
    #[error("r - p = {0} must be even")]
    Parity(usize),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("negative path count at {0}")]
    NegativeCount(String),
    #[error("level {level} exceeds maximum level {max}")]
    LevelOutOfRange { level: String, max: String },
    #[error("vertex not found: {0}")]
    VertexNotFound(String),
    #[error("unknown format: {0}")]
    UnknownFormat(String),
    #[error("({row}, {col}) is not a removable corner")]
    NotACorner { row: usize, col: usize },
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("incompatible pair: {0}")]
    IncompatiblePair(String),
    #[error("n = {0} is outside the supported range 1..=10")]
    NOutOfRange(usize),
    #[error("inner product {0} is not a nonnegative integer multiple of the group order")]
    NonIntegerMultiplicity(String),
    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}
