use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed Coxeter matrix: {0}")]
    MalformedMatrix(String),
    #[error("unknown system type `{0}`")]
    UnknownType(String),
    #[error("the group is infinite; a length cap is required")]
    InfiniteWithoutCap,
    #[error("backend `{backend}` is not valid for this system: {reason}")]
    BackendMismatch { backend: String, reason: String },
    #[error("group has more than {limit} elements below the cap; set a smaller length_cap")]
    TooLarge { limit: usize },
    #[error("generator index {generator} out of range for rank {rank}")]
    GeneratorOutOfRange { generator: usize, rank: usize },
    #[error("result exceeds the length cap {cap}")]
    BeyondCap { cap: u32 },
    #[error("invalid word `{0}`")]
    InvalidWord(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{u} is not below {v} in Bruhat order")]
    NotComparable { u: String, v: String },
    #[error("interval exceeds the size cap of {cap} elements")]
    IntervalTooLarge { cap: usize },
    #[error("the group has no longest element (infinite or truncated)")]
    NoLongestElement,
    #[error("operation requires a type A system with permutation data")]
    NotTypeA,
    #[error("Bruhat graph was not built for this interval")]
    GraphAbsent,
    #[error("inconsistent inversion data: {0}")]
    Inconsistent(String),
}
