use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {p}^{r} exceeds the configured bound {bound}")]
    FieldTooLarge { p: u64, r: u32, bound: u64 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("cannot embed F_{src} into F_{dst}: degree {src_r} does not divide {dst_r}")]
    NoEmbedding {
        src: u64,
        dst: u64,
        src_r: u32,
        dst_r: u32,
    },
    #[error("index {index} out of range for a domain of size {size}")]
    IndexOutOfRange { index: u64, size: u64 },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("variable x{index} out of range for dimension {n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("malformed generator: {0}")]
    MalformedGenerator(String),
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("map is not injective on the point set (collision at index {0})")]
    NotBijective(usize),
    #[error("domain of {0} points exceeds the configured bound")]
    DomainTooLarge(u64),
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("{0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
