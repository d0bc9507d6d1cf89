use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("shape {shape} has odd weight {weight}")]
    OddWeight { shape: String, weight: u64 },

    #[error("expected a two-row shape (n, n), got {0}")]
    NotTwoRow(String),

    #[error("q-binomial requires k <= n, got n = {n}, k = {k}")]
    QBinomialRange { n: u32, k: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("subset {subset:?} of [{n}] must have exactly {expected} elements")]
    SubsetSize {
        n: u32,
        subset: Vec<u32>,
        expected: usize,
    },

    #[error("subset element {0} is outside [1, {1}]")]
    SubsetElement(u32, u32),

    #[error("binary word has {found} zeros, expected {expected}")]
    ZeroCount { found: usize, expected: usize },

    #[error("invalid binary word: {0}")]
    InvalidWord(String),

    #[error("not a decimal integer: {0}")]
    InvalidNumber(String),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("hook (n, 1^m) needs n + m even, got n = {n}, m = {m}")]
    OddHook { n: u32, m: u32 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
