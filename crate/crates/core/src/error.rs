use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("not cofinite: generators have gcd {0}")]
    NotCofinite(u64),

    #[error("non-positive generator {0}")]
    NonPositiveGenerator(i64),

    #[error("invalid Apéry base {0}")]
    InvalidAperyBase(i64),

    #[error("enumeration bound: {what} is {got}, limit {limit}")]
    EnumerationBound {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("semigroup mismatch")]
    SemigroupMismatch,

    #[error("not a ring: {0}")]
    NotARing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not Artinian: no pure power of `{0}` among the relations")]
    NotArtinian(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
}

impl Error {
    /// True for the errors raised by computation guards (bounds on
    /// enumeration or linear-algebra sizes) rather than by bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::EnumerationBound { .. } | Error::SizeGuard(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
