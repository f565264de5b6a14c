use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("modulus degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("field size {0} exceeds the supported range")]
    FieldTooLarge(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error(
        "no embedding from a degree-{source_degree} field into a degree-{target_degree} field"
    )]
    NoEmbedding {
        source_degree: u32,
        target_degree: u32,
    },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("characteristic {p} divides {r}")]
    CharacteristicDividesR { p: u64, r: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
    #[error("subspace is not invariant under the matrix")]
    NotInvariant,
    #[error("{r} and {q} are not coprime")]
    NotCoprime { r: u64, q: u64 },
    #[error("q^e exceeds the 512-bit cap")]
    TooLarge,
    #[error("{0} is not a prime power")]
    CompositeQ(u64),
    #[error("cyclotomic integers over different roots of unity ({0} vs {1})")]
    MismatchedR(u32, u32),
    #[error("{k} is not a unit modulo {r}")]
    NonUnit { k: i64, r: u32 },
    #[error("no nonnegative multiplicity vector realises the character value")]
    NoSolution,
    #[error("criterion does not cover r = {r} with d = {d}")]
    UnsupportedR { r: u32, d: usize },
    #[error("class function average is not rational")]
    NotRational,
    #[error("no primitive prime divisor of {q}^{e} - 1")]
    NoPpdPrime { q: u64, e: u32 },
    #[error("no irreducible factor with determinant one")]
    NoUnimodularFactor,
    #[error("element order {found} differs from the expected {expected}")]
    OrderMismatch { expected: String, found: String },
    #[error("order {0} equals the characteristic")]
    CharacteristicOrder(u64),
    #[error("degree {0} is too small (need n >= 5)")]
    DegreeTooSmall(usize),
    #[error("invalid twist ({s}, {t}) for extension degree {a}")]
    BadTwist { s: u32, t: u32, a: u32 },
    #[error("symmetric cube needs characteristic at least 5, got {0}")]
    CharTooSmallForSymcube(u64),
    #[error("symplectic groups need even dimension, got {0}")]
    OddDimensionSymplectic(usize),
    #[error("zero vector")]
    ZeroVector,
    #[error("action on {0} points exceeds the 2^24 cap")]
    ActionTooLarge(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
