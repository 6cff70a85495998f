use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime (got {0})")]
    NotPrime(u64),
    #[error("modulus {0} out of range: need 2 <= p < 65536")]
    ModulusOutOfRange(u64),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("monomial has {got} exponents but the ring has {expected} variables")]
    VariableCount { expected: usize, got: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{q} is not a power of p = {p}")]
    NotPowerOfP { q: u64, p: u64 },
    #[error("q = p^e exceeds the cap 2^20 (p = {p}, e = {e})")]
    QTooLarge { p: u64, e: u32 },
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("{0} variables exceeds the subset-enumeration cap of 24")]
    TooManyVariables(usize),
    #[error("search box too small: cap {cap} < max generator exponent {needed}")]
    BoxTooSmall { cap: u64, needed: u64 },
    #[error("dense coordinate space of size {0} exceeds 2^22")]
    TooManyCoordinates(u128),
    #[error("ideal is not a monomial ideal")]
    NotMonomial,
    #[error("witness lies in the defining ideal")]
    WitnessInIdeal,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant breach: {0}")]
    Internal(String),
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: undeclared variable `{name}`")]
    UndeclaredVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("{0}")]
    Input(String),
}
