use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence must have at least one entry")]
    EmptySequence,
    #[error("exponent {exponent} at index {index} is outside [0, {modulus})")]
    ExponentOutOfRange {
        index: usize,
        exponent: u32,
        modulus: u32,
    },
    #[error("entry {index} is not unimodular (|z| = {magnitude})")]
    NotUnimodular { index: usize, magnitude: f64 },
    #[error("negation needs an even modulus, got q = {0}")]
    OddModulus(u32),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("sign condition x1x2+x3x4 != 0")]
    SignCondition,
    #[error("sign entries must be +1 or -1")]
    InvalidSign,
    #[error("sequences are not a Golay complementary pair")]
    NotComplementary,
    #[error("second pair is not a complementary mate of the first")]
    Mate,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("set size mismatch: {0} vs {1}")]
    SetSizeMismatch(usize, usize),
    #[error("input is not a complete complementary code")]
    InvalidCcc,
    #[error("unknown seed '{0}'")]
    UnknownSeed(String),
    #[error("search only supports binary codes with M = 4 and 1 <= N <= 31")]
    UnsupportedSearch,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
