use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation bounds differ: ({0}, {1}) vs ({2}, {3})")]
    BoundsMismatch(usize, usize, usize, usize),

    #[error("factor is not invertible under truncation: q-exponent {qexp}, power {power}")]
    NonInvertibleFactor { qexp: i64, power: i64 },

    #[error("negative exponent in series factor: q^{qexp} t^{texp}")]
    NegativeExponent { qexp: i64, texp: i64 },

    #[error("degree shift {0} is odd; only even shifts preserve parity")]
    OddShift(i64),

    #[error("dimension d = {0} must be even and positive")]
    OddDimension(u32),

    #[error("Betti table has classes in degree {degree}, outside [0, {bound}]")]
    SupportOutOfRange { degree: u32, bound: u32 },

    #[error("HH^0 must be one-dimensional, found {0}")]
    NonUnitalCenter(u64),

    #[error("n = {0} is too small (need n >= {1})")]
    RankTooSmall(usize, usize),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("unknown closed form {0:?}")]
    UnknownLabel(String),

    #[error("invalid preset: {0}")]
    InvalidPreset(String),

    #[error("number of conjugacy classes must be at least 1, got {0}")]
    InvalidClassCount(i64),

    #[error("size cap exceeded: {needed} matrix entries requested, cap is {cap}")]
    SizeCap { needed: u128, cap: u128 },

    #[error("window too small: N = {0} (need N >= 4)")]
    WindowTooSmall(usize),

    #[error("windowed cohomology unstable: {0:?} at N-2 vs {1:?} at N")]
    Unstable([usize; 3], [usize; 3]),

    #[error("algebra kinds differ: {0} vs {1}")]
    KindMismatch(&'static str, &'static str),

    #[error("exponent ({0}, {1}) outside the monomial domain of {2}")]
    ExponentDomain(i64, i64, &'static str),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("generator index {index} out of range for n = {n}")]
    GeneratorIndex { index: usize, n: usize },

    #[error("cannot parse word token {0:?}")]
    BadToken(String),

    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
