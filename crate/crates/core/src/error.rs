use thiserror::Error;

/// Errors raised by the arithmetic engines, the sum and Bernoulli kernels and
/// the congruence verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("value is not p-integral (valuation {valuation})")]
    NotPIntegral { valuation: i64 },

    /// A p-adic value is only known modulo `p^available`, which is not enough
    /// to decide a question posed modulo `p^required`.
    #[error("p-adic precision exhausted: known mod p^{available}, need p^{required}")]
    PrecisionExhausted { available: i64, required: i64 },

    #[error("modulus {prime}^{exponent} does not fit the 127-bit residue kernel")]
    ModulusTooLarge { prime: u64, exponent: u32 },

    #[error("Bernoulli index {index} exceeds configured bound {bound}")]
    IndexTooLarge { index: usize, bound: usize },

    #[error("B_{index} mod {prime} needs index + 1 < prime")]
    NotPRegularRange { index: usize, prime: u64 },

    #[error("unknown series `{0}`")]
    UnknownSeries(String),

    #[error("unknown statement `{0}`")]
    UnknownStatement(String),

    #[error("statement {statement} does not apply at p = {prime}")]
    NotApplicable { statement: String, prime: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
