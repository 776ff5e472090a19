use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero argument not allowed for {0}")]
    ZeroArgument(&'static str),

    #[error("gcd(0, 0) is undefined")]
    GcdZeroZero,

    #[error("identical points do not determine a line")]
    IdenticalPoints,

    #[error("{0}")]
    Domain(String),

    #[error("line is not primitive")]
    NotPrimitive,

    #[error("{0} is not a Gaussian prime")]
    NotPrime(String),

    #[error("{0} is not a rational prime")]
    NotRationalPrime(u64),

    #[error("nu moduli not pairwise coprime")]
    NonCoprimeNu,

    #[error("moduli not pairwise coprime in Z[i]")]
    NonCoprimeModuli,

    #[error("{0} is not in the divisor set of the line")]
    NotInDivisorSet(String),

    #[error("scan cap exceeded: need {needed}, cap is {cap}")]
    ScanCapExceeded { needed: String, cap: u64 },

    #[error("norm factorization bound exceeded for {0}")]
    FactorBoundExceeded(String),

    #[error("delta search exhausted its iteration cap")]
    DeltaSearchExhausted,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal verification failure: {0}")]
    Verification(String),
}

impl Error {
    /// Process exit code for the CLI: 1 = domain error, 2 = resource cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ScanCapExceeded { .. }
            | Error::FactorBoundExceeded(_)
            | Error::DeltaSearchExhausted => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
