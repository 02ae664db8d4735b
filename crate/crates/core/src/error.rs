use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    /// The modulus passed to a p-adic operation is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Rational text that does not match the exact `a/b` / `a` grammar.
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    /// The zero polynomial has no well-defined root set.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    /// A p-adic dynamics operation requires a monic polynomial.
    #[error("polynomial must be monic")]
    NotMonic,

    /// A p-adic dynamics operation requires degree at least `min`.
    #[error("polynomial degree {degree} is below the minimum {min}")]
    DegreeTooLow { degree: usize, min: usize },

    /// The viewport exceeds the configured pixel cap.
    #[error("viewport of {pixels} pixels exceeds the cap of {cap}")]
    ViewTooLarge { pixels: u64, cap: u64 },

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
