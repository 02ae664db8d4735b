//! Exact rational scalars and their text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms. Zero is represented as 0/1.
pub type Rational = BigRational;

/// Convenience constructor from machine integers.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses the exact text form `a/b` or `a`, with an optional leading sign.
///
/// Decimal notation is rejected on purpose: p-adic inputs never pass
/// through floating point.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let reject = || Error::InvalidRational(text.to_string());
    let (numer_text, denom_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer_text.parse().map_err(|_| reject())?;
    let denom: BigInt = denom_text.parse().map_err(|_| reject())?;
    if denom.is_zero() {
        return Err(reject());
    }
    Ok(Rational::new(numer, denom))
}

/// Bit length of the larger of numerator and denominator magnitudes.
/// Used for size-budget checks on exact orbits.
pub fn bit_length(x: &Rational) -> u64 {
    x.numer().bits().max(x.denom().bits())
}
