//! p-adic valuations and exact p-adic magnitudes.
//!
//! A magnitude is stored as the pair (p, v) meaning p^(-v) and is compared
//! on valuations only; no floating point is involved anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Deterministic Miller-Rabin primality test, exact for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// v_p(x): the exponent of p in x, with v_p(0) = +infinity.
///
/// The ordering is the valuation ordering: `Infinite` is greater than
/// every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Exponent of `p` dividing a nonzero integer, or `None` for zero.
/// Strips p, then p^2, p^4, ... so the cost is logarithmic in the result.
fn int_valuation(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut current = n.abs();
    let mut total = 0u64;
    loop {
        let (q, r) = current.div_rem(&p);
        if !r.is_zero() {
            return Some(total);
        }
        total += 1;
        current = q;
        let mut power = &p * &p;
        let mut step = 2u64;
        loop {
            let (q, r) = current.div_rem(&power);
            if !r.is_zero() {
                break;
            }
            total += step;
            current = q;
            power = &power * &power;
            step *= 2;
        }
    }
}

/// p-adic valuation of a rational: v_p(numerator) - v_p(denominator).
pub fn vp(x: &Rational, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    let Some(num) = int_valuation(x.numer(), p) else {
        return Ok(Valuation::Infinite);
    };
    // The denominator is never zero.
    let den = int_valuation(x.denom(), p).expect("nonzero denominator");
    Ok(Valuation::Finite(num as i64 - den as i64))
}

/// Exact p-adic absolute value |x|_p = p^(-v_p(x)).
pub fn abs_p(x: &Rational, p: u64) -> Result<PAdicMagnitude> {
    Ok(PAdicMagnitude::new(p, vp(x, p)?))
}

/// An exact p-adic magnitude p^(-v), compared on exponents.
///
/// Magnitudes for different primes are incomparable; `partial_cmp`
/// returns `None` for them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PAdicMagnitude {
    p: u64,
    valuation: Valuation,
}

impl PAdicMagnitude {
    pub fn new(p: u64, valuation: Valuation) -> Self {
        Self { p, valuation }
    }

    /// |0|_p, the sentinel smaller than every finite magnitude.
    pub fn zero(p: u64) -> Self {
        Self::new(p, Valuation::Infinite)
    }

    /// |1|_p = p^0.
    pub fn one(p: u64) -> Self {
        Self::new(p, Valuation::Finite(0))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn valuation(&self) -> Valuation {
        self.valuation
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_infinite()
    }

    /// Whether the magnitude is at most 1, i.e. the valuation is >= 0.
    pub fn at_most_one(&self) -> bool {
        match self.valuation {
            Valuation::Finite(v) => v >= 0,
            Valuation::Infinite => true,
        }
    }

    /// The magnitude as an exact rational p^(-v) (0 for the zero sentinel).
    /// Intended for small exponents; the result has about |v|·log2(p) bits.
    pub fn as_rational(&self) -> Rational {
        match self.valuation {
            Valuation::Infinite => Rational::zero(),
            Valuation::Finite(v) => {
                let power = BigInt::from(self.p).pow(v.unsigned_abs() as u32);
                if v <= 0 {
                    Rational::from_integer(power)
                } else {
                    Rational::new(BigInt::one(), power)
                }
            }
        }
    }
}

impl PartialOrd for PAdicMagnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.p != other.p {
            return None;
        }
        // Larger valuation means smaller magnitude.
        Some(other.valuation.cmp(&self.valuation))
    }
}

impl fmt::Display for PAdicMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            Valuation::Infinite => write!(f, "0"),
            Valuation::Finite(0) => write!(f, "1"),
            Valuation::Finite(v) => write!(f, "{}^{}", self.p, -v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(97));
        assert!(is_prime((1 << 31) - 1));
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        for composite in [0, 1, 4, 561, 1_000_000_016_000_000_063] {
            assert!(!is_prime(composite), "{composite} accepted as prime");
        }
    }

    #[test]
    fn unit_valuations_are_zero() {
        for p in [2, 3, 5, 7, 97] {
            assert_eq!(vp(&ratio(1, 1), p).unwrap(), Valuation::Finite(0));
        }
    }

    #[test]
    fn valuation_of_three_quarters_base_two() {
        // |3/4|_2 = 4
        let v = vp(&ratio(3, 4), 2).unwrap();
        assert_eq!(v, Valuation::Finite(-2));
        let m = abs_p(&ratio(3, 4), 2).unwrap();
        assert_eq!(m.as_rational(), ratio(4, 1));
    }

    #[test]
    fn valuation_of_nine_sixteenths_base_two() {
        // |9/16|_2 = 16
        assert_eq!(vp(&ratio(9, 16), 2).unwrap(), Valuation::Finite(-4));
        assert_eq!(abs_p(&ratio(9, 16), 2).unwrap().as_rational(), ratio(16, 1));
    }

    #[test]
    fn zero_maps_to_the_sentinel() {
        let m = abs_p(&ratio(0, 1), 5).unwrap();
        assert!(m.is_zero());
        assert_eq!(m.as_rational(), ratio(0, 1));
        // The sentinel is below every finite magnitude.
        assert!(m < PAdicMagnitude::one(5));
        assert!(m < PAdicMagnitude::new(5, Valuation::Finite(100)));
    }

    #[test]
    fn coprime_values_have_unit_magnitude() {
        assert_eq!(abs_p(&ratio(-1, 2), 7).unwrap(), PAdicMagnitude::one(7));
    }

    #[test]
    fn primes_dividing_neither_side_see_a_unit() {
        for q in [5, 7, 11, 13, 101] {
            assert_eq!(vp(&ratio(3, 4), q).unwrap(), Valuation::Finite(0));
        }
    }

    #[test]
    fn magnitudes_compare_on_exponents() {
        let four = abs_p(&ratio(3, 4), 2).unwrap();
        let one = PAdicMagnitude::one(2);
        assert!(four > one);
        assert!(one.at_most_one());
        assert!(!four.at_most_one());
        // Different primes are incomparable.
        assert_eq!(four.partial_cmp(&PAdicMagnitude::one(3)), None);
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(matches!(vp(&ratio(1, 1), 4), Err(Error::NotPrime(4))));
        assert!(matches!(abs_p(&ratio(1, 1), 1), Err(Error::NotPrime(1))));
    }

    #[test]
    fn large_valuations_resolve_quickly() {
        let big = BigInt::from(3).pow(4096) * BigInt::from(5);
        assert_eq!(int_valuation(&big, 3), Some(4096));
    }

    #[test]
    fn display_forms() {
        assert_eq!(abs_p(&ratio(9, 16), 2).unwrap().to_string(), "2^4");
        assert_eq!(abs_p(&ratio(8, 1), 2).unwrap().to_string(), "2^-3");
        assert_eq!(PAdicMagnitude::one(3).to_string(), "1");
        assert_eq!(PAdicMagnitude::zero(3).to_string(), "0");
    }
}
