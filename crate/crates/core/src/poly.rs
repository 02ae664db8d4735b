//! Dense polynomials over the exact rationals: evaluation, composition,
//! formal derivative, and rational root extraction.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A polynomial with exact rational coefficients, stored dense in
/// ascending order (index k holds the coefficient of z^k). The zero
/// polynomial is the empty list; otherwise the leading entry is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from coefficients written leading term first.
    pub fn from_descending(coeffs: &[Rational]) -> Self {
        Self::new(coeffs.iter().rev().cloned().collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(value: Rational) -> Self {
        Self::new(vec![value])
    }

    /// The identity polynomial z.
    pub fn identity() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of z^k, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Coefficients written leading term first (a single 0 for zero).
    pub fn descending_coeffs(&self) -> Vec<Rational> {
        if self.is_zero() {
            vec![Rational::zero()]
        } else {
            self.coeffs.iter().rev().cloned().collect()
        }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> RationalPoly {
        let derived = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        RationalPoly::new(derived)
    }

    /// self ∘ inner, with exact expanded coefficients.
    pub fn compose(&self, inner: &RationalPoly) -> RationalPoly {
        let mut acc = RationalPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &RationalPoly::constant(c.clone());
        }
        acc
    }

    /// All rational roots with multiplicity, via the rational-root theorem
    /// on the primitive integer form, deflating repeatedly. Whatever is
    /// left has no rational roots; its degree is reported as unresolved.
    pub fn rational_roots(&self) -> Result<RationalRoots> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots: Vec<(Rational, usize)> = Vec::new();

        // Roots at the origin: the power of z dividing the polynomial.
        let zero_mult = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
        }
        let mut work: Vec<Rational> = self.coeffs[zero_mult..].to_vec();

        if work.len() > 1 {
            for candidate in candidates(&work) {
                let mut multiplicity = 0;
                while work.len() > 1 && eval_slice(&work, &candidate).is_zero() {
                    deflate(&mut work, &candidate);
                    multiplicity += 1;
                }
                if multiplicity > 0 {
                    roots.push((candidate, multiplicity));
                }
            }
        }

        Ok(RationalRoots {
            roots,
            unresolved_degree: work.len() - 1,
        })
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let sum = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RationalPoly::new(sum)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut product = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                product[i + j] += a * b;
            }
        }
        RationalPoly::new(product)
    }
}

/// Result of rational root extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// (root, multiplicity) pairs in discovery order: the origin first
    /// when present, then candidates by increasing magnitude, positive
    /// before negative.
    pub roots: Vec<(Rational, usize)>,
    /// Degree of the rational-root-free cofactor; 0 means the polynomial
    /// splits over the rationals.
    pub unresolved_degree: usize,
}

impl RationalRoots {
    /// Distinct roots in discovery order.
    pub fn distinct(&self) -> Vec<Rational> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }
}

fn eval_slice(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Divides by (z - root) in place; the caller guarantees divisibility.
fn deflate(coeffs: &mut Vec<Rational>, root: &Rational) {
    let mut quotient = vec![Rational::zero(); coeffs.len() - 1];
    let mut carry = Rational::zero();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if k == 0 {
            debug_assert!((c + &carry * root).is_zero(), "non-root deflation");
        } else {
            let q = c + &carry * root;
            quotient[k - 1] = q.clone();
            carry = q;
        }
    }
    *coeffs = quotient;
}

/// Root candidates ±q/r with q dividing the trailing and r the leading
/// integer coefficient of the primitive form, ordered by increasing
/// magnitude with the positive sign first.
fn candidates(coeffs: &[Rational]) -> Vec<Rational> {
    let primitive = primitive_integer_form(coeffs);
    let trailing = primitive.first().expect("nonempty");
    let leading = primitive.last().expect("nonempty");

    let mut magnitudes: Vec<Rational> = Vec::new();
    for q in divisors(trailing) {
        for r in divisors(leading) {
            let value = Rational::new(q.clone(), r);
            if !magnitudes.contains(&value) {
                magnitudes.push(value);
            }
        }
    }
    magnitudes.sort();
    magnitudes
        .into_iter()
        .flat_map(|m| [m.clone(), -m])
        .collect()
}

/// Clears denominators and divides out the content, preserving roots.
/// Expects a slice with nonzero first and last entries.
fn primitive_integer_form(coeffs: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let scaled: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for c in &scaled {
        content = content.gcd(c);
    }
    scaled.into_iter().map(|c| c / &content).collect()
}

/// Positive divisors of |n| by trial division, unordered.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    let mut found = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            found.push(d.clone());
            let paired = &n / &d;
            if paired != d {
                found.push(paired);
            }
        }
        d += 1;
    }
    found
}
