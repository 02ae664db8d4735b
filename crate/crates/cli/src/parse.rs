//! Argument grammars: complex constants as decimal `re,im` pairs,
//! p-adic inputs as exact rationals, and polynomials as degree-descending
//! coefficient lists.

use altjulia_core::{parse_rational, Complex64, Rational, RationalPoly};

/// Parses "re,im" with finite double-precision components.
pub fn complex(text: &str) -> Result<Complex64, String> {
    let err = || format!("expected a complex constant as \"re,im\", got {text:?}");
    let (re_text, im_text) = text.split_once(',').ok_or_else(err)?;
    let re: f64 = re_text.trim().parse().map_err(|_| err())?;
    let im: f64 = im_text.trim().parse().map_err(|_| err())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(err());
    }
    Ok(Complex64::new(re, im))
}

/// Parses one exact rational.
pub fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text)
        .map_err(|_| format!("expected an exact rational like \"-3/4\" or \"2\", got {text:?}"))
}

/// Parses a comma-separated list of exact rationals.
pub fn rational_list(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',').map(rational).collect()
}

/// Parses a polynomial given as degree-descending coefficients,
/// e.g. "1,0,-1/4" for z^2 - 1/4.
pub fn polynomial(text: &str) -> Result<RationalPoly, String> {
    Ok(RationalPoly::from_descending(&rational_list(text)?))
}

pub fn uint(text: &str, what: &str) -> Result<u32, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("expected a nonnegative integer for {what}, got {text:?}"))
}

pub fn uint64(text: &str, what: &str) -> Result<u64, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("expected a nonnegative integer for {what}, got {text:?}"))
}

pub fn real(text: &str, what: &str) -> Result<f64, String> {
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| format!("expected a number for {what}, got {text:?}"))?;
    if !value.is_finite() {
        return Err(format!("{what} must be finite, got {text:?}"));
    }
    Ok(value)
}

pub fn boolean(text: &str, what: &str) -> Result<bool, String> {
    match text.trim() {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(format!("expected true/false for {what}, got {text:?}")),
    }
}
