use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with positive denominator.
///
/// `Display` prints `p/q`, or just `n` when the denominator is 1, and
/// [`parse_rational`] accepts the same forms.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let malformed = || Error::MalformedRational(text.to_string());
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(numer) || !valid(denom) {
        return Err(malformed());
    }
    let numer: BigInt = numer.parse().map_err(|_| malformed())?;
    let denom: BigInt = denom.parse().map_err(|_| malformed())?;
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

pub(crate) fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}
