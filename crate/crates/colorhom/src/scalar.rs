//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals. There is
//! no tolerance anywhere: a residual is zero or it is a counterexample.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}` (expected `p` or `p/q`, no decimals)")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `p` or `p/q` with optional sign. Decimal notation is rejected so
/// floating-point values can never sneak into a document.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num
        .parse()
        .map_err(|_| ScalarParseError::Invalid(text.to_owned()))?;
    let denom: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| ScalarParseError::Invalid(text.to_owned()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_owned()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical rendering: reduced fraction, `p` when the denominator is 1,
/// otherwise `p/q` with the sign on the numerator.
pub fn render_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}
