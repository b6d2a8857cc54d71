//! Arbitrary-precision rational scalars.
//!
//! Every coefficient in this crate is a [`Rational`], kept in lowest terms
//! with a positive denominator (both guaranteed by `num-rational`). All
//! arithmetic is exact; there is no floating-point fallback anywhere.

use num_bigint::BigInt;
use num_traits::One;
use std::str::FromStr;

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational with value `n`.
pub fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational with value `n`.
pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical `"p/q"` rendering; the denominator is always printed, so
/// integers come out as `"p/1"`.
pub fn coeff_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` (or a bare integer `"p"`) into a rational in lowest terms.
pub fn parse_coeff(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let numer = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let denom = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if denom == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(numer, denom))
        }
        None => {
            let numer = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(Rational::from_integer(numer))
        }
    }
}

/// `(-1)^k` as a rational.
pub fn sign(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}
