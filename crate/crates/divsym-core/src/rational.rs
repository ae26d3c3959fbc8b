//! Arbitrary-precision rationals and their wire representation.
//!
//! All exact values cross the process boundary as `["numerator", "denominator"]`
//! decimal-string pairs so that no consumer is forced through floating point
//! or a fixed-width integer.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Serialize as a `(numerator, denominator)` decimal-string pair.
pub fn to_string_pair(r: &Rational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

pub fn from_string_pair(num: &str, den: &str) -> Result<Rational> {
    let n = BigInt::from_str(num.trim())
        .map_err(|e| Error::InvalidRational(format!("bad numerator {num:?}: {e}")))?;
    let d = BigInt::from_str(den.trim())
        .map_err(|e| Error::InvalidRational(format!("bad denominator {den:?}: {e}")))?;
    if d.is_zero() {
        return Err(Error::InvalidRational("zero denominator".into()));
    }
    if !d.is_positive() {
        return Err(Error::InvalidRational(format!(
            "denominator must be positive, got {d}"
        )));
    }
    Ok(BigRational::new(n, d))
}

/// Parse `"a"` or `"a/b"` with optional sign, e.g. `-3/4`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s)
                .map_err(|e| Error::InvalidRational(format!("{s:?}: {e}")))?;
            Ok(BigRational::from_integer(n))
        }
        Some((a, b)) => {
            let n = BigInt::from_str(a.trim())
                .map_err(|e| Error::InvalidRational(format!("{s:?}: {e}")))?;
            let d = BigInt::from_str(b.trim())
                .map_err(|e| Error::InvalidRational(format!("{s:?}: {e}")))?;
            if d.is_zero() {
                return Err(Error::InvalidRational(format!("{s:?}: zero denominator")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Compact display: `"a"` for integers, `"a/b"` otherwise.
pub fn display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_pair_round_trip() {
        let r = rat_frac(-6, 4);
        let (n, d) = to_string_pair(&r);
        assert_eq!((n.as_str(), d.as_str()), ("-3", "2"));
        assert_eq!(from_string_pair(&n, &d).unwrap(), r);
    }

    #[test]
    fn rejects_nonpositive_denominator() {
        assert!(from_string_pair("1", "0").is_err());
        assert!(from_string_pair("1", "-2").is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("5").unwrap(), rat(5));
        assert_eq!(parse_rational("-3/4").unwrap(), rat_frac(-3, 4));
        assert_eq!(parse_rational("6/-4").unwrap(), rat_frac(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(display(&rat(7)), "7");
        assert_eq!(display(&rat_frac(1, 2)), "1/2");
        assert_eq!(display(&rat_frac(-1, 2)), "-1/2");
    }
}
