use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::CoreError;

/// Parses the text forms `a/b` and `a` into an exact rational.
///
/// The denominator must be nonzero; the result is canonical (reduced,
/// positive denominator) by construction.
pub fn parse_rational(text: &str) -> Result<BigRational, CoreError> {
    let text = text.trim();
    let bad = |reason: &str| CoreError::InvalidRational {
        literal: text.to_string(),
        reason: reason.to_string(),
    };
    if text.is_empty() {
        return Err(bad("empty literal"));
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = match den_text {
        Some(d) => d.parse().map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("denominator is zero"));
    }
    Ok(BigRational::new(num, den))
}

/// Formats a rational as `a/b`, or `a` when the denominator is one.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `floor(value)` as a big integer.
pub fn floor_to_int(value: &BigRational) -> BigInt {
    value.floor().to_integer()
}

/// Reduces a rational modulo `m` (`num * den^-1 mod m`), returning the
/// representative in `[0, m)`.  `None` when the denominator is not
/// invertible modulo `m`.
pub fn rational_mod(q: &BigRational, modulus: &BigInt) -> Option<BigInt> {
    use num_integer::Integer;
    let ext = q.denom().extended_gcd(modulus);
    if !ext.gcd.is_one() {
        return None;
    }
    let inv = ext.x.mod_floor(modulus);
    Some((q.numer() * inv).mod_floor(modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn parse_and_canonicalize() {
        assert_eq!(parse_rational("6/25").unwrap(), BigRational::new(6.into(), 25.into()));
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("4/-8").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), BigRational::from(BigInt::from(7)));
        assert_eq!(parse_rational(" -7 ").unwrap(), BigRational::from(BigInt::from(-7)));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "1/0", "a", "1/b", "1/2/3", "1.5"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn format_round_trip() {
        for text in ["0", "1", "-1", "6/25", "-3/7"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
    }

    #[test]
    fn negative_sign_normalized_to_numerator() {
        assert!(parse_rational("1/-2").unwrap().is_negative());
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
    }
}
