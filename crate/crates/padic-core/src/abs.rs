use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{CoreError, ExtendedInt, Prime};

/// A p-adic absolute value, stored symbolically as `p^(-exponent)`.
///
/// The exponent is the valuation of the underlying scalar, so
/// `exponent = +infinity` encodes `|0| = 0`.  Keeping the value symbolic
/// makes every comparison — against another absolute value or against an
/// exact rational threshold — an integer computation.
///
/// Equality and ordering follow the real value: `|0|` is the minimum, and
/// two values with different primes are compared exactly as rationals
/// (`p^0 = q^0 = 1` in particular).
#[derive(Debug, Clone, Copy)]
pub struct PAdicAbs {
    prime: Prime,
    exponent: ExtendedInt,
}

impl PAdicAbs {
    pub fn new(prime: Prime, exponent: ExtendedInt) -> Self {
        PAdicAbs { prime, exponent }
    }

    /// The absolute value of zero (`|0| = 0`).
    pub fn zero(prime: Prime) -> Self {
        PAdicAbs {
            prime,
            exponent: ExtendedInt::PlusInfinity,
        }
    }

    /// The absolute value one (`p^0`).
    pub fn one(prime: Prime) -> Self {
        PAdicAbs {
            prime,
            exponent: ExtendedInt::Finite(0),
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn exponent(&self) -> ExtendedInt {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.exponent.is_infinite()
    }

    pub fn is_one(&self) -> bool {
        self.exponent == ExtendedInt::Finite(0)
    }

    /// Multiplies two absolute values with the same prime (exponents add).
    pub fn mul(&self, other: &PAdicAbs) -> PAdicAbs {
        assert_eq!(
            self.prime, other.prime,
            "cannot multiply absolute values with different primes"
        );
        PAdicAbs {
            prime: self.prime,
            exponent: self.exponent.saturating_add(other.exponent),
        }
    }

    /// Raises the value to an integer power `k >= 1`.
    pub fn pow(&self, k: u32) -> PAdicAbs {
        match self.exponent {
            ExtendedInt::PlusInfinity => *self,
            ExtendedInt::Finite(e) => PAdicAbs {
                prime: self.prime,
                exponent: ExtendedInt::Finite(e * i64::from(k)),
            },
        }
    }

    /// The exact rational value `p^(-exponent)` (0 for `|0|`).
    pub fn to_rational(&self) -> BigRational {
        match self.exponent {
            ExtendedInt::PlusInfinity => BigRational::zero(),
            ExtendedInt::Finite(e) => {
                let p = BigInt::from(self.prime.value());
                if e >= 0 {
                    BigRational::new(BigInt::one(), p.pow(e as u32))
                } else {
                    BigRational::from(p.pow((-e) as u32))
                }
            }
        }
    }

    /// Exact comparison against a rational bound, in integer arithmetic:
    /// `p^(-e) >= b` iff `b_num * p^e <= b_den` (for `b > 0`).
    pub fn cmp_rational(&self, bound: &BigRational) -> Ordering {
        if bound.is_negative() {
            return Ordering::Greater;
        }
        match self.exponent {
            ExtendedInt::PlusInfinity => {
                // |0| = 0 against b >= 0
                if bound.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Less
                }
            }
            ExtendedInt::Finite(e) => {
                if bound.is_zero() {
                    return Ordering::Greater;
                }
                let p = BigInt::from(self.prime.value());
                // compare p^(-e) with num/den  <=>  den with num * p^e
                let (lhs, rhs) = if e >= 0 {
                    (bound.denom().clone(), bound.numer() * p.pow(e as u32))
                } else {
                    (bound.denom() * p.pow((-e) as u32), bound.numer().clone())
                };
                lhs.cmp(&rhs)
            }
        }
    }

    /// Parses `0`, a rational power of `prime` (`"1/9"`, `"9"`, `"1"`),
    /// or the caret form `"p^k"` where `k` is the real-value exponent
    /// (`"3^-2"` is `1/9`).
    pub fn parse(text: &str, prime: Prime) -> Result<Self, CoreError> {
        let text = text.trim();
        let bad = |reason: &str| CoreError::InvalidRational {
            literal: text.to_string(),
            reason: reason.to_string(),
        };
        if let Some((base, expo)) = text.split_once('^') {
            let base: u64 = base
                .parse()
                .map_err(|_| bad("caret form needs an integer base"))?;
            if base != prime.value() {
                return Err(bad("base does not match the expected prime"));
            }
            let k: i64 = expo
                .parse()
                .map_err(|_| bad("caret form needs an integer exponent"))?;
            return Ok(PAdicAbs {
                prime,
                exponent: ExtendedInt::Finite(-k),
            });
        }
        let r = crate::parse_rational(text)?;
        if r.is_zero() {
            return Ok(PAdicAbs::zero(prime));
        }
        if r.is_negative() {
            return Err(bad("absolute values are nonnegative"));
        }
        // r must be exactly p^k
        let v = crate::valuation(&r, prime);
        let e = v.finite().expect("nonzero rational has finite valuation");
        let candidate = PAdicAbs {
            prime,
            exponent: ExtendedInt::Finite(-e),
        };
        if candidate.to_rational() == r {
            Ok(candidate)
        } else {
            Err(bad("not a power of the expected prime"))
        }
    }
}

impl PartialEq for PAdicAbs {
    fn eq(&self, other: &Self) -> bool {
        match (self.exponent, other.exponent) {
            (ExtendedInt::PlusInfinity, ExtendedInt::PlusInfinity) => true,
            (ExtendedInt::Finite(0), ExtendedInt::Finite(0)) => true,
            (ExtendedInt::Finite(a), ExtendedInt::Finite(b)) => {
                a == b && self.prime == other.prime
            }
            _ => false,
        }
    }
}

impl Eq for PAdicAbs {}

impl Hash for PAdicAbs {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.exponent {
            ExtendedInt::PlusInfinity => 0u8.hash(state),
            ExtendedInt::Finite(0) => 1u8.hash(state),
            ExtendedInt::Finite(e) => {
                2u8.hash(state);
                self.prime.value().hash(state);
                e.hash(state);
            }
        }
    }
}

impl PartialOrd for PAdicAbs {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PAdicAbs {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.exponent, other.exponent) {
            (ExtendedInt::PlusInfinity, ExtendedInt::PlusInfinity) => Ordering::Equal,
            (ExtendedInt::PlusInfinity, _) => Ordering::Less,
            (_, ExtendedInt::PlusInfinity) => Ordering::Greater,
            (ExtendedInt::Finite(a), ExtendedInt::Finite(b)) => {
                if self.prime == other.prime {
                    // p^(-a) >= p^(-b) iff a <= b
                    b.cmp(&a)
                } else {
                    // exact cross-prime comparison of p^(-a) vs q^(-b)
                    self.cmp_rational(&other.to_rational())
                }
            }
        }
    }
}

impl fmt::Display for PAdicAbs {
    /// Exact rational text ("0", "1", "1/9", "9").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format_rational(&self.to_rational()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn abs(prime: u64, e: i64) -> PAdicAbs {
        PAdicAbs::new(p(prime), ExtendedInt::Finite(e))
    }

    #[test]
    fn order_agrees_with_real_value() {
        // 1/9 < 1/3 < 1 < 3 < 9, zero below everything
        assert!(abs(3, 2) < abs(3, 1));
        assert!(abs(3, 1) < abs(3, 0));
        assert!(abs(3, 0) < abs(3, -1));
        assert!(PAdicAbs::zero(p(3)) < abs(3, 100));
        // cross-prime: 1/3 > 1/5, 3^0 == 5^0
        assert!(abs(3, 1) > abs(5, 1));
        assert_eq!(abs(3, 0), abs(5, 0));
        assert_eq!(PAdicAbs::zero(p(3)), PAdicAbs::zero(p(7)));
    }

    #[test]
    fn cmp_rational_exact() {
        let one = BigRational::from(BigInt::from(1));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(abs(3, 0).cmp_rational(&one), Ordering::Equal);
        assert_eq!(abs(3, 1).cmp_rational(&one), Ordering::Less);
        assert_eq!(abs(3, 1).cmp_rational(&half), Ordering::Less); // 1/3 < 1/2
        assert_eq!(abs(3, -1).cmp_rational(&half), Ordering::Greater);
        assert_eq!(
            PAdicAbs::zero(p(3)).cmp_rational(&BigRational::zero()),
            Ordering::Equal
        );
    }

    #[test]
    fn to_rational_round_trip() {
        assert_eq!(abs(3, 2).to_rational(), BigRational::new(1.into(), 9.into()));
        assert_eq!(abs(3, -2).to_rational(), BigRational::from(BigInt::from(9)));
        assert!(PAdicAbs::zero(p(5)).to_rational().is_zero());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(PAdicAbs::parse("0", p(3)).unwrap(), PAdicAbs::zero(p(3)));
        assert_eq!(PAdicAbs::parse("1", p(3)).unwrap(), abs(3, 0));
        assert_eq!(PAdicAbs::parse("1/9", p(3)).unwrap(), abs(3, 2));
        assert_eq!(PAdicAbs::parse("9", p(3)).unwrap(), abs(3, -2));
        assert_eq!(PAdicAbs::parse("3^-2", p(3)).unwrap(), abs(3, 2));
        assert!(PAdicAbs::parse("2/3", p(3)).is_err());
        assert!(PAdicAbs::parse("5^1", p(3)).is_err());
    }

    #[test]
    fn display_is_rational_text() {
        assert_eq!(abs(3, 2).to_string(), "1/9");
        assert_eq!(abs(3, 0).to_string(), "1");
        assert_eq!(PAdicAbs::zero(p(3)).to_string(), "0");
    }
}
