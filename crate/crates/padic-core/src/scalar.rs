use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{CoreError, ExtendedInt, PAdicAbs, Prime};

/// The p-adic valuation of an exact rational: the unique `e` with
/// `q = p^e * u/v` and `p` dividing neither `u` nor `v`.
/// Returns `PlusInfinity` for `q = 0`.
pub fn valuation(q: &BigRational, p: Prime) -> ExtendedInt {
    if q.is_zero() {
        return ExtendedInt::PlusInfinity;
    }
    let num_val = int_valuation(q.numer(), p);
    // canonical form: at most one of numerator/denominator is divisible by p
    let den_val = if num_val == 0 {
        int_valuation(q.denom(), p)
    } else {
        0
    };
    ExtendedInt::Finite(num_val - den_val)
}

/// The p-adic absolute value `|q| = p^(-v_p(q))`, with `|0| = 0`.
pub fn abs_p(q: &BigRational, p: Prime) -> PAdicAbs {
    PAdicAbs::new(p, valuation(q, p))
}

fn int_valuation(n: &BigInt, p: Prime) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p.value());
    let mut v = 0i64;
    let mut current = n.clone();
    // batch by squaring the divisor so deep valuations stay cheap
    loop {
        let (q, r) = current.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        current = q;
        let mut power = p.clone() * &p;
        let mut step = 2i64;
        loop {
            let (q, r) = current.div_rem(&power);
            if !r.is_zero() {
                break;
            }
            v += step;
            current = q;
            power = &power * &power;
            step *= 2;
        }
    }
}

/// An exact rational tagged with a prime.
///
/// Arithmetic is exact and keeps the canonical reduced form; combining
/// scalars with different primes is a programming error and panics (the
/// vector-level operations return `CoreError` instead).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PAdicScalar {
    prime: Prime,
    value: BigRational,
}

impl PAdicScalar {
    pub fn new(prime: Prime, value: BigRational) -> Self {
        PAdicScalar { prime, value }
    }

    pub fn from_integer(prime: Prime, n: i64) -> Self {
        PAdicScalar::new(prime, BigRational::from(BigInt::from(n)))
    }

    /// Parses the text forms `a/b` and `a`.
    pub fn parse(text: &str, prime: Prime) -> Result<Self, CoreError> {
        Ok(PAdicScalar::new(prime, crate::parse_rational(text)?))
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn into_value(self) -> BigRational {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn valuation(&self) -> ExtendedInt {
        valuation(&self.value, self.prime)
    }

    pub fn abs(&self) -> PAdicAbs {
        abs_p(&self.value, self.prime)
    }

    fn check_prime(&self, other: &PAdicScalar) {
        assert_eq!(
            self.prime, other.prime,
            "cannot combine scalars with different primes"
        );
    }
}

impl Add for &PAdicScalar {
    type Output = PAdicScalar;
    fn add(self, rhs: &PAdicScalar) -> PAdicScalar {
        self.check_prime(rhs);
        PAdicScalar::new(self.prime, &self.value + &rhs.value)
    }
}

impl Sub for &PAdicScalar {
    type Output = PAdicScalar;
    fn sub(self, rhs: &PAdicScalar) -> PAdicScalar {
        self.check_prime(rhs);
        PAdicScalar::new(self.prime, &self.value - &rhs.value)
    }
}

impl Mul for &PAdicScalar {
    type Output = PAdicScalar;
    fn mul(self, rhs: &PAdicScalar) -> PAdicScalar {
        self.check_prime(rhs);
        PAdicScalar::new(self.prime, &self.value * &rhs.value)
    }
}

impl Neg for &PAdicScalar {
    type Output = PAdicScalar;
    fn neg(self) -> PAdicScalar {
        PAdicScalar::new(self.prime, -self.value.clone())
    }
}

impl fmt::Display for PAdicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format_rational(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn rat(text: &str) -> BigRational {
        crate::parse_rational(text).unwrap()
    }

    #[test]
    fn valuation_examples() {
        // 9 = 3^2
        assert_eq!(valuation(&rat("9"), p(3)), ExtendedInt::Finite(2));
        // v_p(0) = +inf by convention
        assert_eq!(valuation(&rat("0"), p(5)), ExtendedInt::PlusInfinity);
        // 6/25 = 5^-2 * 6
        assert_eq!(valuation(&rat("6/25"), p(5)), ExtendedInt::Finite(-2));
        assert_eq!(valuation(&rat("1/2"), p(2)), ExtendedInt::Finite(-1));
        assert_eq!(valuation(&rat("-18"), p(3)), ExtendedInt::Finite(2));
    }

    #[test]
    fn abs_examples() {
        assert_eq!(abs_p(&rat("9"), p(3)).to_rational(), rat("1/9"));
        assert_eq!(abs_p(&rat("1/2"), p(2)).to_rational(), rat("2"));
        // 3 does not divide 10
        assert_eq!(abs_p(&rat("10"), p(3)).to_rational(), rat("1"));
        assert!(abs_p(&rat("0"), p(3)).is_zero());
    }

    #[test]
    fn deep_valuation() {
        let big = BigRational::from(BigInt::from(3).pow(100) * 7);
        assert_eq!(valuation(&big, p(3)), ExtendedInt::Finite(100));
    }

    #[test]
    fn scalar_arithmetic_is_exact() {
        let a = PAdicScalar::parse("1/3", p(3)).unwrap();
        let b = PAdicScalar::parse("1/6", p(3)).unwrap();
        assert_eq!((&a + &b).value(), &rat("1/2"));
        assert_eq!((&a - &b).value(), &rat("1/6"));
        assert_eq!((&a * &b).value(), &rat("1/18"));
        assert_eq!((-&a).value(), &rat("-1/3"));
    }

    #[test]
    #[should_panic(expected = "different primes")]
    fn prime_mismatch_panics() {
        let a = PAdicScalar::from_integer(p(3), 1);
        let b = PAdicScalar::from_integer(p(5), 1);
        let _ = &a + &b;
    }
}
