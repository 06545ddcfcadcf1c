use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::{abs_p, CoreError, PAdicAbs, PAdicScalar, Prime};

/// A vector in Q_p^d, stored as exact rational entries with a shared prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PAdicVector {
    prime: Prime,
    entries: Vec<BigRational>,
}

impl PAdicVector {
    pub fn new(prime: Prime, entries: Vec<BigRational>) -> Result<Self, CoreError> {
        if entries.is_empty() {
            return Err(CoreError::EmptyVector);
        }
        Ok(PAdicVector { prime, entries })
    }

    /// The j-th standard basis vector of Q_p^d.
    pub fn standard_basis(prime: Prime, dim: usize, j: usize) -> Self {
        assert!(j < dim && dim > 0);
        let mut entries = vec![BigRational::zero(); dim];
        entries[j] = BigRational::from(num_bigint::BigInt::from(1));
        PAdicVector { prime, entries }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn entry(&self, j: usize) -> PAdicScalar {
        PAdicScalar::new(self.prime, self.entries[j].clone())
    }

    pub fn sub(&self, other: &PAdicVector) -> Result<PAdicVector, CoreError> {
        check_compatible(self, other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PAdicVector {
            prime: self.prime,
            entries,
        })
    }

    pub fn scale(&self, factor: &BigRational) -> PAdicVector {
        PAdicVector {
            prime: self.prime,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn add(&self, other: &PAdicVector) -> Result<PAdicVector, CoreError> {
        check_compatible(self, other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PAdicVector {
            prime: self.prime,
            entries,
        })
    }
}

fn check_compatible(u: &PAdicVector, v: &PAdicVector) -> Result<(), CoreError> {
    if u.prime != v.prime {
        return Err(CoreError::PrimeMismatch {
            left: u.prime.value(),
            right: v.prime.value(),
        });
    }
    if u.entries.len() != v.entries.len() {
        return Err(CoreError::DimensionMismatch {
            left: u.entries.len(),
            right: v.entries.len(),
        });
    }
    Ok(())
}

/// The standard inner product `<u, v> = sum_j u_j v_j`, exact.
pub fn padic_inner_product(u: &PAdicVector, v: &PAdicVector) -> Result<PAdicScalar, CoreError> {
    check_compatible(u, v)?;
    let sum = u
        .entries
        .iter()
        .zip(&v.entries)
        .fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
    Ok(PAdicScalar::new(u.prime, sum))
}

/// The sup-norm `||v|| = max_j |v_j|`.
pub fn sup_norm(v: &PAdicVector) -> PAdicAbs {
    v.entries
        .iter()
        .map(|e| abs_p(e, v.prime))
        .max()
        .expect("vectors are nonempty by construction")
}

/// Whether `|<u, v>| <= ||u|| ||v||` holds, compared exactly as powers of p.
/// This inequality is a theorem for the standard inner product, so the
/// check exists for property tests and diagnostics.
pub fn cauchy_schwarz_holds(u: &PAdicVector, v: &PAdicVector) -> Result<bool, CoreError> {
    let lhs = padic_inner_product(u, v)?.abs();
    let rhs = sup_norm(u).mul(&sup_norm(v));
    Ok(lhs <= rhs)
}

impl fmt::Display for PAdicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(crate::format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    fn vec3(entries: &[&str]) -> PAdicVector {
        let entries = entries
            .iter()
            .map(|t| crate::parse_rational(t).unwrap())
            .collect();
        PAdicVector::new(p3(), entries).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let e1 = vec3(&["1", "0"]);
        let e2 = vec3(&["0", "1"]);
        assert!(padic_inner_product(&e1, &e2).unwrap().is_zero());
        assert!(padic_inner_product(&e1, &e1).unwrap().is_one());
        let v = vec3(&["1", "3"]);
        assert_eq!(
            padic_inner_product(&v, &v).unwrap().value(),
            &crate::parse_rational("10").unwrap()
        );
    }

    #[test]
    fn inner_product_errors() {
        let u = vec3(&["1", "0"]);
        let w = vec3(&["1", "0", "0"]);
        assert_eq!(
            padic_inner_product(&u, &w),
            Err(CoreError::DimensionMismatch { left: 2, right: 3 })
        );
        let v5 = PAdicVector::new(
            Prime::new(5).unwrap(),
            vec![BigRational::zero(), BigRational::zero()],
        )
        .unwrap();
        assert_eq!(
            padic_inner_product(&u, &v5),
            Err(CoreError::PrimeMismatch { left: 3, right: 5 })
        );
    }

    #[test]
    fn sup_norm_examples() {
        assert!(sup_norm(&vec3(&["1", "0"])).is_one());
        // max(|3|, |9|) = max(1/3, 1/9) = 1/3
        assert_eq!(
            sup_norm(&vec3(&["3", "9"])).to_rational(),
            crate::parse_rational("1/3").unwrap()
        );
        assert!(sup_norm(&vec3(&["0", "0"])).is_zero());
    }

    #[test]
    fn cauchy_schwarz_basics() {
        let e1 = vec3(&["1", "0"]);
        let e2 = vec3(&["0", "1"]);
        assert!(cauchy_schwarz_holds(&e1, &e2).unwrap());
        assert!(cauchy_schwarz_holds(&e1, &e1).unwrap());
    }

    #[test]
    fn empty_vector_rejected() {
        assert_eq!(PAdicVector::new(p3(), vec![]), Err(CoreError::EmptyVector));
    }
}
