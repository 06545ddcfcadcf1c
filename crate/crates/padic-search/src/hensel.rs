use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use padic_core::Prime;

use crate::SearchError;

/// Lifts a residue vector on the sphere modulo `p^k_from` to the sphere
/// modulo `p^k_to`, for odd p, by Newton steps on the first coordinate
/// that is a unit modulo p: only that coordinate changes, solving
/// `t^2 = 1 - sum_{i != j} x_i^2` with `t = x_j (mod p^k_from)`.
///
/// Entries are canonical representatives in `[0, p^k_to)`.  The result is
/// the unique such lift, so lifting in stages agrees with lifting directly.
pub fn hensel_lift(
    p: Prime,
    x: &[BigInt],
    k_from: u32,
    k_to: u32,
) -> Result<Vec<BigInt>, SearchError> {
    assert!(p.is_odd(), "hensel_lift requires an odd prime");
    assert!(k_from >= 1 && k_to >= k_from, "need 1 <= k_from <= k_to");
    let p_big = BigInt::from(p.value());
    let from_modulus = p_big.pow(k_from);
    let to_modulus = p_big.pow(k_to);

    let sum_sq: BigInt = x.iter().map(|c| c * c).sum();
    if !(&sum_sq - BigInt::one()).mod_floor(&from_modulus).is_zero() {
        return Err(SearchError::NotOnSphere { precision: k_from });
    }
    let unit = x
        .iter()
        .position(|c| !c.mod_floor(&p_big).is_zero())
        .ok_or(SearchError::NoUnitCoordinate)?;

    let mut lifted: Vec<BigInt> = x.iter().map(|c| c.mod_floor(&to_modulus)).collect();
    // target value for the adjusted coordinate
    let rest_sq: BigInt = lifted
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != unit)
        .map(|(_, c)| c * c)
        .sum();
    let target = (BigInt::one() - rest_sq).mod_floor(&to_modulus);

    let mut t = lifted[unit].mod_floor(&from_modulus);
    let mut precision = k_from;
    while precision < k_to {
        precision = (precision * 2).min(k_to);
        let modulus = p_big.pow(precision);
        // t <- t - (t^2 - target) / (2t)  (mod p^precision)
        let derivative = (BigInt::from(2) * &t).mod_floor(&modulus);
        let inv = mod_inverse(&derivative, &modulus)
            .expect("2t is a unit for odd p and unit t");
        let residual = (&t * &t - &target).mod_floor(&modulus);
        t = (&t - residual * inv).mod_floor(&modulus);
    }
    debug_assert!((&t * &t - &target).mod_floor(&to_modulus).is_zero());
    lifted[unit] = t;
    Ok(lifted)
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let ext = a.extended_gcd(modulus);
    if ext.gcd.is_one() {
        Some(ext.x.mod_floor(modulus))
    } else {
        None
    }
}

/// The symmetric representative of `c mod modulus` in
/// `(-modulus/2, modulus/2]` — for odd moduli the balanced range.
pub(crate) fn symmetric_representative(c: &BigInt, modulus: &BigInt) -> BigInt {
    let c = c.mod_floor(modulus);
    if &c * 2 > *modulus {
        c - modulus
    } else {
        c
    }
}
