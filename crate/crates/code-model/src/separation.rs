use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use padic_core::{PAdicAbs, Prime};

use crate::ModelError;

/// Decimal exponent of the comparison tolerance in approximate mode:
/// values within `10^-30` of the threshold are reported as indeterminate
/// rather than silently decided.
pub const COMPARISON_TOLERANCE_EXP: u32 = 30;

// The cosine enclosure is computed well below the comparison tolerance so
// that the tolerance, not the enclosure width, decides borderline cases.
const COS_TARGET_EXP: u32 = 40;

/// The angular separation of a code, deriving the pair threshold
/// `b = 2(1 - cos(theta))`.
///
/// Exact mode carries a rational `cos(theta)` and every comparison against
/// `b` is exact. Approximate mode carries `theta` itself (in radians, as an
/// exact rational read from a decimal literal); `b` is then known only as a
/// high-precision enclosure and comparisons near the threshold are
/// indeterminate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparationSpec {
    Exact { cos_theta: BigRational },
    Approximate { theta: BigRational },
}

/// Outcome of a threshold comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Approximate mode only: within tolerance of the threshold.
    Indeterminate,
}

impl SeparationSpec {
    pub fn exact(cos_theta: BigRational) -> Result<Self, ModelError> {
        let one = BigRational::one();
        if cos_theta > one || cos_theta < -one.clone() {
            return Err(ModelError::CosThetaOutOfRange(
                padic_core::format_rational(&cos_theta),
            ));
        }
        Ok(SeparationSpec::Exact { cos_theta })
    }

    /// The kissing preset `theta = pi/3`: `cos(theta) = 1/2`, `b = 1`.
    pub fn kissing() -> Self {
        SeparationSpec::Exact {
            cos_theta: BigRational::new(BigInt::one(), BigInt::from(2)),
        }
    }

    /// Approximate mode for irrational angles; `theta` is radians in
    /// `[0, 2*pi)` (the upper boundary is enforced against a 37-digit
    /// lower bound of `2*pi`).
    pub fn approximate(theta: BigRational) -> Result<Self, ModelError> {
        if theta.is_negative() || theta > two_pi_lower() {
            return Err(ModelError::ThetaOutOfRange(padic_core::format_rational(
                &theta,
            )));
        }
        Ok(SeparationSpec::Approximate { theta })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SeparationSpec::Exact { .. })
    }

    /// The exact threshold `b = 2(1 - cos(theta))` in exact mode.
    pub fn bound_exact(&self) -> Option<BigRational> {
        match self {
            SeparationSpec::Exact { cos_theta } => {
                let two = BigRational::from(BigInt::from(2));
                Some(&two - &two * cos_theta)
            }
            SeparationSpec::Approximate { .. } => None,
        }
    }

    /// An enclosure `[lo, hi]` of the threshold; exact mode returns a
    /// zero-width interval.
    pub fn bound_interval(&self) -> (BigRational, BigRational) {
        match self {
            SeparationSpec::Exact { .. } => {
                let b = self.bound_exact().expect("exact mode");
                (b.clone(), b)
            }
            SeparationSpec::Approximate { theta } => {
                let (cos_lo, cos_hi) = cos_enclosure(theta, COS_TARGET_EXP);
                let two = BigRational::from(BigInt::from(2));
                (&two - &two * &cos_hi, &two - &two * &cos_lo)
            }
        }
    }

    /// Compares a pair value (as an exact p-adic absolute value) against
    /// the threshold: `Pass` when `value >= b`.
    pub fn compare_abs(&self, value: &PAdicAbs) -> Verdict {
        self.compare_value(&value.to_rational())
    }

    /// Compares an exact rational against the threshold (`Pass` when
    /// `value >= b`).  In approximate mode, values within `10^-30` of the
    /// threshold enclosure are `Indeterminate`.
    pub fn compare_value(&self, value: &BigRational) -> Verdict {
        match self {
            SeparationSpec::Exact { .. } => {
                let b = self.bound_exact().expect("exact mode");
                if *value >= b {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                }
            }
            SeparationSpec::Approximate { .. } => {
                let (lo, hi) = self.bound_interval();
                let tol = tolerance();
                if *value >= &hi + &tol {
                    Verdict::Pass
                } else if *value < &lo - &tol {
                    Verdict::Fail
                } else {
                    Verdict::Indeterminate
                }
            }
        }
    }
}

impl fmt::Display for SeparationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeparationSpec::Exact { cos_theta } => {
                write!(f, "cos_theta {}", padic_core::format_rational(cos_theta))
            }
            SeparationSpec::Approximate { theta } => {
                write!(f, "theta ~ {}", padic_core::format_rational(theta))
            }
        }
    }
}

fn tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(COMPARISON_TOLERANCE_EXP))
}

fn two_pi_lower() -> BigRational {
    // 2*pi rounded down at the 37th decimal
    BigRational::new(
        "62831853071795864769252867665590057683"
            .parse::<BigInt>()
            .unwrap(),
        BigInt::from(10).pow(37u32),
    )
}

/// Encloses `cos(theta)` by the alternating Taylor series; the returned
/// interval has width at most `2 * 10^-target_exp`.  Requires
/// `0 <= theta < 2*pi`, where the series terms decrease from `k = 3` on.
fn cos_enclosure(theta: &BigRational, target_exp: u32) -> (BigRational, BigRational) {
    let theta_sq = theta * theta;
    let eps = BigRational::new(BigInt::one(), BigInt::from(10).pow(target_exp));
    let mut sum = BigRational::one();
    let mut term = BigRational::one(); // |theta^(2k) / (2k)!|
    let mut k = 0u32;
    loop {
        k += 1;
        let denom = BigInt::from(2 * k - 1) * BigInt::from(2 * k);
        term = term * &theta_sq / BigRational::from(denom);
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        // once terms decrease, the truncation error is below the next term
        if k >= 3 && term < eps {
            break;
        }
    }
    (&sum - &term, &sum + &term)
}

/// The separation level: the largest `m* >= 0` such that the pair
/// condition `|2 - 2t| >= b` is equivalent to `v_p(1 - t) <= m*` for
/// integral inner products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Finite(u32),
    /// `b = 0`: every distinct pair is admissible.
    Unbounded,
    /// `b` exceeds the largest attainable pair value (`1` for odd p,
    /// `1/2` for `p = 2`): no code with two or more vectors exists.
    Infeasible,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(m) => write!(f, "{m}"),
            Level::Unbounded => write!(f, "unbounded"),
            Level::Infeasible => write!(f, "infeasible"),
        }
    }
}

/// Converts the separation threshold into a valuation level for the given
/// prime: `p^(-m*) >= b > p^(-m*-1)` for odd p.  For `p = 2` the factor
/// `|2|_2 = 1/2` shifts the computation (`|2 - 2t| = |1 - t| / 2`), so the
/// defining inequality is `2^(-m*-1) >= b > 2^(-m*-2)` and the problem is
/// infeasible for `b > 1/2`.
///
/// Requires exact mode: the level compares `b` against the discrete set of
/// prime powers, which is only meaningful exactly.
pub fn effective_level(spec: &SeparationSpec, p: Prime) -> Result<Level, ModelError> {
    let b = spec
        .bound_exact()
        .ok_or(ModelError::ApproximateModeUnsupported("effective_level"))?;
    if b.is_zero() {
        return Ok(Level::Unbounded);
    }
    let shift: u32 = if p.is_odd() { 0 } else { 1 };
    let p_big = BigInt::from(p.value());
    // infeasible when b > p^-shift, i.e. b_num * p^shift > b_den
    if b.numer() * p_big.pow(shift) > *b.denom() {
        return Ok(Level::Infeasible);
    }
    // largest m with b_num * p^(m + shift) <= b_den
    let mut m = 0u32;
    let mut lhs = b.numer() * p_big.pow(shift);
    loop {
        let next = &lhs * &p_big;
        if next > *b.denom() {
            return Ok(Level::Finite(m));
        }
        lhs = next;
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn rat(text: &str) -> BigRational {
        padic_core::parse_rational(text).unwrap()
    }

    #[test]
    fn kissing_preset() {
        let spec = SeparationSpec::kissing();
        assert_eq!(spec.bound_exact().unwrap(), rat("1"));
    }

    #[test]
    fn cos_theta_range_checked() {
        assert!(SeparationSpec::exact(rat("1")).is_ok());
        assert!(SeparationSpec::exact(rat("-1")).is_ok());
        assert!(SeparationSpec::exact(rat("3/2")).is_err());
        assert!(SeparationSpec::exact(rat("-3/2")).is_err());
    }

    #[test]
    fn level_examples() {
        // p = 3, b = 1 (kissing): 3^0 >= 1 > 3^-1
        let kissing = SeparationSpec::kissing();
        assert_eq!(effective_level(&kissing, p(3)).unwrap(), Level::Finite(0));
        // p = 3, b = 3/2 > 1: infeasible for odd p
        let wide = SeparationSpec::exact(rat("1/4")).unwrap();
        assert_eq!(wide.bound_exact().unwrap(), rat("3/2"));
        assert_eq!(effective_level(&wide, p(3)).unwrap(), Level::Infeasible);
        // p = 2, b = 1/2: the |2|_2 shift gives m* = 0
        let half = SeparationSpec::exact(rat("3/4")).unwrap();
        assert_eq!(half.bound_exact().unwrap(), rat("1/2"));
        assert_eq!(effective_level(&half, p(2)).unwrap(), Level::Finite(0));
        // p = 2, kissing b = 1 > 1/2: infeasible
        assert_eq!(effective_level(&kissing, p(2)).unwrap(), Level::Infeasible);
        // b = 0: every distinct pair admissible
        let zero = SeparationSpec::exact(rat("1")).unwrap();
        assert_eq!(effective_level(&zero, p(3)).unwrap(), Level::Unbounded);
        // deeper level: p = 3, b = 1/9 exactly
        let deep = SeparationSpec::exact(rat("17/18")).unwrap();
        assert_eq!(deep.bound_exact().unwrap(), rat("1/9"));
        assert_eq!(effective_level(&deep, p(3)).unwrap(), Level::Finite(2));
        // strictly between powers: b = 1/2 for p = 3 gives m* = 0
        assert_eq!(effective_level(&half, p(3)).unwrap(), Level::Finite(0));
    }

    #[test]
    fn exact_comparison() {
        let spec = SeparationSpec::kissing();
        assert_eq!(spec.compare_value(&rat("1")), Verdict::Pass);
        assert_eq!(spec.compare_value(&rat("1/3")), Verdict::Fail);
        assert_eq!(spec.compare_value(&rat("3")), Verdict::Pass);
    }

    #[test]
    fn cos_enclosure_is_tight_and_correct() {
        // cos(1) lies in [r, r + 10^-19) for the 19-digit truncation r
        let (lo, hi) = cos_enclosure(&rat("1"), 40);
        let truncated = rat("5403023058681397174/10000000000000000000");
        assert!(lo <= &truncated + rat("1/10000000000000000000"));
        assert!(truncated <= hi);
        let width = &hi - &lo;
        assert!(width < rat("1/1000000000000000000000000000000000000000"));
        // cos(0) = 1
        let (lo0, hi0) = cos_enclosure(&rat("0"), 40);
        assert!(lo0 <= rat("1") && rat("1") <= hi0);
    }

    #[test]
    fn approximate_mode_boundary_is_indeterminate() {
        // theta given as a 35-digit decimal approximation of pi/3: the
        // derived b is within 10^-30 of 1, so comparing the exact pair
        // value 1 must be indeterminate.
        let pi_third = rat("10471975511965977461542144610931676/10000000000000000000000000000000000");
        let spec = SeparationSpec::approximate(pi_third).unwrap();
        assert_eq!(spec.compare_value(&rat("1")), Verdict::Indeterminate);
        // values far from the threshold are decided
        assert_eq!(spec.compare_value(&rat("3")), Verdict::Pass);
        assert_eq!(spec.compare_value(&rat("1/3")), Verdict::Fail);
    }

    #[test]
    fn approximate_mode_coarse_angle_is_decided() {
        // a 16-digit approximation of pi/3 sits ~1e-17 away from the exact
        // angle, far outside the 1e-30 tolerance, so the comparison of the
        // exact value 1 is decided (cos > 1/2 means b < 1).
        let coarse = rat("10471975511965977/10000000000000000");
        let spec = SeparationSpec::approximate(coarse).unwrap();
        assert_eq!(spec.compare_value(&rat("1")), Verdict::Pass);
    }

    #[test]
    fn theta_range_checked() {
        assert!(SeparationSpec::approximate(rat("0")).is_ok());
        assert!(SeparationSpec::approximate(rat("-1/2")).is_err());
        assert!(SeparationSpec::approximate(rat("7")).is_err());
    }
}
