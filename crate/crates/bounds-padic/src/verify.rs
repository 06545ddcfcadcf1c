use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use code_model::{off_diagonal_pair_values, validate_code, AbsMultiset, PAdicCode};
use padic_core::padic_inner_product;

use crate::{certificate_bound, CertificateError, PfenderCertificate, PhiFunction};

/// Per-hypothesis outcome of a certificate check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    /// Hypothesis (i): the full double sum of phi over all n^2 pair
    /// values is nonnegative.
    pub sum_nonnegative: bool,
    pub sum_value: BigRational,
    /// Hypothesis (ii) on the occurring off-diagonal values:
    /// `phi(v) + c <= 0` for each of them.
    pub tail_nonpositive: bool,
    /// Off-diagonal values violating hypothesis (ii), with `phi(v) + c`.
    pub tail_violations: Vec<(String, BigRational)>,
    /// Interval form only: `phi(r) + c <= 0` on every piece meeting
    /// `[b, infinity)` (the theorem's literal interval hypothesis).
    pub interval_rule_ok: Option<bool>,
}

/// Outcome of a successful or failed certificate verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub hypotheses: HypothesisReport,
    pub hypotheses_ok: bool,
    /// `(phi(0) + c) / c`, reported only when the hypotheses hold.
    pub bound: Option<BigRational>,
    pub implied_n_cap: Option<BigInt>,
    /// Whether the special case `phi(0) + c <= 1` applies (then also
    /// `n <= 1/c`).
    pub special_case: bool,
    special_cap: Option<BigInt>,
}

impl BoundResult {
    /// `floor(1/c)` when the special case `phi(0) + c <= 1` applies.
    pub fn special_case_cap(&self) -> Option<&BigInt> {
        self.special_cap.as_ref()
    }
}

/// Verifies a certificate against a code: the code must validate under
/// its own variant and satisfy the unit self-product condition exactly
/// (the theorem needs the diagonal pair values to vanish); then the
/// hypotheses are checked exactly over the code's pair values.
pub fn verify_certificate(
    code: &PAdicCode,
    cert: &PfenderCertificate,
) -> Result<BoundResult, CertificateError> {
    let report = validate_code(code);
    if !report.valid {
        let detail = report
            .violations
            .first()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "indeterminate comparisons".to_string());
        return Err(CertificateError::CodeInvalid(detail));
    }
    // the diagonal must vanish even when the variant skipped condition (ii)
    if !code.variant().require_unit_self_product {
        for (index, vector) in code.vectors().iter().enumerate() {
            let value = padic_inner_product(vector, vector).expect("same vector is compatible");
            if !value.is_one() {
                return Err(CertificateError::SelfProductNotUnit {
                    index,
                    value: padic_core::format_rational(value.value()),
                });
            }
        }
    }

    let off = off_diagonal_pair_values(code);
    let tail_start = match code.spec().bound_exact() {
        Some(b) => b,
        // approximate mode: check the rule from the conservative lower
        // end of the threshold enclosure
        None => code.spec().bound_interval().0,
    };
    verify_on_values(code.len(), &off, cert, Some(&tail_start))
}

/// The finite-domain verification on `(n, off-diagonal multiset)` alone,
/// assuming the diagonal values are all zero (which [`verify_certificate`]
/// enforces; callers using lifted representative codes carry the Hensel
/// obligation that an exact code with these pair values exists).
pub fn verify_certificate_on_values(
    n: usize,
    off_values: &AbsMultiset,
    cert: &PfenderCertificate,
) -> Result<BoundResult, CertificateError> {
    verify_on_values(n, off_values, cert, None)
}

fn verify_on_values(
    n: usize,
    off_values: &AbsMultiset,
    cert: &PfenderCertificate,
    tail_start: Option<&BigRational>,
) -> Result<BoundResult, CertificateError> {
    let c = cert.c();
    let phi_zero = cert.phi_zero();

    // hypothesis (i): n * phi(0) + sum over off-diagonal values
    let mut sum = BigRational::from(BigInt::from(n as i64)) * phi_zero;
    for (value, &multiplicity) in off_values {
        let phi = cert
            .eval(value)
            .ok_or_else(|| CertificateError::PhiUndefined(value.to_string()))?;
        sum += phi * BigRational::from(BigInt::from(multiplicity as i64));
    }
    let sum_nonnegative = !sum.is_negative();

    // hypothesis (ii) on every occurring off-diagonal value
    let mut tail_violations = Vec::new();
    for value in off_values.keys() {
        let phi = cert
            .eval(value)
            .ok_or_else(|| CertificateError::PhiUndefined(value.to_string()))?;
        let slack = phi + c;
        if slack.is_positive() {
            tail_violations.push((value.to_string(), slack));
        }
    }
    let tail_nonpositive = tail_violations.is_empty();

    // interval form: the rule itself must be nonpositive (after adding c)
    // on all of [b, infinity), piece by piece
    let interval_rule_ok = match (cert.phi(), tail_start) {
        (PhiFunction::Interval(rule), Some(from)) => Some(
            rule.values_on_tail(from)
                .iter()
                .all(|value| !(*value + c).is_positive()),
        ),
        _ => None,
    };

    let hypotheses_ok =
        sum_nonnegative && tail_nonpositive && interval_rule_ok.unwrap_or(true);

    let (bound, implied_n_cap, special_case, special_cap) = if hypotheses_ok {
        let bound = certificate_bound(cert);
        // internal consistency: replicate the proof chain
        //   c n^2 <= sum + c n^2 <= n (phi(0) + c)
        let n_rat = BigRational::from(BigInt::from(n as i64));
        let cn2 = c * &n_rat * &n_rat;
        let middle = &sum + &cn2;
        assert!(cn2 <= middle, "proof chain: hypothesis (i) must make c n^2 <= sum + c n^2");
        assert!(
            middle <= &n_rat * (phi_zero + c),
            "proof chain: sum + c n^2 <= n (phi(0) + c) must hold when hypotheses pass"
        );
        assert!(
            n_rat <= bound,
            "theorem consistency: code size exceeds the certified bound"
        );
        let special = phi_zero + c <= BigRational::one();
        let special_cap = special.then(|| padic_core::floor_to_int(&(BigRational::one() / c)));
        (
            Some(bound.clone()),
            Some(padic_core::floor_to_int(&bound)),
            special,
            special_cap,
        )
    } else {
        (None, None, false, None)
    };

    Ok(BoundResult {
        hypotheses: HypothesisReport {
            sum_nonnegative,
            sum_value: sum,
            tail_nonpositive,
            tail_violations,
            interval_rule_ok,
        },
        hypotheses_ok,
        bound,
        implied_n_cap,
        special_case,
        special_cap,
    })
}
