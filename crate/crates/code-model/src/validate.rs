use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use padic_core::{abs_p, padic_inner_product, sup_norm, PAdicAbs};

use crate::{CodeVariant, PAdicCode, PairInequality, Verdict};

/// A multiset of p-adic absolute values with multiplicities.
pub type AbsMultiset = BTreeMap<PAdicAbs, usize>;

/// Outcome of one validation condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionOutcome {
    Passed,
    Failed,
    /// Approximate mode: at least one comparison was within tolerance of
    /// the threshold and no comparison failed outright.
    Indeterminate,
    /// Disabled by the code's variant.
    Skipped,
}

impl fmt::Display for ConditionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConditionOutcome::Passed => "pass",
            ConditionOutcome::Failed => "fail",
            ConditionOutcome::Indeterminate => "indeterminate",
            ConditionOutcome::Skipped => "skipped",
        };
        write!(f, "{s}")
    }
}

/// One violated condition with the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `||t_j|| != 1`.
    UnitNorm { index: usize, norm: PAdicAbs },
    /// `<t_j, t_j> != 1`.
    UnitSelfProduct { index: usize, value: BigRational },
    /// Pair separation failed; `value` is `|2 - 2<t_j, t_k>|` (`Pe`) or
    /// `||t_j - t_k||^2` (`Pn`).
    Separation { pair: (usize, usize), value: PAdicAbs },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnitNorm { index, norm } => {
                write!(f, "vector {index}: sup-norm {norm} != 1")
            }
            Violation::UnitSelfProduct { index, value } => write!(
                f,
                "vector {index}: self inner product {} != 1",
                padic_core::format_rational(value)
            ),
            Violation::Separation { pair: (j, k), value } => {
                write!(f, "pair ({j}, {k}): separation value {value} below threshold")
            }
        }
    }
}

/// Full validation outcome: per-condition results plus every violating
/// index or pair (pairs in lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub unit_norm: ConditionOutcome,
    pub unit_self_product: ConditionOutcome,
    pub separation: ConditionOutcome,
    pub violations: Vec<Violation>,
    /// Pairs whose comparison was within tolerance (approximate mode).
    pub indeterminate_pairs: Vec<(usize, usize)>,
}

/// Checks every enabled condition of the code's variant, exactly in exact
/// mode.  All violations are reported, not just the first.
pub fn validate_code(code: &PAdicCode) -> ValidationReport {
    let CodeVariant {
        inequality,
        require_unit_norm,
        require_unit_self_product,
    } = code.variant();

    let mut violations = Vec::new();
    let mut indeterminate_pairs = Vec::new();

    let unit_norm = if require_unit_norm {
        let mut outcome = ConditionOutcome::Passed;
        for (index, v) in code.vectors().iter().enumerate() {
            let norm = sup_norm(v);
            if !norm.is_one() {
                outcome = ConditionOutcome::Failed;
                violations.push(Violation::UnitNorm { index, norm });
            }
        }
        outcome
    } else {
        ConditionOutcome::Skipped
    };

    let unit_self_product = if require_unit_self_product {
        let mut outcome = ConditionOutcome::Passed;
        for (index, v) in code.vectors().iter().enumerate() {
            let value = padic_inner_product(v, v).expect("same vector is compatible");
            if !value.is_one() {
                outcome = ConditionOutcome::Failed;
                violations.push(Violation::UnitSelfProduct {
                    index,
                    value: value.into_value(),
                });
            }
        }
        outcome
    } else {
        ConditionOutcome::Skipped
    };

    let mut separation = ConditionOutcome::Passed;
    let n = code.len();
    for j in 0..n {
        for k in (j + 1)..n {
            let (value, verdict) = match inequality {
                PairInequality::Pe => {
                    let value = pair_abs(code, j, k);
                    let verdict = code.spec().compare_abs(&value);
                    (value, verdict)
                }
                PairInequality::Pn => {
                    let diff = code.vectors()[j]
                        .sub(&code.vectors()[k])
                        .expect("vectors of one code are compatible");
                    let value = sup_norm(&diff).pow(2);
                    let verdict = code.spec().compare_abs(&value);
                    (value, verdict)
                }
            };
            match verdict {
                Verdict::Pass => {}
                Verdict::Fail => {
                    separation = ConditionOutcome::Failed;
                    violations.push(Violation::Separation { pair: (j, k), value });
                }
                Verdict::Indeterminate => {
                    if separation == ConditionOutcome::Passed {
                        separation = ConditionOutcome::Indeterminate;
                    }
                    indeterminate_pairs.push((j, k));
                }
            }
        }
    }

    let all = [unit_norm, unit_self_product, separation];
    let valid = all.iter().all(|c| {
        matches!(c, ConditionOutcome::Passed | ConditionOutcome::Skipped)
    });

    ValidationReport {
        valid,
        unit_norm,
        unit_self_product,
        separation,
        violations,
        indeterminate_pairs,
    }
}

/// `|2 - 2<t_j, t_k>|` for one (ordered) pair.
fn pair_abs(code: &PAdicCode, j: usize, k: usize) -> PAdicAbs {
    let t = padic_inner_product(&code.vectors()[j], &code.vectors()[k])
        .expect("vectors of one code are compatible");
    let two = BigRational::from(BigInt::from(2));
    let value = &two - &two * t.value();
    abs_p(&value, code.prime())
}

/// All `n^2` pair values `|2 - 2<t_j, t_k>|` with multiplicity, diagonal
/// included (the diagonal contributes `n` zeros when the unit self-product
/// condition holds).
pub fn pair_value_multiset(code: &PAdicCode) -> AbsMultiset {
    collect_pair_values(code, true)
}

/// The `n^2 - n` off-diagonal pair values with multiplicity.
pub fn off_diagonal_pair_values(code: &PAdicCode) -> AbsMultiset {
    collect_pair_values(code, false)
}

fn collect_pair_values(code: &PAdicCode, include_diagonal: bool) -> AbsMultiset {
    let n = code.len();
    let mut values = AbsMultiset::new();
    for j in 0..n {
        for k in 0..n {
            if !include_diagonal && j == k {
                continue;
            }
            *values.entry(pair_abs(code, j, k)).or_insert(0) += 1;
        }
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SeparationSpec;
    use padic_core::{PAdicVector, Prime};

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    fn vector(prime: Prime, entries: &[&str]) -> PAdicVector {
        let entries = entries
            .iter()
            .map(|t| padic_core::parse_rational(t).unwrap())
            .collect();
        PAdicVector::new(prime, entries).unwrap()
    }

    fn kissing_code(vectors: Vec<PAdicVector>) -> PAdicCode {
        PAdicCode::new(
            p3(),
            vectors[0].dim(),
            vectors,
            SeparationSpec::kissing(),
            CodeVariant::default(),
        )
        .unwrap()
    }

    #[test]
    fn orthonormal_pair_is_valid() {
        // |2 - 2*0|_3 = |2|_3 = 1 >= 1
        let code = kissing_code(vec![vector(p3(), &["1", "0"]), vector(p3(), &["0", "1"])]);
        let report = validate_code(&code);
        assert!(report.valid, "{report:?}");
        assert_eq!(report.unit_norm, ConditionOutcome::Passed);
        assert_eq!(report.unit_self_product, ConditionOutcome::Passed);
        assert_eq!(report.separation, ConditionOutcome::Passed);
    }

    #[test]
    fn duplicated_vector_is_invalid() {
        let v = vector(p3(), &["1", "0"]);
        let code = kissing_code(vec![v.clone(), v]);
        let report = validate_code(&code);
        assert!(!report.valid);
        assert_eq!(
            report.violations,
            vec![Violation::Separation {
                pair: (0, 1),
                value: PAdicAbs::zero(p3()),
            }]
        );
    }

    #[test]
    fn single_vector_is_valid_for_any_spec() {
        let spec = SeparationSpec::exact(padic_core::parse_rational("-1").unwrap()).unwrap();
        let code = PAdicCode::new(
            p3(),
            2,
            vec![vector(p3(), &["1", "0"])],
            spec,
            CodeVariant::default(),
        )
        .unwrap();
        assert!(validate_code(&code).valid);
    }

    #[test]
    fn non_integral_entry_flagged_by_unit_norm() {
        // |1/3|_3 = 3 breaks ||t|| = 1
        let code = kissing_code(vec![vector(p3(), &["1/3", "0"]), vector(p3(), &["0", "1"])]);
        let report = validate_code(&code);
        assert!(!report.valid);
        assert!(matches!(
            report.violations[0],
            Violation::UnitNorm { index: 0, .. }
        ));
    }

    #[test]
    fn multiset_counts() {
        // the four-vector code {e1, -e1, e2, -e2}: 4 zeros + 12 ones
        let code = kissing_code(vec![
            vector(p3(), &["1", "0"]),
            vector(p3(), &["-1", "0"]),
            vector(p3(), &["0", "1"]),
            vector(p3(), &["0", "-1"]),
        ]);
        assert!(validate_code(&code).valid);
        let all = pair_value_multiset(&code);
        assert_eq!(all.get(&PAdicAbs::zero(p3())), Some(&4));
        assert_eq!(all.get(&PAdicAbs::one(p3())), Some(&12));
        assert_eq!(all.values().sum::<usize>(), 16);
        let off = off_diagonal_pair_values(&code);
        assert_eq!(off.get(&PAdicAbs::one(p3())), Some(&12));
        assert_eq!(off.values().sum::<usize>(), 12);
    }

    #[test]
    fn singleton_multiset_is_one_zero() {
        let code = kissing_code(vec![vector(p3(), &["1", "0"])]);
        let all = pair_value_multiset(&code);
        assert_eq!(all.get(&PAdicAbs::zero(p3())), Some(&1));
        assert_eq!(all.values().sum::<usize>(), 1);
    }

    #[test]
    fn pn_variant_accepts_pe_codes() {
        let pn = CodeVariant {
            inequality: PairInequality::Pn,
            ..CodeVariant::default()
        };
        let code = kissing_code(vec![vector(p3(), &["1", "0"]), vector(p3(), &["0", "1"])]);
        assert!(validate_code(&code.with_variant(pn)).valid);
    }

    #[test]
    fn validation_is_permutation_invariant() {
        let vs = vec![
            vector(p3(), &["1", "0"]),
            vector(p3(), &["0", "1"]),
            vector(p3(), &["-1", "0"]),
        ];
        let report = validate_code(&kissing_code(vs.clone()));
        let mut permuted = vs;
        permuted.rotate_left(1);
        let report_perm = validate_code(&kissing_code(permuted));
        assert_eq!(report.valid, report_perm.valid);
    }
}
