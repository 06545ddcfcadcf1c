use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use code_model::AbsMultiset;
use padic_core::PAdicAbs;

use crate::{
    rational_simplex, CertificateError, Constraint, LinearProgram, LpOutcome, PfenderCertificate,
    Relation, Sense,
};

/// Synthesizes the optimal finite-form certificate for a code's
/// off-diagonal pair-value multiset by exact linear programming.
///
/// The constant is normalized to `c = 1` (lossless by scaling
/// invariance); the LP minimizes `phi(0)` subject to
/// `n phi(0) + sum mult(v) phi(v) >= 0` and `phi(v) <= -1`.  For the
/// multiset of a valid code of size n the optimum is exactly `n - 1`, so
/// the certified bound is exactly n — matching the trivial tight
/// certificate, which also witnesses feasibility (an infeasible or
/// unbounded LP here would be an implementation bug, hence a panic).
pub fn synthesize_certificate_lp(
    off_values: &AbsMultiset,
    n: usize,
) -> Result<PfenderCertificate, CertificateError> {
    assert!(n >= 1);
    if off_values.keys().any(|value| value.is_zero()) {
        return Err(CertificateError::ZeroOffDiagonal);
    }
    let distinct: Vec<&PAdicAbs> = off_values.keys().collect();
    let k = distinct.len();

    // variables: x0 = phi(0), x1..xk = phi at each distinct value
    let mut objective = vec![BigRational::zero(); k + 1];
    objective[0] = BigRational::one();

    let mut balance = vec![BigRational::zero(); k + 1];
    balance[0] = BigRational::from(BigInt::from(n as i64));
    for (i, value) in distinct.iter().enumerate() {
        balance[i + 1] = BigRational::from(BigInt::from(off_values[value] as i64));
    }
    let mut constraints = vec![Constraint {
        coefficients: balance,
        relation: Relation::Ge,
        rhs: BigRational::zero(),
    }];
    for i in 0..k {
        let mut coefficients = vec![BigRational::zero(); k + 1];
        coefficients[i + 1] = BigRational::one();
        constraints.push(Constraint {
            coefficients,
            relation: Relation::Le,
            rhs: -BigRational::one(),
        });
    }

    let lp = LinearProgram {
        sense: Sense::Minimize,
        objective,
        constraints,
    };
    let (variables, _objective) = match rational_simplex(&lp) {
        LpOutcome::Optimal {
            variables,
            objective,
        } => (variables, objective),
        other => panic!(
            "certificate synthesis LP must be feasible and bounded \
             (the trivial certificate is a witness), got {other:?}"
        ),
    };

    let zero_key = distinct
        .first()
        .map(|any| PAdicAbs::zero(any.prime()))
        .unwrap_or_else(|| PAdicAbs::zero(padic_core::Prime::new(2).expect("2 is prime")));
    let mut phi = BTreeMap::new();
    phi.insert(zero_key, variables[0].clone());
    for (i, value) in distinct.iter().enumerate() {
        phi.insert(**value, variables[i + 1].clone());
    }
    PfenderCertificate::finite(BigRational::one(), phi)
}
