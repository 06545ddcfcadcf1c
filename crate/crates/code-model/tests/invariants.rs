//! Cross-condition invariants on fuzzed codes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use code_model::{
    effective_level, validate_code, CodeVariant, Level, PAdicCode, PairInequality, SeparationSpec,
};
use padic_core::{abs_p, padic_inner_product, sup_norm, PAdicVector, Prime};

fn odd_primes() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![3u64, 5, 7]).prop_map(|p| Prime::new(p).unwrap())
}

fn rationals() -> impl Strategy<Value = BigRational> {
    (-60i64..60, 1i64..12).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Stereographic image of w in Q^2: self inner product is exactly one.
fn unit_vector(p: Prime, w: &BigRational) -> PAdicVector {
    let one = BigRational::one();
    let two = BigRational::from(BigInt::from(2));
    let s = w * w;
    let denom = &one + &s;
    PAdicVector::new(p, vec![(&one - &s) / &denom, &two * w / &denom]).unwrap()
}

fn code(p: Prime, ws: &[BigRational], cos_theta: BigRational, variant: CodeVariant) -> PAdicCode {
    let vectors: Vec<PAdicVector> = ws.iter().map(|w| unit_vector(p, w)).collect();
    PAdicCode::new(
        p,
        2,
        vectors,
        SeparationSpec::exact(cos_theta).unwrap(),
        variant,
    )
    .unwrap()
}

proptest! {
    /// ||t_j - t_k||^2 >= |2 - 2<t_j, t_k>| for unit self-product vectors,
    /// so validity under Pe implies validity under Pn with the same spec.
    #[test]
    fn pe_implies_pn((p, ws, c) in (odd_primes(), prop::collection::vec(rationals(), 2..5),
                                    (-4i64..=4).prop_map(|n| BigRational::new(BigInt::from(n), BigInt::from(4))))) {
        let pe_code = code(p, &ws, c.clone(), CodeVariant::default());
        let pn_code = code(p, &ws, c, CodeVariant {
            inequality: PairInequality::Pn,
            ..CodeVariant::default()
        });

        // pairwise inequality between the two pair values, unconditionally
        for j in 0..ws.len() {
            for k in (j + 1)..ws.len() {
                let vj = &pe_code.vectors()[j];
                let vk = &pe_code.vectors()[k];
                let diff = vj.sub(vk).unwrap();
                let dist_sq = sup_norm(&diff).pow(2);
                let t = padic_inner_product(vj, vk).unwrap();
                let two = BigRational::from(BigInt::from(2));
                let pe_value = abs_p(&(&two - &two * t.value()), p);
                prop_assert!(dist_sq >= pe_value);
            }
        }

        // one-directional implication at the report level
        if validate_code(&pe_code).valid {
            prop_assert!(validate_code(&pn_code).valid);
        }
    }

    /// For odd p at level m*, the pair condition is equivalent to
    /// <t_j, t_k> not being 1 modulo p^(m*+1), for Z_p-valued inner
    /// products.  Cross-checked against the direct |.|_p evaluation.
    #[test]
    fn level_residue_equivalence((p, ws, m) in (odd_primes(), prop::collection::vec(rationals(), 2..4), 0u32..3)) {
        // spec with b = p^-m exactly: cos_theta = (2 - p^-m) / 2
        let p_pow = BigRational::new(BigInt::one(), BigInt::from(p.value()).pow(m));
        let two = BigRational::from(BigInt::from(2));
        let cos_theta = (&two - &p_pow) / &two;
        let spec = SeparationSpec::exact(cos_theta).unwrap();
        prop_assert_eq!(effective_level(&spec, p).unwrap(), Level::Finite(m));

        let modulus = BigInt::from(p.value()).pow(m + 1);
        for j in 0..ws.len() {
            for k in (j + 1)..ws.len() {
                let t = padic_inner_product(&unit_vector(p, &ws[j]), &unit_vector(p, &ws[k])).unwrap();
                let value = abs_p(&(&two - &two * t.value()), p);
                let direct = value.cmp_rational(&p_pow) != std::cmp::Ordering::Less;
                // the residue route needs t integral at p
                if let Some(residue) = padic_core::rational_mod(t.value(), &modulus) {
                    let via_residue = residue != BigInt::one();
                    prop_assert_eq!(direct, via_residue);
                }
            }
        }
    }
}
