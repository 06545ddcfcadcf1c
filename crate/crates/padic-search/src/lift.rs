use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use code_model::{effective_level, CodeVariant, Level, PAdicCode, PairInequality, SeparationSpec};
use padic_core::PAdicVector;

use crate::hensel::symmetric_representative;
use crate::{hensel_lift, ResidueSphereGraph, SearchError};

/// A witness clique lifted to a code.
///
/// Entries are symmetric representatives modulo `p^precision`, so the unit
/// self-product condition holds modulo `p^precision`; `exact` records the
/// vectors for which it holds exactly (the lift stabilized on an integer
/// vector of length one).  When every vector is exact the code carries the
/// full default variant; otherwise the unit self-product requirement is
/// dropped from the variant and the Hensel lift is the proof obligation
/// that an exact code with the same pair values exists.
#[derive(Debug, Clone)]
pub struct LiftedCode {
    pub code: PAdicCode,
    pub exact: Vec<bool>,
    pub precision: u32,
}

impl LiftedCode {
    pub fn all_exact(&self) -> bool {
        self.exact.iter().all(|&e| e)
    }
}

/// Hensel-lifts each witness vertex to modulus `p^precision` and packages
/// the result as a code under `spec`.
///
/// `spec` must be exact with level at least the graph's level (the search
/// driver passes the user's separation; tests pass the graph-level one).
pub fn lift_clique_to_code(
    graph: &ResidueSphereGraph,
    witness: &[usize],
    precision: u32,
    spec: &SeparationSpec,
) -> Result<LiftedCode, SearchError> {
    let p = graph.prime();
    let graph_precision = graph.level() + 1;
    if precision < graph_precision {
        return Err(SearchError::PrecisionTooLow {
            requested: precision,
            required: graph_precision,
        });
    }
    match effective_level(spec, p)? {
        Level::Finite(m) if m < graph.level() => {
            return Err(SearchError::SpecLevelMismatch {
                spec_level: m,
                graph_level: graph.level(),
            })
        }
        Level::Infeasible if witness.len() > 1 => {
            return Err(SearchError::SpecLevelMismatch {
                spec_level: 0,
                graph_level: graph.level(),
            })
        }
        _ => {}
    }
    for pair in witness.windows(2) {
        if pair[1] <= pair[0] {
            return Err(SearchError::BadWitnessIndex(pair[1]));
        }
    }
    for (i, &a) in witness.iter().enumerate() {
        if a >= graph.vertex_count() {
            return Err(SearchError::BadWitnessIndex(a));
        }
        for &b in &witness[i + 1..] {
            if !graph.adjacency().adjacent(a, b) {
                return Err(SearchError::WitnessNotClique);
            }
        }
    }

    let modulus = BigInt::from(p.value()).pow(precision);
    let mut vectors = Vec::with_capacity(witness.len());
    let mut exact = Vec::with_capacity(witness.len());
    for &index in witness {
        let residues: Vec<BigInt> = graph.vertices()[index]
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        let lifted = hensel_lift(p, &residues, graph_precision, precision)?;
        let entries: Vec<BigRational> = lifted
            .iter()
            .map(|c| BigRational::from(symmetric_representative(c, &modulus)))
            .collect();
        let self_product: BigRational = entries.iter().map(|e| e * e).sum();
        exact.push(self_product.is_one());
        vectors.push(PAdicVector::new(p, entries)?);
    }

    let all_exact = exact.iter().all(|&e| e);
    let variant = CodeVariant {
        inequality: PairInequality::Pe,
        require_unit_norm: true,
        require_unit_self_product: all_exact,
    };
    let code = PAdicCode::new(p, graph.dim(), vectors, spec.clone(), variant)?;
    Ok(LiftedCode {
        code,
        exact,
        precision,
    })
}
