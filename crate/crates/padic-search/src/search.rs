use num_bigint::BigInt;
use num_rational::BigRational;

use code_model::{
    effective_level, validate_code, CodeVariant, Level, PAdicCode, SeparationSpec,
};
use padic_core::{PAdicVector, Prime};

use crate::hensel::symmetric_representative;
use crate::{
    build_residue_graph, lift_clique_to_code, max_clique, BitGraph, CliqueResult, LiftedCode,
    SearchError, DEFAULT_BUDGET,
};

/// Knobs for the search driver.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Cap on the enumerated candidate space `p^((m*+1)d)`.
    pub budget: u64,
    /// Lift witnesses to modulus `p^precision`.
    pub precision: u32,
    /// Worker threads for the clique search (results are identical for
    /// every thread count).
    pub threads: usize,
    /// Build the graph at this level instead of the derived one.  The
    /// derived level is the sound choice; overriding is a diagnostic tool.
    pub level_override: Option<u32>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            precision: 6,
            threads: 1,
            level_override: None,
        }
    }
}

/// The exact maximum code size, or `Unbounded` when the separation
/// threshold is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSize {
    Finite(usize),
    Unbounded,
}

/// Everything a search run reports.  `lower_bound_only` marks the mod-2^K
/// enumerate-and-validate mode, which cannot certify maximality.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub prime: Prime,
    pub dim: usize,
    pub level: Level,
    pub vertices: usize,
    pub edges: usize,
    pub size: SearchSize,
    pub witness: Option<LiftedCode>,
    pub node_count: u64,
    pub lower_bound_only: bool,
}

/// Exact maximal code size for an odd prime: derives the level, builds the
/// residue graph, runs the clique search, and lifts the witness.
pub fn search_max_code(
    p: Prime,
    dim: usize,
    spec: &SeparationSpec,
    config: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    if !p.is_odd() {
        return Err(SearchError::EvenPrimeUnsupported);
    }
    let derived = effective_level(spec, p)?;
    let level = match (config.level_override, derived) {
        (Some(level), _) => level,
        (None, Level::Finite(level)) => level,
        (None, Level::Unbounded) => {
            return Ok(SearchReport {
                prime: p,
                dim,
                level: Level::Unbounded,
                vertices: 0,
                edges: 0,
                size: SearchSize::Unbounded,
                witness: None,
                node_count: 0,
                lower_bound_only: false,
            })
        }
        (None, Level::Infeasible) => {
            // no two vectors can be separated: the singleton e_1 is the
            // maximum, and it is valid for any spec
            let witness = singleton_code(p, dim, spec)?;
            return Ok(SearchReport {
                prime: p,
                dim,
                level: Level::Infeasible,
                vertices: 0,
                edges: 0,
                size: SearchSize::Finite(1),
                witness: Some(witness),
                node_count: 0,
                lower_bound_only: false,
            });
        }
    };

    let graph = build_residue_graph(p, dim, level, config.budget)?;
    let clique = max_clique(&graph, config.threads);
    let precision = config.precision.max(level + 1);
    let witness = lift_clique_to_code(&graph, &clique.witness, precision, spec)?;
    debug_assert!(validate_code(&witness.code).valid);
    Ok(SearchReport {
        prime: p,
        dim,
        level: Level::Finite(level),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        size: SearchSize::Finite(clique.size),
        witness: Some(witness),
        node_count: clique.node_count,
        lower_bound_only: false,
    })
}

/// The p-adic kissing number (`theta = pi/3`, so `b = 1` and the level is
/// zero) for an odd prime.
pub fn kissing_number(p: Prime, dim: usize, config: &SearchConfig) -> Result<CliqueResult, SearchError> {
    if !p.is_odd() {
        return Err(SearchError::EvenPrimeUnsupported);
    }
    let graph = build_residue_graph(p, dim, 0, config.budget)?;
    Ok(max_clique(&graph, config.threads))
}

/// Lower bounds for `p = 2` by enumerate-and-validate: candidates are the
/// sphere solutions modulo `2^k` taken as symmetric integer vectors, kept
/// when they pass the enabled per-vector conditions exactly; pairs are
/// compared exactly under the spec.  The result is a valid code, hence a
/// lower bound — maximality over Q_2^d is not claimed.
pub fn p2_lower_bound(
    dim: usize,
    spec: &SeparationSpec,
    variant: CodeVariant,
    k: u32,
    config: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    let p = Prime::new(2).expect("2 is prime");
    let modulus: u128 = 1u128 << k;
    let needed = modulus.checked_pow(dim as u32);
    match needed {
        Some(n) if n <= config.budget as u128 => {}
        _ => {
            return Err(SearchError::BudgetExceeded {
                needed: needed.unwrap_or(u128::MAX),
                budget: config.budget,
            })
        }
    }

    // enumerate sphere solutions mod 2^k, lift symmetrically, and keep
    // vectors passing the enabled per-vector conditions exactly
    let big_modulus = BigInt::from(2).pow(k);
    let m = modulus as u64;
    let mut candidates: Vec<PAdicVector> = Vec::new();
    let mut x = vec![0u64; dim];
    loop {
        let sum = x
            .iter()
            .fold(0u128, |acc, &c| (acc + (c as u128) * (c as u128)) % m as u128);
        if sum == 1 % m as u128 {
            let entries: Vec<BigRational> = x
                .iter()
                .map(|&c| {
                    BigRational::from(symmetric_representative(&BigInt::from(c), &big_modulus))
                })
                .collect();
            let v = PAdicVector::new(p, entries)?;
            let singleton = PAdicCode::new(p, dim, vec![v.clone()], spec.clone(), variant)?;
            if validate_code(&singleton).valid {
                candidates.push(v);
            }
        }
        let mut i = dim;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            x[i] += 1;
            if x[i] < m {
                break;
            }
            x[i] = 0;
        }
        if x.iter().all(|&c| c == 0) {
            break;
        }
    }

    if candidates.is_empty() {
        return Ok(SearchReport {
            prime: p,
            dim,
            level: effective_level(spec, p)?,
            vertices: 0,
            edges: 0,
            size: SearchSize::Finite(0),
            witness: None,
            node_count: 0,
            lower_bound_only: true,
        });
    }

    // admissible-pair graph under exact validation
    let mut adjacency = BitGraph::new(candidates.len());
    for a in 0..candidates.len() {
        for b in (a + 1)..candidates.len() {
            let pair = PAdicCode::new(
                p,
                dim,
                vec![candidates[a].clone(), candidates[b].clone()],
                spec.clone(),
                variant,
            )?;
            if validate_code(&pair).valid {
                adjacency.add_edge(a, b);
            }
        }
    }
    let clique = crate::clique::max_clique_adjacency(&adjacency, config.threads);
    let vectors: Vec<PAdicVector> = clique
        .witness
        .iter()
        .map(|&i| candidates[i].clone())
        .collect();
    let exact = vectors.len();
    let code = PAdicCode::new(p, dim, vectors, spec.clone(), variant)?;
    debug_assert!(validate_code(&code).valid);
    Ok(SearchReport {
        prime: p,
        dim,
        level: effective_level(spec, p)?,
        vertices: adjacency.len(),
        edges: adjacency.edge_count(),
        size: SearchSize::Finite(clique.size),
        witness: Some(LiftedCode {
            code,
            exact: vec![true; exact],
            precision: k,
        }),
        node_count: clique.node_count,
        lower_bound_only: true,
    })
}

fn singleton_code(p: Prime, dim: usize, spec: &SeparationSpec) -> Result<LiftedCode, SearchError> {
    let vector = PAdicVector::standard_basis(p, dim, 0);
    let code = PAdicCode::new(p, dim, vec![vector], spec.clone(), CodeVariant::default())?;
    Ok(LiftedCode {
        code,
        exact: vec![true],
        precision: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn kissing_numbers_small() {
        let config = SearchConfig::default();
        assert_eq!(kissing_number(p(3), 2, &config).unwrap().size, 4);
        assert_eq!(kissing_number(p(5), 2, &config).unwrap().size, 4);
        assert_eq!(kissing_number(p(3), 1, &config).unwrap().size, 2);
    }

    #[test]
    fn kissing_rejects_p2() {
        assert_eq!(
            kissing_number(p(2), 2, &SearchConfig::default()).unwrap_err(),
            SearchError::EvenPrimeUnsupported
        );
    }

    #[test]
    fn infeasible_separation_gives_singleton() {
        // cos_theta = -1/2: b = 3 > 1
        let spec = SeparationSpec::exact(padic_core::parse_rational("-1/2").unwrap()).unwrap();
        let report = search_max_code(p(3), 2, &spec, &SearchConfig::default()).unwrap();
        assert_eq!(report.level, Level::Infeasible);
        assert_eq!(report.size, SearchSize::Finite(1));
        let witness = report.witness.unwrap();
        assert!(validate_code(&witness.code).valid);
    }

    #[test]
    fn unbounded_separation_reported() {
        let spec = SeparationSpec::exact(padic_core::parse_rational("1").unwrap()).unwrap();
        let report = search_max_code(p(3), 2, &spec, &SearchConfig::default()).unwrap();
        assert_eq!(report.size, SearchSize::Unbounded);
    }

    #[test]
    fn search_report_round_trip_valid() {
        let report =
            search_max_code(p(3), 2, &SeparationSpec::kissing(), &SearchConfig::default())
                .unwrap();
        assert_eq!(report.size, SearchSize::Finite(4));
        let witness = report.witness.unwrap();
        assert!(witness.all_exact());
        assert!(validate_code(&witness.code).valid);
    }

    #[test]
    fn p2_mode_reports_lower_bound() {
        let report = p2_lower_bound(
            2,
            &SeparationSpec::kissing(),
            CodeVariant::default(),
            4,
            &SearchConfig::default(),
        )
        .unwrap();
        assert!(report.lower_bound_only);
        // kissing separation b = 1 exceeds |2 - 2t|_2 <= 1/2 for every
        // integral pair, so only singletons survive
        assert_eq!(report.size, SearchSize::Finite(1));
    }
}
