//! Reduction soundness: cliques lift to valid codes, valid codes reduce
//! to cliques, and the production clique search agrees with the
//! independent exhaustive oracle.

use num_bigint::BigInt;
use num_rational::BigRational;

use code_model::{
    effective_level, off_diagonal_pair_values, validate_code, Level, SeparationSpec,
};
use padic_core::{ExtendedInt, Prime};
use padic_search::{
    build_residue_graph, hensel_lift, lift_clique_to_code, max_clique, oracle, SearchConfig,
    DEFAULT_BUDGET,
};

fn prime(v: u64) -> Prime {
    Prime::new(v).unwrap()
}

/// Separation with threshold exactly `p^-m`: `cos_theta = (2 - p^-m)/2`.
fn level_spec(p: Prime, m: u32) -> SeparationSpec {
    let p_pow = BigRational::new(BigInt::from(1), BigInt::from(p.value()).pow(m));
    let two = BigRational::from(BigInt::from(2));
    let spec = SeparationSpec::exact((&two - &p_pow) / &two).unwrap();
    assert_eq!(effective_level(&spec, p).unwrap(), Level::Finite(m));
    spec
}

#[test]
fn oracle_equivalence_small_instances() {
    for p in [3u64, 5, 7] {
        for d in [1usize, 2] {
            for m in [0u32, 1] {
                let p = prime(p);
                let spec = level_spec(p, m);
                let graph = build_residue_graph(p, d, m, DEFAULT_BUDGET).unwrap();
                let clique = max_clique(&graph, 1);
                let oracle_size =
                    oracle::exhaustive_max_code(p, d, &spec, DEFAULT_BUDGET).unwrap();
                assert_eq!(
                    clique.size,
                    oracle_size,
                    "disagreement at p={} d={d} m={m}",
                    p.value()
                );
            }
        }
    }
}

#[test]
fn cliques_lift_to_valid_codes() {
    for (p, d, m) in [(3u64, 2usize, 0u32), (3, 3, 1), (5, 2, 1), (7, 2, 0)] {
        let p = prime(p);
        let spec = level_spec(p, m);
        let graph = build_residue_graph(p, d, m, DEFAULT_BUDGET).unwrap();
        let clique = max_clique(&graph, 1);
        let lifted = lift_clique_to_code(&graph, &clique.witness, 6, &spec).unwrap();
        let report = validate_code(&lifted.code);
        assert!(report.valid, "p={} d={d} m={m}: {report:?}", p.value());
        assert_eq!(lifted.code.len(), clique.size);

        // every off-diagonal pair value has valuation exponent <= m*
        for value in off_diagonal_pair_values(&lifted.code).keys() {
            match value.exponent() {
                ExtendedInt::Finite(e) => assert!(e <= i64::from(m)),
                ExtendedInt::PlusInfinity => panic!("zero pair value in a witness code"),
            }
        }
    }
}

/// Valid codes reduce injectively to cliques: entries are p-integral,
/// distinct vectors have distinct residues, and the residues are pairwise
/// adjacent in the residue-sphere graph.
#[test]
fn valid_codes_reduce_to_cliques() {
    for (p, d, m) in [(3u64, 2usize, 0u32), (5, 2, 0), (3, 2, 1)] {
        let p = prime(p);
        let spec = level_spec(p, m);
        let graph = build_residue_graph(p, d, m, DEFAULT_BUDGET).unwrap();
        let clique = max_clique(&graph, 1);
        // use a lifted witness as the "given" valid code, then reduce it back
        let lifted = lift_clique_to_code(&graph, &clique.witness, 6, &spec).unwrap();
        let modulus = BigInt::from(p.value()).pow(m + 1);

        let mut residues: Vec<Vec<u64>> = Vec::new();
        for vector in lifted.code.vectors() {
            let residue: Vec<u64> = vector
                .entries()
                .iter()
                .map(|e| {
                    let r = padic_core::rational_mod(e, &modulus)
                        .expect("valid code entries are p-integral");
                    u64::try_from(&r).unwrap()
                })
                .collect();
            residues.push(residue);
        }
        // injectivity
        let mut dedup = residues.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), residues.len());
        // each residue is a graph vertex and the image is a clique
        let indices: Vec<usize> = residues
            .iter()
            .map(|r| {
                graph
                    .vertices()
                    .iter()
                    .position(|v| v == r)
                    .expect("reduced vector is a sphere solution")
            })
            .collect();
        for (i, &a) in indices.iter().enumerate() {
            for &b in &indices[i + 1..] {
                assert!(graph.adjacency().adjacent(a, b));
            }
        }
    }
}

#[test]
fn witness_determinism_across_threads() {
    for (p, d, m) in [(3u64, 3usize, 1u32), (7, 2, 1)] {
        let p = prime(p);
        let graph = build_residue_graph(p, d, m, DEFAULT_BUDGET).unwrap();
        let baseline = max_clique(&graph, 1);
        for threads in [2usize, 8] {
            assert_eq!(max_clique(&graph, threads), baseline);
        }
    }
}

#[test]
fn hensel_idempotence_on_graph_vertices() {
    let p = prime(5);
    let graph = build_residue_graph(p, 3, 0, DEFAULT_BUDGET).unwrap();
    for vertex in graph.vertices().iter().take(10) {
        let x: Vec<BigInt> = vertex.iter().map(|&c| BigInt::from(c)).collect();
        let direct = hensel_lift(p, &x, 1, 6).unwrap();
        let staged = hensel_lift(p, &hensel_lift(p, &x, 1, 3).unwrap(), 3, 6).unwrap();
        assert_eq!(direct, staged);
    }
}

#[test]
fn kissing_number_matches_oracle() {
    let config = SearchConfig::default();
    for (p, d, expected) in [(3u64, 2usize, 4usize), (5, 2, 4), (3, 1, 2), (7, 2, 8)] {
        let p = prime(p);
        let clique = padic_search::kissing_number(p, d, &config).unwrap();
        assert_eq!(clique.size, expected);
        let oracle_size =
            oracle::exhaustive_max_code(p, d, &SeparationSpec::kissing(), DEFAULT_BUDGET)
                .unwrap();
        assert_eq!(clique.size, oracle_size);
    }
}
