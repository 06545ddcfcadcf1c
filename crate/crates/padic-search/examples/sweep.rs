//! Runs the clique search against the exhaustive oracle over a small
//! (p, d, level) grid and prints one line per instance.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use code_model::SeparationSpec;
use padic_core::Prime;
use padic_search::{build_residue_graph, max_clique, oracle, DEFAULT_BUDGET};

fn level_spec(p: Prime, m: u32) -> SeparationSpec {
    let p_pow = BigRational::new(BigInt::from(1), BigInt::from(p.value()).pow(m));
    let two = BigRational::from(BigInt::from(2));
    SeparationSpec::exact((&two - &p_pow) / &two).unwrap()
}

fn main() {
    let threads: usize = std::env::var("PADIC_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    println!("p\td\tlevel\tvertices\tedges\tclique\toracle\tnodes\tmillis");
    for p in [3u64, 5, 7] {
        for d in [1usize, 2, 3] {
            for m in [0u32, 1] {
                let p = Prime::new(p).unwrap();
                let start = Instant::now();
                let graph = build_residue_graph(p, d, m, DEFAULT_BUDGET).unwrap();
                let clique = max_clique(&graph, threads);
                let clique_ms = start.elapsed().as_millis();
                let start = Instant::now();
                let oracle_size =
                    oracle::exhaustive_max_code(p, d, &level_spec(p, m), DEFAULT_BUDGET).unwrap();
                let oracle_ms = start.elapsed().as_millis();
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}+{}",
                    p.value(),
                    d,
                    m,
                    graph.vertex_count(),
                    graph.edge_count(),
                    clique.size,
                    oracle_size,
                    clique.node_count,
                    clique_ms,
                    oracle_ms,
                );
                assert_eq!(clique.size, oracle_size, "reduction disagreement");
            }
        }
    }
}
