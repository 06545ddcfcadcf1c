//! Exact maximal p-adic spherical code sizes by reduction to maximum
//! clique on residue-sphere graphs.
//!
//! For an odd prime p and separation level m*, the graph's vertices are
//! the solutions of `sum x_j^2 = 1` in `(Z/p^(m*+1))^d` and two vertices
//! are adjacent when their dot product is not 1 in that ring.  Cliques
//! lift, coordinate by coordinate, to codes via Hensel's lemma; the
//! reduction is validated against an independently implemented exhaustive
//! search ([`oracle`]) rather than assumed.
//!
//! `p = 2` is excluded from the exact solver (the `|2|_2 = 1/2` factor
//! changes the threshold algebra and the square-root lift needs mod-8
//! care); [`p2_lower_bound`] enumerates and validates candidates modulo a
//! power of two and reports lower bounds only.

mod bitgraph;
mod clique;
mod error;
mod graph;
mod hensel;
mod lift;
pub mod oracle;
mod search;

pub use bitgraph::BitGraph;
pub use clique::{max_clique, max_clique_adjacency, CliqueResult};
pub use error::SearchError;
pub use graph::{build_residue_graph, ResidueSphereGraph, DEFAULT_BUDGET};
pub use hensel::hensel_lift;
pub use lift::{lift_clique_to_code, LiftedCode};
pub use search::{
    kissing_number, p2_lower_bound, search_max_code, SearchConfig, SearchReport, SearchSize,
};
