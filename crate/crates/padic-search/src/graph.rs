use padic_core::Prime;

use crate::{BitGraph, SearchError};

/// Default cap on the number of enumerated candidate vectors `p^((m*+1)d)`.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// The residue-sphere graph at level m*: vertices are the solutions of
/// `sum x_j^2 = 1` in `(Z/M)^d` with `M = p^(m*+1)`, listed in
/// lexicographic order; two vertices are adjacent when their dot product
/// is not 1 modulo M.
#[derive(Debug, Clone)]
pub struct ResidueSphereGraph {
    prime: Prime,
    dim: usize,
    level: u32,
    modulus: u64,
    vertices: Vec<Vec<u64>>,
    adjacency: BitGraph,
}

impl ResidueSphereGraph {
    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.edge_count()
    }

    pub fn vertices(&self) -> &[Vec<u64>] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &BitGraph {
        &self.adjacency
    }
}

/// Enumerates the residue sphere exhaustively and builds the adjacency
/// relation.  Fails when `p` is even or when the candidate space `M^d`
/// exceeds the budget; enumeration is never silently truncated.
pub fn build_residue_graph(
    p: Prime,
    dim: usize,
    level: u32,
    budget: u64,
) -> Result<ResidueSphereGraph, SearchError> {
    if !p.is_odd() {
        return Err(SearchError::EvenPrimeUnsupported);
    }
    assert!(dim >= 1, "dimension must be positive");
    let modulus = checked_modulus(p, level)?;
    let needed = (modulus as u128).checked_pow(dim as u32);
    match needed {
        Some(n) if n <= budget as u128 => {}
        _ => {
            return Err(SearchError::BudgetExceeded {
                needed: needed.unwrap_or(u128::MAX),
                budget,
            })
        }
    }

    let m = modulus;
    let squares: Vec<u64> = (0..m).map(|x| mulmod(x, x, m)).collect();
    let mut vertices = Vec::new();
    // odometer with the first coordinate most significant: lexicographic
    let mut x = vec![0u64; dim];
    loop {
        let sum = x.iter().fold(0u64, |acc, &c| addmod(acc, squares[c as usize], m));
        if sum == 1 % m && x.iter().any(|&c| c % p.value() != 0) {
            vertices.push(x.clone());
        }
        // increment
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

    let n = vertices.len();
    let mut adjacency = BitGraph::new(n);
    for a in 0..n {
        for b in (a + 1)..n {
            let dot = vertices[a]
                .iter()
                .zip(&vertices[b])
                .fold(0u64, |acc, (&u, &v)| addmod(acc, mulmod(u, v, m), m));
            if dot != 1 % m {
                adjacency.add_edge(a, b);
            }
        }
    }

    // a sphere vertex is never adjacent to itself: x . x = 1
    debug_assert!(vertices.iter().enumerate().all(|(i, _)| !adjacency.adjacent(i, i)));

    Ok(ResidueSphereGraph {
        prime: p,
        dim,
        level,
        modulus,
        vertices,
        adjacency,
    })
}

fn checked_modulus(p: Prime, level: u32) -> Result<u64, SearchError> {
    let mut m: u64 = 1;
    for _ in 0..=level {
        m = m.checked_mul(p.value()).ok_or(SearchError::BudgetExceeded {
            needed: u128::MAX,
            budget: 0,
        })?;
    }
    Ok(m)
}

#[inline]
fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}
