//! Reference oracle for the clique reduction, used by tests and the
//! acceptance suite.
//!
//! This is a second, independently written exact search: it enumerates the
//! residue sphere with its own loop, decides pair admissibility by exact
//! integer comparison of `|2 - 2(x.y)|` against the separation threshold
//! (bypassing both the adjacency matrix and the level-to-residue
//! equivalence used by the production path), and maximizes over subsets
//! with a vertex-order dynamic program plus a one-per-group cut derived
//! from a greedy partition into pairwise-inadmissible groups.  It shares
//! no search machinery with [`crate::max_clique`].

use num_bigint::BigInt;
use num_rational::BigRational;

use code_model::{effective_level, Level, SeparationSpec};
use padic_core::Prime;

use crate::SearchError;

/// Exact maximum admissible-subset size over the residue-sphere vertices,
/// by exhaustive subset search.  `budget` caps the enumerated candidate
/// space `p^((m*+1)d)`.
pub fn exhaustive_max_code(
    p: Prime,
    dim: usize,
    spec: &SeparationSpec,
    budget: u64,
) -> Result<usize, SearchError> {
    if !p.is_odd() {
        return Err(SearchError::EvenPrimeUnsupported);
    }
    let level = match effective_level(spec, p)? {
        Level::Finite(m) => m,
        Level::Unbounded => return Err(SearchError::UnboundedSeparation),
        Level::Infeasible => return Ok(1),
    };
    let b = spec.bound_exact().expect("effective_level enforced exactness");

    let modulus: u128 = (p.value() as u128).pow(level + 1);
    let needed = modulus.checked_pow(dim as u32);
    match needed {
        Some(n) if n <= budget as u128 => {}
        _ => {
            return Err(SearchError::BudgetExceeded {
                needed: needed.unwrap_or(u128::MAX),
                budget,
            })
        }
    }

    // enumerate sphere solutions with a plain counter loop
    let m = modulus;
    let mut vertices: Vec<Vec<u128>> = Vec::new();
    let total = m.pow(dim as u32);
    let mut counter: u128 = 0;
    while counter < total {
        let mut digits = Vec::with_capacity(dim);
        let mut rest = counter;
        for _ in 0..dim {
            digits.push(rest % m);
            rest /= m;
        }
        digits.reverse();
        let sum_sq = digits.iter().map(|&c| c * c % m).sum::<u128>() % m;
        if sum_sq == 1 % m {
            vertices.push(digits);
        }
        counter += 1;
    }

    let n = vertices.len();
    if n == 0 {
        return Ok(0);
    }

    // admissibility by exact comparison of |2 - 2(x.y)|_p against b
    let mut admissible = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let dot: u128 = vertices[i]
                .iter()
                .zip(&vertices[j])
                .map(|(&a, &b)| a * b)
                .sum();
            let value = BigInt::from(2) - BigInt::from(2) * BigInt::from(dot);
            if abs_at_least(&value, p, &b) {
                admissible[i][j] = true;
                admissible[j][i] = true;
            }
        }
    }

    // group vertices into pairwise-inadmissible groups; any admissible
    // subset meets each group at most once.  Candidate groupings: the
    // mod-p fibers (checked against the admissibility matrix, since their
    // inadmissibility is structural only for low levels) and a greedy
    // grouping in index order; the finer bound wins.
    let (group_of, groups) = {
        let greedy = greedy_groups(&admissible);
        match fiber_groups(&vertices, p.value() as u128, &admissible) {
            Some(fibers) if fibers.1 < greedy.1 => fibers,
            _ => greedy,
        }
    };

    // reorder group-major so suffixes span few groups
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (group_of[v], v));
    let reordered_adm: Vec<Vec<bool>> = order
        .iter()
        .map(|&a| order.iter().map(|&b| admissible[a][b]).collect())
        .collect();
    let reordered_groups: Vec<usize> = order.iter().map(|&v| group_of[v]).collect();

    Ok(ostergard_max(&reordered_adm, &reordered_groups, groups))
}

fn greedy_groups(admissible: &[Vec<bool>]) -> (Vec<usize>, usize) {
    let n = admissible.len();
    let mut group_of = vec![usize::MAX; n];
    let mut groups = 0usize;
    let mut assigned = 0usize;
    while assigned < n {
        let mut members: Vec<usize> = Vec::new();
        for v in 0..n {
            if group_of[v] == usize::MAX && members.iter().all(|&u| !admissible[u][v]) {
                members.push(v);
            }
        }
        for &v in &members {
            group_of[v] = groups;
        }
        assigned += members.len();
        groups += 1;
    }
    (group_of, groups)
}

/// Groups by residue modulo p, accepted only if every intra-group pair is
/// inadmissible on this instance.
fn fiber_groups(
    vertices: &[Vec<u128>],
    p: u128,
    admissible: &[Vec<bool>],
) -> Option<(Vec<usize>, usize)> {
    let mut keys: Vec<Vec<u128>> = Vec::new();
    let mut group_of = Vec::with_capacity(vertices.len());
    for v in vertices {
        let key: Vec<u128> = v.iter().map(|&c| c % p).collect();
        let id = match keys.iter().position(|k| *k == key) {
            Some(i) => i,
            None => {
                keys.push(key);
                keys.len() - 1
            }
        };
        group_of.push(id);
    }
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            if group_of[i] == group_of[j] && admissible[i][j] {
                return None;
            }
        }
    }
    Some((group_of, keys.len()))
}

/// `|value|_p >= b`, decided by integer cross-multiplication.
fn abs_at_least(value: &BigInt, p: Prime, b: &BigRational) -> bool {
    use num_integer::Integer;
    use num_traits::Zero;
    if value.is_zero() {
        return b.numer() <= &BigInt::zero();
    }
    let p_big = BigInt::from(p.value());
    let mut v: u32 = 0;
    let mut rest = value.clone();
    loop {
        let (q, r) = rest.div_rem(&p_big);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += 1;
    }
    // p^-v >= b_num / b_den  <=>  b_den >= b_num * p^v
    *b.denom() >= b.numer() * p_big.pow(v)
}

/// Vertex-order maximum "mutually admissible subset" search: processing
/// suffixes back to front, `best_from[i]` is the answer within vertices
/// `i..n`, and a branch is cut when even `best_from[v]` more vertices, or
/// one per remaining group, cannot beat the incumbent.
fn ostergard_max(admissible: &[Vec<bool>], group_of: &[usize], groups: usize) -> usize {
    let n = admissible.len();
    let mut best_from = vec![0usize; n + 1];
    let mut best = 0usize;
    let mut ctx = Context {
        admissible,
        group_of,
        groups,
        best,
        improved: false,
        best_from: Vec::new(),
    };
    for i in (0..n).rev() {
        let candidates: Vec<usize> = ((i + 1)..n).filter(|&j| admissible[i][j]).collect();
        ctx.best_from = best_from.clone();
        ctx.improved = false;
        ctx.extend(&candidates, 1);
        best = ctx.best;
        best_from[i] = best;
    }
    best
}

struct Context<'a> {
    admissible: &'a [Vec<bool>],
    group_of: &'a [usize],
    groups: usize,
    best: usize,
    improved: bool,
    best_from: Vec<usize>,
}

impl Context<'_> {
    fn distinct_groups(&self, candidates: &[usize]) -> usize {
        let mut seen = vec![false; self.groups];
        let mut count = 0;
        for &v in candidates {
            let g = self.group_of[v];
            if !seen[g] {
                seen[g] = true;
                count += 1;
            }
        }
        count
    }

    fn extend(&mut self, candidates: &[usize], size: usize) {
        if candidates.is_empty() {
            if size > self.best {
                self.best = size;
                self.improved = true;
            }
            return;
        }
        if size + self.distinct_groups(candidates) <= self.best {
            return;
        }
        let mut remaining = candidates;
        while let Some((&v, rest)) = remaining.split_first() {
            if size + remaining.len() <= self.best {
                return;
            }
            if size + self.best_from[v] <= self.best {
                return;
            }
            let next: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|&u| self.admissible[v][u])
                .collect();
            self.extend(&next, size + 1);
            if self.improved {
                // the suffix answer grows by at most one per root vertex
                return;
            }
            remaining = rest;
        }
    }
}
