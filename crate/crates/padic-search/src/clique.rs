use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::{BitGraph, ResidueSphereGraph};

/// An exact maximum clique: its size, the lexicographically least witness
/// (as ascending vertex indices, compared under the fixed vertex order),
/// and the number of search-tree nodes visited.
///
/// All three fields are independent of the worker-thread count: the size
/// search runs root branches with task-local bounds only, and the witness
/// is reconstructed by a deterministic sequential pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub node_count: u64,
}

/// Exact maximum clique of a residue-sphere graph.
///
/// Level `m* >= 1` graphs have an extra exploitable structure: the fibers
/// over the mod-p sphere are usually independent sets (two lifts of one
/// mod-p point have dot product 1 modulo p^2).  The solver checks that
/// property on the actual graph and, when it holds and gives fewer
/// classes than the generic greedy partition, uses the fiber partition to
/// order the coloring — on the dense level-1 instances this makes the
/// upper bound tight.
pub fn max_clique(graph: &ResidueSphereGraph, threads: usize) -> CliqueResult {
    let adjacency = graph.adjacency();
    let greedy = Partition::greedy(adjacency);
    let p = graph.prime().value();
    let mut fiber_ids: Vec<Vec<u64>> = Vec::new();
    let fiber_of: Vec<usize> = graph
        .vertices()
        .iter()
        .map(|v| {
            let key: Vec<u64> = v.iter().map(|&c| c % p).collect();
            match fiber_ids.iter().position(|k| *k == key) {
                Some(i) => i,
                None => {
                    fiber_ids.push(key);
                    fiber_ids.len() - 1
                }
            }
        })
        .collect();
    let partition = match Partition::verified(adjacency, fiber_of) {
        Some(fibers) if fibers.classes.len() < greedy.classes.len() => fibers,
        _ => greedy,
    };
    solve(adjacency, &partition, threads)
}

/// Maximum clique of an arbitrary adjacency relation, with the generic
/// greedy independent partition.
pub fn max_clique_adjacency(graph: &BitGraph, threads: usize) -> CliqueResult {
    let partition = Partition::greedy(graph);
    solve(graph, &partition, threads)
}

/// Branch-and-bound maximum clique with greedy-coloring upper bounds.
///
/// Root branches (one per vertex, in degeneracy order) may run on several
/// worker threads; each branch prunes against the deterministic greedy
/// seed plus its own local best, never against other branches, so sizes
/// and node counts do not depend on scheduling.
fn solve(graph: &BitGraph, partition: &Partition, threads: usize) -> CliqueResult {
    let n = graph.len();
    assert!(n > 0, "clique search needs a nonempty vertex set");
    let threads = threads.max(1);
    let order = graph.degeneracy_order();
    let seed = partition
        .one_per_class_clique(graph)
        .max(reverse_order_greedy(graph, &order));

    // root task i: cliques whose first vertex, in root order, is order[i]
    let task_results: Vec<(usize, u64)> = run_tasks(threads, n, |i| {
        let v = order[i];
        let candidates: Vec<usize> = ((i + 1)..n)
            .map(|j| order[j])
            .filter(|&u| graph.adjacent(v, u))
            .collect();
        let mut searcher = Searcher {
            graph,
            partition,
            best: seed,
            nodes: 0,
        };
        searcher.expand(1, &candidates);
        (searcher.best, searcher.nodes)
    });

    let size = task_results
        .iter()
        .map(|&(s, _)| s)
        .max()
        .unwrap_or(seed)
        .max(seed);
    let mut node_count: u64 = task_results.iter().map(|&(_, nodes)| nodes).sum();

    let witness = lex_min_witness(graph, partition, size, &mut node_count);
    debug_assert_eq!(witness.len(), size);
    debug_assert!(is_clique(graph, &witness));

    CliqueResult {
        size,
        witness,
        node_count,
    }
}

/// A partition of the vertices into independent sets, built by repeatedly
/// extracting a maximal independent set in index order.  Sound by
/// construction: any clique contains at most one vertex per class, so the
/// number of classes met by a candidate set bounds its cliques.
struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    fn greedy(graph: &BitGraph) -> Partition {
        let n = graph.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut assigned = 0usize;
        while assigned < n {
            let mut members: Vec<usize> = Vec::new();
            for v in 0..n {
                if class_of[v] == usize::MAX
                    && members.iter().all(|&u| !graph.adjacent(u, v))
                {
                    members.push(v);
                }
            }
            for &v in &members {
                class_of[v] = classes.len();
            }
            assigned += members.len();
            classes.push(members);
        }
        Partition { class_of, classes }
    }

    /// Wraps an externally proposed partition after checking that every
    /// class really is an independent set; `None` otherwise.
    fn verified(graph: &BitGraph, class_of: Vec<usize>) -> Option<Partition> {
        let count = class_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); count];
        for (v, &c) in class_of.iter().enumerate() {
            classes[c].push(v);
        }
        for class in &classes {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    if graph.adjacent(u, v) {
                        return None;
                    }
                }
            }
        }
        Some(Partition { class_of, classes })
    }

    /// Deterministic seed clique: walk the classes in order and take the
    /// first member compatible with everything chosen so far.
    fn one_per_class_clique(&self, graph: &BitGraph) -> usize {
        let mut chosen: Vec<usize> = Vec::new();
        for class in &self.classes {
            for &v in class {
                if chosen.iter().all(|&u| graph.adjacent(u, v)) {
                    chosen.push(v);
                    break;
                }
            }
        }
        chosen.len()
    }
}

fn run_tasks<F>(threads: usize, count: usize, task: F) -> Vec<(usize, u64)>
where
    F: Fn(usize) -> (usize, u64) + Sync,
{
    let next = AtomicUsize::new(0);
    let results = Mutex::new(vec![None; count]);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(count.max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let r = task(i);
                results.lock().unwrap()[i] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("all tasks completed"))
        .collect()
}

/// Greedy clique over the reverse elimination order, the second seed.
fn reverse_order_greedy(graph: &BitGraph, order: &[usize]) -> usize {
    let mut clique: Vec<usize> = Vec::new();
    for &v in order.iter().rev() {
        if clique.iter().all(|&u| graph.adjacent(u, v)) {
            clique.push(v);
        }
    }
    clique.len()
}

struct Searcher<'g> {
    graph: &'g BitGraph,
    partition: &'g Partition,
    best: usize,
    nodes: u64,
}

impl Searcher<'_> {
    /// Tomita-style expansion: candidates are greedily colored in
    /// partition-class order and branched highest color first; a branch is
    /// cut when `depth + color` cannot beat the best size seen so far.
    fn expand(&mut self, depth: usize, candidates: &[usize]) {
        self.nodes += 1;
        if candidates.is_empty() {
            if depth > self.best {
                self.best = depth;
            }
            return;
        }
        let (sorted, colors) = self.color_sort(candidates);
        for i in (0..sorted.len()).rev() {
            if depth + colors[i] <= self.best {
                return;
            }
            let v = sorted[i];
            let next: Vec<usize> = sorted[..i]
                .iter()
                .copied()
                .filter(|&u| self.graph.adjacent(v, u))
                .collect();
            self.expand(depth + 1, &next);
        }
    }

    /// Decision variant: is there a clique of size `needed` inside
    /// `candidates`?  Shares the coloring bound, exits on first success.
    fn exists(&mut self, needed: usize, candidates: &[usize]) -> bool {
        if needed == 0 {
            return true;
        }
        self.nodes += 1;
        if candidates.len() < needed {
            return false;
        }
        let (sorted, colors) = self.color_sort(candidates);
        for i in (0..sorted.len()).rev() {
            if colors[i] < needed {
                return false;
            }
            let v = sorted[i];
            let next: Vec<usize> = sorted[..i]
                .iter()
                .copied()
                .filter(|&u| self.graph.adjacent(v, u))
                .collect();
            if self.exists(needed - 1, &next) {
                return true;
            }
        }
        false
    }

    /// Greedy first-fit coloring with vertices taken in (partition class,
    /// index) order; returns the vertices re-sorted by color class
    /// (ascending) with their 1-based color numbers.  Grouping by the
    /// independent partition keeps the number of colors near the number of
    /// partition classes met by the candidates.
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut grouped: Vec<usize> = candidates.to_vec();
        grouped.sort_unstable_by_key(|&v| (self.partition.class_of[v], v));

        let mut color_classes: Vec<Vec<usize>> = Vec::new();
        for &v in &grouped {
            let class = color_classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.graph.adjacent(u, v)));
            match class {
                Some(class) => class.push(v),
                None => color_classes.push(vec![v]),
            }
        }

        let mut sorted = Vec::with_capacity(grouped.len());
        let mut colors = Vec::with_capacity(grouped.len());
        for (index, class) in color_classes.iter().enumerate() {
            for &v in class {
                sorted.push(v);
                colors.push(index + 1);
            }
        }
        (sorted, colors)
    }
}

/// The lexicographically least maximum clique under the vertex index
/// order, rebuilt by decision searches once the size is known.
fn lex_min_witness(
    graph: &BitGraph,
    partition: &Partition,
    size: usize,
    node_count: &mut u64,
) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    let mut candidates: Vec<usize> = (0..graph.len()).collect();
    while chosen.len() < size {
        let needed = size - chosen.len() - 1;
        let mut extended = false;
        for position in 0..candidates.len() {
            let v = candidates[position];
            let rest: Vec<usize> = candidates[position + 1..]
                .iter()
                .copied()
                .filter(|&u| graph.adjacent(v, u))
                .collect();
            if needed == 0 || {
                let mut searcher = Searcher {
                    graph,
                    partition,
                    best: 0,
                    nodes: 0,
                };
                let found = searcher.exists(needed, &rest);
                *node_count += searcher.nodes;
                found
            } {
                chosen.push(v);
                candidates = rest;
                extended = true;
                break;
            }
        }
        assert!(extended, "a maximum clique of the claimed size must exist");
    }
    chosen
}

fn is_clique(graph: &BitGraph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        vertices[i + 1..]
            .iter()
            .all(|&v| graph.adjacent(u, v))
    })
}
