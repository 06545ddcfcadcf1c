/// An undirected graph on `0..n` with bitset adjacency rows.
#[derive(Debug, Clone)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitGraph {
            n,
            words,
            rows: vec![0u64; n * words],
            edges: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        if !self.adjacent(a, b) {
            self.edges += 1;
        }
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// A fixed vertex elimination order: repeatedly remove a vertex of
    /// minimum remaining degree, smallest index first.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (degree[v], v))
                .expect("vertices remain");
            removed[v] = true;
            order.push(v);
            for u in 0..self.n {
                if !removed[u] && self.adjacent(v, u) {
                    degree[u] -= 1;
                }
            }
        }
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric() {
        let mut g = BitGraph::new(70);
        g.add_edge(0, 65);
        assert!(g.adjacent(0, 65));
        assert!(g.adjacent(65, 0));
        assert!(!g.adjacent(0, 64));
        assert_eq!(g.edge_count(), 1);
        g.add_edge(65, 0);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degeneracy_order_is_deterministic() {
        // path 0 - 1 - 2 plus isolated 3
        let mut g = BitGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        assert_eq!(g.degeneracy_order(), vec![3, 0, 1, 2]);
    }
}
