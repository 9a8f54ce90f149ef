//! Simple undirected labeled graphs and their structural queries.
//!
//! Vertices are `0..n` and adjacency is kept as one bitmask per vertex, so
//! graphs are capped at 64 vertices — far beyond the orders this crate
//! enumerates or decomposes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod blocks;
pub mod canon;
pub mod graph6;
pub mod planar;

pub use blocks::{Block, BlockDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
}

/// Simple undirected graph: no loops, no parallel edges.
///
/// Parallel edges collapse on construction; loops are rejected.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > 64 {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge(u, v));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("desk scale");
        for u in 0..n {
            for v in (u + 1)..n {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |&u| mask >> u & 1 == 1)
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u == v || u >= self.n || v >= self.n || self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Contracts `uv`: the edge is removed, the endpoints merge, vertices are
    /// relabeled to `0..n-2`, and any parallel edges collapse.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge(u, v));
        }
        let (keep, drop) = if u < v { (u, v) } else { (v, u) };
        let mut g = Graph::empty(self.n - 1).expect("shrinking");
        let relabel = |w: usize| if w < drop { w } else { w - 1 };
        for (a, b) in self.edges() {
            if (a, b) == (keep.min(drop), keep.max(drop)) || (a, b) == (keep, drop) {
                continue;
            }
            let a2 = if a == drop { keep } else { a };
            let b2 = if b == drop { keep } else { b };
            if a2 == b2 {
                continue;
            }
            let (a2, b2) = (relabel(a2), relabel(b2));
            g.adj[a2] |= 1 << b2;
            g.adj[b2] |= 1 << a2;
        }
        Ok(g)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Induced subgraph on `vertices`, relabeled to `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len()).expect("subset");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Mask of all vertices reachable from `start`.
    fn reach_mask(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_mask(0).count_ones() as usize == self.n
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 0 {
                let mask = self.reach_mask(v);
                seen |= mask;
                comps.push((0..self.n).filter(|&u| mask >> u & 1 == 1).collect());
            }
        }
        comps
    }

    /// Exact `k`-connectivity for small `k` by exhaustive cutset removal:
    /// connected and no set of fewer than `k` vertices disconnects the graph.
    pub fn connectivity_class(&self, k: usize) -> bool {
        if !self.is_connected() {
            return false;
        }
        for size in 1..k {
            if self.has_cutset_of_size(size) {
                return false;
            }
        }
        true
    }

    fn has_cutset_of_size(&self, size: usize) -> bool {
        let mut subset: Vec<usize> = (0..size).collect();
        if size > self.n {
            return false;
        }
        loop {
            let removed: u64 = subset.iter().map(|&v| 1u64 << v).sum();
            if self.disconnects(removed) {
                return true;
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if subset[i] < self.n - (size - i) {
                    subset[i] += 1;
                    for j in (i + 1)..size {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn disconnects(&self, removed: u64) -> bool {
        let alive = ((1u128 << self.n) - 1) as u64 & !removed;
        let live_count = alive.count_ones() as usize;
        if live_count <= 1 {
            return false;
        }
        let start = alive.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & alive;
            }
            frontier = next & !seen;
            seen |= next;
        }
        (seen.count_ones() as usize) < live_count
    }

    /// Exact maximum clique size, branch and bound over candidate masks.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let full = ((1u128 << self.n) - 1) as u64;
        let mut best = 0;
        self.clique_bb(0, full, &mut best);
        best
    }

    fn clique_bb(&self, size: usize, mut cand: u64, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.clique_bb(size + 1, cand & self.adj[v], best);
        }
    }

    /// Exact chromatic number: smallest `x` admitting a proper `x`-coloring,
    /// bracketed below by the clique number and above by a greedy coloring.
    pub fn chromatic_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        if self.size() == 0 {
            return 1;
        }
        let order = self.degree_desc_order();
        let lower = self.clique_number();
        let upper = self.greedy_colors(&order);
        for x in lower..upper {
            if self.colorable(x, &order) {
                return x;
            }
        }
        upper
    }

    fn degree_desc_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        order
    }

    fn greedy_colors(&self, order: &[usize]) -> usize {
        let mut color = vec![usize::MAX; self.n];
        let mut used = 0;
        for &v in order {
            let mut forbidden = 0u64;
            for u in self.neighbors(v) {
                if color[u] != usize::MAX {
                    forbidden |= 1 << color[u];
                }
            }
            let c = (!forbidden).trailing_zeros() as usize;
            color[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    /// Backtracking `x`-colorability; colors above `max_used + 1` are skipped
    /// to break color symmetry.
    pub fn colorable(&self, x: usize, order: &[usize]) -> bool {
        if x == 0 {
            return self.n == 0;
        }
        if x >= 64 {
            return true;
        }
        let mut color = vec![usize::MAX; self.n];
        self.color_rec(x, order, 0, 0, &mut color)
    }

    fn color_rec(
        &self,
        x: usize,
        order: &[usize],
        idx: usize,
        max_used: usize,
        color: &mut Vec<usize>,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let mut forbidden = 0u64;
        for u in self.neighbors(v) {
            if color[u] != usize::MAX {
                forbidden |= 1 << color[u];
            }
        }
        let limit = x.min(max_used + 1);
        for c in 0..limit {
            if forbidden >> c & 1 == 0 {
                color[v] = c;
                if self.color_rec(x, order, idx + 1, max_used.max(c + 1), color) {
                    color[v] = usize::MAX;
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }

    /// Connected and every block is a single edge or a cycle.
    pub fn is_cactus(&self) -> bool {
        match blocks::blocks(self) {
            Ok(bd) => bd.blocks.iter().all(|b| {
                b.edges.len() == 1 || (b.vertices.len() >= 3 && b.edges.len() == b.vertices.len())
            }),
            Err(_) => false,
        }
    }

    /// Exact planarity: edge-count prefilter plus exhaustive search for a
    /// `K5` or `K_{3,3}` subdivision on the reduced graph.
    pub fn is_planar(&self) -> bool {
        planar::is_planar(self)
    }

    /// Deterministic bytes equal exactly for isomorphic graphs.
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::canonical_form(self)
    }

    pub fn canonical_graph6(&self) -> String {
        canon::canonical_graph6(self)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
        graph6::decode(s)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Adjacency-list export used in JSON reports.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdjacencyExport {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
}

impl From<&Graph> for AdjacencyExport {
    fn from(g: &Graph) -> Self {
        AdjacencyExport {
            n: g.n(),
            adj: g.adjacency_lists(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_collapses_parallels_and_rejects_loops() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::InvalidEdge(0, 0)));
        assert_eq!(Graph::new(2, &[(0, 5)]), Err(GraphError::InvalidEdge(0, 5)));
    }

    #[test]
    fn edit_family() {
        // contracting one edge of the triangle leaves a single edge
        let k2 = Graph::cycle(3).contract_edge(0, 1).unwrap();
        assert_eq!((k2.n(), k2.size()), (2, 1));

        // deleting one edge of C4 leaves a path on 4 vertices
        let p4 = Graph::cycle(4).delete_edge(0, 3).unwrap();
        assert_eq!(p4.canonical_form(), Graph::path(4).canonical_form());

        // contracting a chord-free edge of C5 gives C4
        let c4 = Graph::cycle(5).contract_edge(1, 2).unwrap();
        assert_eq!(c4.canonical_form(), Graph::cycle(4).canonical_form());

        assert!(Graph::cycle(4).add_edge(0, 1).is_err());
        assert!(Graph::cycle(4).delete_edge(0, 2).is_err());
        assert!(Graph::cycle(4).contract_edge(0, 2).is_err());
    }

    #[test]
    fn contraction_collapses_resulting_parallels() {
        // triangle: contracting any edge must collapse the two parallel edges
        let g = Graph::cycle(3).contract_edge(1, 2).unwrap();
        assert_eq!((g.n(), g.size()), (2, 1));
    }

    #[test]
    fn connectivity_classes() {
        assert!(Graph::cycle(5).connectivity_class(2));
        assert!(!Graph::cycle(5).connectivity_class(3));
        assert!(Graph::complete(4).connectivity_class(3));
        let k33 = Graph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert!(k33.connectivity_class(3));
        assert!(!Graph::path(4).connectivity_class(2));
    }

    #[test]
    fn coloring_numbers() {
        assert_eq!(Graph::complete(4).chromatic_number(), 4);
        assert_eq!(Graph::cycle(5).chromatic_number(), 3);
        assert_eq!(Graph::cycle(6).chromatic_number(), 2);
        assert_eq!(Graph::complete(4).clique_number(), 4);
        assert_eq!(Graph::cycle(5).clique_number(), 2);
        assert_eq!(Graph::empty(3).unwrap().chromatic_number(), 1);
        assert_eq!(Graph::empty(0).unwrap().chromatic_number(), 0);
    }

    #[test]
    fn cactus_recognition() {
        // triangle with a pendant edge
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert!(g.is_cactus());
        assert!(!Graph::complete(4).is_cactus());
        assert!(Graph::path(5).is_cactus());
        assert!(!Graph::new(4, &[(0, 1), (2, 3)]).unwrap().is_cactus());
    }

    #[test]
    fn component_queries() {
        let g = Graph::new(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(Graph::empty(1).unwrap().is_connected());
    }
}
