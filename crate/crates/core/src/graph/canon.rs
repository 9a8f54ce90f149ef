//! Canonical labeling by iterative refinement plus backtracking search.
//!
//! Vertices are first partitioned by color refinement (degree signatures,
//! iterated to a fixed point). The canonical order must list the classes in
//! signature order, and within that constraint a backtracking search finds
//! the placement whose adjacency bit string (graph6 column order) is
//! lexicographically smallest. Interchangeable candidates are pruned via
//! twin detection, which keeps highly symmetric graphs cheap.

use super::{graph6, Graph};

/// Stable color classes, ordered canonically (by refinement signature).
fn refinement_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    // initial colors: rank of the vertex degree among the distinct degrees
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut distinct = degrees.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut color: Vec<usize> = degrees
        .drain(..)
        .map(|d| distinct.binary_search(&d).unwrap())
        .collect();
    let mut ncolors = distinct.len();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut neigh: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
                neigh.sort_unstable();
                (color[v], neigh)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let new_ncolors = sorted.len();
        let new_color: Vec<usize> = (0..n)
            .map(|v| sorted.binary_search(&&sigs[v]).unwrap())
            .collect();
        sigs.clear();
        color = new_color;
        if new_ncolors == ncolors {
            break;
        }
        ncolors = new_ncolors;
    }
    let mut classes = vec![Vec::new(); ncolors];
    for v in 0..n {
        classes[color[v]].push(v);
    }
    classes
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Class each placement position must draw from.
    class_at: Vec<usize>,
    classes: Vec<Vec<usize>>,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// Adjacency bits of `v` against the placed prefix, earliest placed first.
    fn segment(&self, placed: &[usize], v: usize) -> u64 {
        let mut seg = 0u64;
        for &u in placed {
            seg = (seg << 1) | u64::from(self.g.has_edge(u, v));
        }
        seg
    }

    /// Swapping `u` and `v` is an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = !(1u64 << u) & !(1u64 << v);
        self.g.neighbors_mask(u) & strip == self.g.neighbors_mask(v) & strip
    }

    fn dfs(&mut self, placed: &mut Vec<usize>, used: u64, segs: &mut Vec<u64>, eq_prefix: bool) {
        let k = placed.len();
        if k == self.n {
            if self.best.is_none() || segs[..] < self.best.as_deref().unwrap()[..] {
                self.best = Some(segs.clone());
                self.best_perm = placed.clone();
            }
            return;
        }
        let class = &self.classes[self.class_at[k]];
        let mut candidates: Vec<(u64, usize)> = class
            .iter()
            .filter(|&&v| used >> v & 1 == 0)
            .map(|&v| (self.segment(placed, v), v))
            .collect();
        candidates.sort_unstable();
        let min_seg = candidates[0].0;
        if eq_prefix {
            if let Some(best) = &self.best {
                if min_seg > best[k] {
                    return;
                }
            }
        }
        let mut explored: Vec<usize> = Vec::new();
        for &(seg, v) in candidates.iter().take_while(|&&(s, _)| s == min_seg) {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            explored.push(v);
            let eq_next = match (&self.best, eq_prefix) {
                (Some(best), true) => seg == best[k],
                (Some(_), false) => false,
                (None, _) => true,
            };
            placed.push(v);
            segs.push(seg);
            self.dfs(placed, used | 1 << v, segs, eq_next);
            segs.pop();
            placed.pop();
        }
    }
}

/// Placement order whose adjacency bit string is canonical.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let classes = refinement_classes(g);
    let mut class_at = Vec::with_capacity(n);
    for (i, c) in classes.iter().enumerate() {
        class_at.extend(std::iter::repeat_n(i, c.len()));
    }
    let mut search = Search {
        g,
        n,
        class_at,
        classes,
        best: None,
        best_perm: Vec::new(),
    };
    search.dfs(&mut Vec::new(), 0, &mut Vec::new(), true);
    search.best_perm
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_order(g);
    // order[position] = original vertex, so invert for permuted()
    let mut perm = vec![0usize; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

/// Byte form equal exactly for isomorphic graphs (graph6 of the canonical copy).
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_graph6(g).into_bytes()
}

pub fn canonical_graph6(g: &Graph) -> String {
    graph6::encode(&canonical_graph(g))
}
