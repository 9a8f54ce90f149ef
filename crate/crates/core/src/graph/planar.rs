//! Exact planarity testing at desk scale.
//!
//! Pipeline per component: suppress degree <= 2 vertices (which preserves
//! planarity), apply the `|E| <= 3n - 6` prefilter, split into blocks, and
//! exhaustively search the reduced 2-connected pieces for a subdivision of
//! `K5` or `K_{3,3}` (Kuratowski). Sound and complete for the orders this
//! crate handles; speed is not a goal here.

use super::{blocks, Graph};

pub fn is_planar(g: &Graph) -> bool {
    g.components()
        .into_iter()
        .all(|comp| component_planar(&g.induced(&comp)))
}

fn component_planar(g: &Graph) -> bool {
    if g.n() < 5 {
        return true;
    }
    let h = suppress(g);
    if h.n() < 5 {
        return true;
    }
    if h.size() > 3 * h.n() - 6 {
        return false;
    }
    let bd = blocks::blocks(&h).expect("suppression keeps components connected");
    if bd.blocks.len() > 1 {
        return bd
            .blocks
            .iter()
            .all(|b| component_planar(&h.induced(&b.vertices)));
    }
    !has_k5_subdivision(&h) && !has_k33_subdivision(&h)
}

/// Repeatedly removes degree <= 1 vertices and smooths degree-2 vertices.
/// A degree-2 vertex whose neighbors are already adjacent is simply dropped:
/// the parallel path never affects planarity.
fn suppress(g: &Graph) -> Graph {
    let mut g = g.clone();
    loop {
        if g.n() <= 3 {
            return g;
        }
        let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 2) else {
            return g;
        };
        let neigh: Vec<usize> = g.neighbors(v).collect();
        let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
        let mut h = g.induced(&keep);
        if let [a, b] = neigh[..] {
            let a2 = if a > v { a - 1 } else { a };
            let b2 = if b > v { b - 1 } else { b };
            if !h.has_edge(a2, b2) {
                h = h.add_edge(a2, b2).expect("distinct non-adjacent");
            }
        }
        g = h;
    }
}

fn has_k5_subdivision(g: &Graph) -> bool {
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    if candidates.len() < 5 {
        return false;
    }
    let pairs_of = |branch: &[usize]| -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for i in 0..branch.len() {
            for j in (i + 1)..branch.len() {
                pairs.push((branch[i], branch[j]));
            }
        }
        pairs
    };
    let mut found = false;
    for_each_subset(&candidates, 5, &mut |branch| {
        if !found && pack_paths(g, branch, &pairs_of(branch)) {
            found = true;
        }
    });
    found
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    if candidates.len() < 6 {
        return false;
    }
    let mut found = false;
    for_each_subset(&candidates, 6, &mut |six| {
        if found {
            return;
        }
        // split the six branch vertices into the two sides; fixing six[0]
        // on the first side halves the symmetric double count
        let rest = &six[1..];
        for_each_subset(rest, 2, &mut |pair| {
            if found {
                return;
            }
            let side_a = [six[0], pair[0], pair[1]];
            let side_b: Vec<usize> = rest.iter().copied().filter(|v| !pair.contains(v)).collect();
            let branch: Vec<usize> = side_a.iter().copied().chain(side_b.iter().copied()).collect();
            let mut pairs = Vec::with_capacity(9);
            for &a in &side_a {
                for &b in &side_b {
                    pairs.push((a, b));
                }
            }
            if pack_paths(g, &branch, &pairs) {
                found = true;
            }
        });
    });
    found
}

fn for_each_subset(items: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        let need = k - acc.len();
        for i in start..=items.len().saturating_sub(need) {
            acc.push(items[i]);
            rec(items, k, i + 1, acc, f);
            acc.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), f);
}

/// Can all `pairs` be joined by internally disjoint paths avoiding `branch`?
fn pack_paths(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let packer = PathPacker {
        g,
        branch_mask: branch.iter().map(|&v| 1u64 << v).sum(),
        pairs,
    };
    packer.pack(0, 0)
}

struct PathPacker<'a> {
    g: &'a Graph,
    branch_mask: u64,
    pairs: &'a [(usize, usize)],
}

impl PathPacker<'_> {
    fn pack(&self, idx: usize, used: u64) -> bool {
        if idx == self.pairs.len() {
            return true;
        }
        let (s, t) = self.pairs[idx];
        self.extend(idx, used, s, t, 0)
    }

    /// Grows a path from `here` toward `t`; `path` holds the internal vertices.
    fn extend(&self, idx: usize, used: u64, here: usize, t: usize, path: u64) -> bool {
        if self.g.has_edge(here, t) && self.pack(idx + 1, used | path) {
            return true;
        }
        let free = self.g.neighbors_mask(here) & !self.branch_mask & !used & !path;
        let mut m = free;
        while m != 0 {
            let z = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.extend(idx, used, z, t, path | 1 << z) {
                return true;
            }
        }
        false
    }
}
