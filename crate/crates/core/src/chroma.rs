//! Exact chromatic polynomials for small graphs.
//!
//! The engine multiplies over components, splits connected graphs into
//! blocks, recognizes edges, cycles and complete graphs, and otherwise
//! recurses by deletion-contraction (or addition-contraction on dense
//! blocks), memoizing on canonical forms.

use crate::graph::{blocks, Graph};
use crate::poly::{Poly, PolyError, Rational};
use num_traits::Zero;
use std::collections::HashMap;

/// `pi(C_m, x) = (x-1)^m + (-1)^m (x-1)`.
pub fn cycle_polynomial(m: usize) -> Poly {
    let xm1 = Poly::x_minus(1);
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    &xm1.pow(m as u32) + &xm1.scale(&crate::poly::rint(sign))
}

/// Deletion-contraction engine with a canonical-form memo cache.
///
/// The cache may be reused across graphs; a shared cache and per-worker
/// private caches produce identical results. A second, labeled-key memo
/// turns the recursion tree into a DAG: vertex removals and contractions
/// relabel order-preservingly, so states reached along different reduction
/// orders coincide byte for byte.
#[derive(Default)]
pub struct ChromaticEngine {
    cache: HashMap<Vec<u8>, Poly>,
    labeled: HashMap<Vec<u8>, Poly>,
}

fn labeled_key(g: &Graph) -> Vec<u8> {
    let mut key = Vec::with_capacity(1 + 8 * g.n());
    key.push(g.n() as u8);
    for v in 0..g.n() {
        key.extend_from_slice(&g.neighbors_mask(v).to_le_bytes());
    }
    key
}

impl ChromaticEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exact `pi(G, x)`; disconnected input multiplies component polynomials.
    pub fn polynomial(&mut self, g: &Graph) -> Poly {
        let key = labeled_key(g);
        if let Some(hit) = self.labeled.get(&key) {
            return hit.clone();
        }
        let comps = g.components();
        let mut acc = Poly::one();
        for comp in comps {
            let piece = self.connected(&g.induced(&comp));
            acc = &acc * &piece;
        }
        self.labeled.insert(key, acc.clone());
        acc
    }

    /// Connected case: block formula `pi(G) = x * prod_i pi(B_i)/x`.
    fn connected(&mut self, g: &Graph) -> Poly {
        let bd = blocks::blocks(g).expect("connected by construction");
        let mut acc = Poly::x();
        for block in &bd.blocks {
            let bp = self.block(&g.induced(&block.vertices));
            acc = &acc * &bp.div_exact(&Poly::x()).expect("pi divisible by x");
        }
        acc
    }

    /// 2-connected block (or bridge): recognize, else recurse.
    fn block(&mut self, g: &Graph) -> Poly {
        let n = g.n();
        let m = g.size();
        if n == 2 && m == 1 {
            return &Poly::x() * &Poly::x_minus(1);
        }
        if m == n && n >= 3 && (0..n).all(|v| g.degree(v) == 2) {
            return cycle_polynomial(n);
        }
        if m == n * (n - 1) / 2 {
            return Poly::falling_factorial(n);
        }
        // series reduction: a degree-2 vertex in a non-cycle block dissolves
        // without deletion-contraction, shrinking subdivisions fast
        if let Some(v) = (0..n).find(|&v| g.degree(v) == 2) {
            let mut nb = g.neighbors(v);
            let (a, b) = (nb.next().expect("degree 2"), nb.next().expect("degree 2"));
            let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let shrunk = g.induced(&keep);
            let shift = |u: usize| if u > v { u - 1 } else { u };
            let (a, b) = (shift(a), shift(b));
            if shrunk.has_edge(a, b) {
                return &Poly::x_minus(2) * &self.polynomial(&shrunk);
            }
            let bridged = shrunk.add_edge(a, b).expect("non-adjacent");
            let del = &Poly::x_minus(1) * &self.polynomial(&shrunk);
            return &del - &self.polynomial(&bridged);
        }
        let key = g.canonical_form();
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let result = if m * 4 <= n * (n - 1) {
            // sparse: pi(G) = pi(G - e) - pi(G / e)
            let (u, v) = pick_edge(g);
            let del = self.polynomial(&g.delete_edge(u, v).expect("edge exists"));
            let con = self.polynomial(&g.contract_edge(u, v).expect("edge exists"));
            &del - &con
        } else {
            // dense: pi(G) = pi(G + e) + pi(G / e), driving toward complete
            let (u, v) = pick_non_edge(g).expect("not complete");
            let add = self.polynomial(&g.add_edge(u, v).expect("non-edge"));
            let con = self.polynomial(&g.contract_edge_pair(u, v));
            &add + &con
        };
        self.cache.insert(key, result.clone());
        result
    }
}

impl Graph {
    /// Identify two non-adjacent vertices (the contraction step of the
    /// addition-contraction recursion).
    fn contract_edge_pair(&self, u: usize, v: usize) -> Graph {
        self.add_edge(u, v)
            .and_then(|g| g.contract_edge(u, v))
            .expect("non-edge identification")
    }
}

/// Edge at a vertex of minimum degree: deleting it tends to split blocks.
fn pick_edge(g: &Graph) -> (usize, usize) {
    let v = (0..g.n())
        .filter(|&v| g.degree(v) > 0)
        .min_by_key(|&v| g.degree(v))
        .expect("has edges");
    let u = g.neighbors(v).next().expect("degree > 0");
    (u.min(v), u.max(v))
}

fn pick_non_edge(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// One-shot convenience around [`ChromaticEngine`].
pub fn chromatic_polynomial(g: &Graph) -> Poly {
    ChromaticEngine::new().polynomial(g)
}

/// Exhaustive backtracking count of proper `x`-colorings; the independent
/// oracle for [`chromatic_polynomial`].
pub fn count_colorings(g: &Graph, x: usize) -> u64 {
    assert!(x < 64, "oracle is desk scale");
    let mut color = vec![usize::MAX; g.n()];
    count_rec(g, x, 0, &mut color)
}

fn count_rec(g: &Graph, x: usize, v: usize, color: &mut Vec<usize>) -> u64 {
    if v == g.n() {
        return 1;
    }
    let mut forbidden = 0u64;
    for u in g.neighbors(v) {
        if color[u] != usize::MAX {
            forbidden |= 1 << color[u];
        }
    }
    let mut total = 0;
    for c in 0..x {
        if forbidden >> c & 1 == 0 {
            color[v] = c;
            total += count_rec(g, x, v + 1, color);
            color[v] = usize::MAX;
        }
    }
    total
}

/// Complete Cutset Theorem: `pi(G) = prod_i pi(G_i) / ((x)_r)^(count-1)` for
/// an `r`-clique sum. The division must be exact; a remainder signals that
/// the parts do not share an `r`-clique consistently.
pub fn clique_sum_polynomial(parts: &[Poly], r: usize) -> Result<Poly, PolyError> {
    let mut num = Poly::one();
    for p in parts {
        num = &num * p;
    }
    let den = Poly::falling_factorial(r).pow(parts.len().saturating_sub(1) as u32);
    num.div_exact(&den)
}

/// Structural facts every chromatic polynomial satisfies; used by tests and
/// the verification pipeline as a cheap sanity gate.
pub fn well_formed_chromatic(p: &Poly, n: usize, m: usize) -> bool {
    if n == 0 {
        return p == &Poly::one();
    }
    p.degree() == Some(n)
        && p.leading().map(|c| c == &Rational::from_integer(1.into())).unwrap_or(false)
        && p.coeff(n - 1) == crate::poly::rint(-(m as i64))
        && p.coeff(0).is_zero()
}
