//! Constructors and closed-form chromatic polynomials for the special graph
//! families: theta graphs, star-subdivided `K4`, subdivided `K_{3,t}`,
//! cactus graphs, the extremal `C*_k(n)` family, wheels and the ladder-like
//! `V_t`. Every closed form is checked against the generic engine in tests.

use crate::chroma::cycle_polynomial;
use crate::graph::{blocks, Graph};
use crate::poly::{Poly, PolyError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("unsupported witness host: even t >= 12 required")]
    UnsupportedHost,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidSpec(msg.into())
}

/// Extends `edges` with a path of `size` edges from `from` to `to`,
/// allocating internal vertices from `next`.
fn push_path(edges: &mut Vec<(usize, usize)>, next: &mut usize, from: usize, to: usize, size: usize) {
    let mut prev = from;
    for _ in 1..size {
        let v = *next;
        *next += 1;
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, to));
}

/// Two vertices joined by three internally disjoint paths of the given sizes
/// (edge counts). Degenerate specs with repeated size-1 paths collapse to a
/// simple graph; the closed forms below remain the contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub s1: u32,
    pub s2: u32,
    pub s3: u32,
}

impl ThetaSpec {
    pub fn new(s1: u32, s2: u32, s3: u32) -> Result<Self, FamilyError> {
        if s1 < 1 || s2 < 1 || s3 < 1 {
            return Err(invalid("theta path sizes must be >= 1"));
        }
        Ok(ThetaSpec { s1, s2, s3 })
    }

    pub fn sizes(&self) -> [u32; 3] {
        [self.s1, self.s2, self.s3]
    }

    pub fn total(&self) -> u32 {
        self.s1 + self.s2 + self.s3
    }

    pub fn build(&self) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for s in self.sizes() {
            push_path(&mut edges, &mut next, 0, 1, s as usize);
        }
        Graph::new(next, &edges).expect("valid construction")
    }

    /// Closed form: sum of two exact quotients built from cycle polynomials.
    pub fn polynomial(&self) -> Result<Poly, FamilyError> {
        let x = Poly::x();
        let xm1 = Poly::x_minus(1);
        let mut num1 = Poly::one();
        let mut num2 = Poly::one();
        for s in self.sizes() {
            num1 = &num1 * &cycle_polynomial(s as usize + 1);
            num2 = &num2 * &cycle_polynomial(s as usize);
        }
        let den1 = (&x * &xm1).pow(2);
        let t1 = num1.div_exact(&den1)?;
        let t2 = num2.div_exact(&x.pow(2))?;
        Ok(&t1 + &t2)
    }

    /// Closed form of `pi(theta, x+1)` as a polynomial in `x`:
    /// `(x/(x+1)) (x^(s1+s2+s3-1) + (-1)^(s1+s2) x^s3 + (-1)^(s1+s3) x^s2
    ///  + (-1)^(s2+s3) x^s1 + (-1)^(s1+s2+s3) (x-1))`.
    pub fn polynomial_shifted(&self) -> Result<Poly, FamilyError> {
        let [s1, s2, s3] = self.sizes();
        let total = self.total();
        let sign = |e: u32| if e.is_multiple_of(2) { 1i64 } else { -1 };
        let monomial = |c: i64, d: u32| {
            let mut coeffs = vec![0i64; d as usize + 1];
            coeffs[d as usize] = c;
            Poly::from_ints(&coeffs)
        };
        let mut inner = monomial(1, total - 1);
        inner = &inner + &monomial(sign(s1 + s2), s3);
        inner = &inner + &monomial(sign(s1 + s3), s2);
        inner = &inner + &monomial(sign(s2 + s3), s1);
        inner = &inner + &Poly::x_minus(1).scale(&crate::poly::rint(sign(total)));
        let num = &Poly::x() * &inner;
        Ok(num.div_exact(&Poly::from_ints(&[1, 1]))?)
    }
}

/// `K4` with the three edges at one hub vertex subdivided into paths of
/// sizes `s1, s2, s3` (star pattern); the opposite triangle stays whole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sk4Spec {
    pub s1: u32,
    pub s2: u32,
    pub s3: u32,
}

impl Sk4Spec {
    pub fn new(s1: u32, s2: u32, s3: u32) -> Result<Self, FamilyError> {
        if s1 < 1 || s2 < 1 || s3 < 1 {
            return Err(invalid("subdivision path sizes must be >= 1"));
        }
        Ok(Sk4Spec { s1, s2, s3 })
    }

    pub fn sizes(&self) -> [u32; 3] {
        [self.s1, self.s2, self.s3]
    }

    pub fn total(&self) -> u32 {
        self.s1 + self.s2 + self.s3
    }

    /// Hub 0, corners 1, 2, 3; order is `s1 + s2 + s3 + 1`.
    pub fn build(&self) -> Graph {
        let mut edges = vec![(1, 2), (2, 3), (1, 3)];
        let mut next = 4;
        for (corner, s) in [(1, self.s1), (2, self.s2), (3, self.s3)] {
            push_path(&mut edges, &mut next, 0, corner, s as usize);
        }
        Graph::new(next, &edges).expect("valid construction")
    }

    /// Deleting an outer-triangle edge gives one theta, contracting gives
    /// another: `pi(SK4) = pi(theta_{s1+1,s2,s3+1}) - pi(theta_{s1,s2+1,s3})`.
    pub fn polynomial(&self) -> Result<Poly, FamilyError> {
        let del = ThetaSpec::new(self.s1 + 1, self.s2, self.s3 + 1)?.polynomial()?;
        let con = ThetaSpec::new(self.s1, self.s2 + 1, self.s3)?.polynomial()?;
        Ok(&del - &con)
    }
}

/// Subdivision of `K_{3,t}`: the edge from side vertex `a` (resp. `b`, `c`)
/// to `v_i` is replaced by a path of size `a[i]` (resp. `b[i]`, `c[i]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K3tSpec {
    pub t: usize,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

impl K3tSpec {
    pub fn new(t: usize, a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Result<Self, FamilyError> {
        if t == 0 {
            return Err(invalid("t must be >= 1"));
        }
        if a.len() != t || b.len() != t || c.len() != t {
            return Err(invalid("size sequences must have length t"));
        }
        if a.iter().chain(&b).chain(&c).any(|&s| s < 1) {
            return Err(invalid("path sizes must be >= 1"));
        }
        Ok(K3tSpec { t, a, b, c })
    }

    pub fn uniform(t: usize, size: u32) -> Result<Self, FamilyError> {
        K3tSpec::new(t, vec![size; t], vec![size; t], vec![size; t])
    }

    pub fn size_sum(&self) -> u32 {
        self.a.iter().chain(&self.b).chain(&self.c).sum()
    }

    /// Order of the built graph: `sum(a_i + b_i + c_i) - 2t + 3`.
    pub fn order(&self) -> usize {
        self.size_sum() as usize + 3 - 2 * self.t
    }

    /// Sides a=0, b=1, c=2; centers `v_i = 3 + i`.
    pub fn build(&self) -> Graph {
        let mut edges = Vec::new();
        let mut next = 3 + self.t;
        for i in 0..self.t {
            let vi = 3 + i;
            push_path(&mut edges, &mut next, 0, vi, self.a[i] as usize);
            push_path(&mut edges, &mut next, 1, vi, self.b[i] as usize);
            push_path(&mut edges, &mut next, 2, vi, self.c[i] as usize);
        }
        Graph::new(next, &edges).expect("valid construction")
    }

    /// Five-term closed form: three 2-clique sums of thetas, a 1-clique sum
    /// of thetas, and a 3-clique sum of star-subdivided `K4`s.
    pub fn polynomial(&self) -> Result<Poly, FamilyError> {
        let x = Poly::x();
        let xm1 = Poly::x_minus(1);
        let xm2 = Poly::x_minus(2);
        let e = (self.t - 1) as u32;
        let den_edge = (&x * &xm1).pow(e);
        let den_vertex = x.pow(e);
        let den_triangle = (&(&x * &xm1) * &xm2).pow(e);

        let mut prod_a = Poly::one(); // theta_{a_i+1, b_i, c_i}
        let mut prod_b = Poly::one(); // theta_{a_i, b_i+1, c_i}
        let mut prod_c = Poly::one(); // theta_{a_i, b_i, c_i+1}
        let mut prod_plain = Poly::one(); // theta_{a_i, b_i, c_i}
        let mut prod_sk4 = Poly::one(); // SK4^{a_i, b_i, c_i}
        for i in 0..self.t {
            let (ai, bi, ci) = (self.a[i], self.b[i], self.c[i]);
            prod_a = &prod_a * &ThetaSpec::new(ai + 1, bi, ci)?.polynomial()?;
            prod_b = &prod_b * &ThetaSpec::new(ai, bi + 1, ci)?.polynomial()?;
            prod_c = &prod_c * &ThetaSpec::new(ai, bi, ci + 1)?.polynomial()?;
            prod_plain = &prod_plain * &ThetaSpec::new(ai, bi, ci)?.polynomial()?;
            prod_sk4 = &prod_sk4 * &Sk4Spec::new(ai, bi, ci)?.polynomial()?;
        }
        let mut acc = prod_a.div_exact(&den_edge)?;
        acc = &acc + &prod_b.div_exact(&den_edge)?;
        acc = &acc + &prod_c.div_exact(&den_edge)?;
        acc = &acc + &prod_plain.div_exact(&den_vertex)?;
        acc = &acc + &prod_sk4.div_exact(&den_triangle)?;
        Ok(acc)
    }
}

/// Connected graph whose blocks are cycles (given lengths) and bridge edges.
///
/// The attachment plan lists, for every block after the first, the vertex it
/// hangs from; `None` selects a path-of-blocks layout. The chromatic
/// polynomial depends only on the block multiset, not the plan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusSpec {
    pub cycles: Vec<usize>,
    pub bridges: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attachment: Option<Vec<usize>>,
}

impl CactusSpec {
    pub fn new(cycles: Vec<usize>, bridges: usize, attachment: Option<Vec<usize>>) -> Result<Self, FamilyError> {
        if cycles.iter().any(|&n| n < 3) {
            return Err(invalid("cycle lengths must be >= 3"));
        }
        let spec = CactusSpec { cycles, bridges, attachment };
        spec.build_checked()?;
        Ok(spec)
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Order bookkeeping: `n = t - p + 1 + sum(n_i)`.
    pub fn order(&self) -> usize {
        self.bridges + 1 + self.cycles.iter().sum::<usize>() - self.cycle_count()
    }

    pub fn build(&self) -> Graph {
        self.build_checked().expect("validated spec")
    }

    fn build_checked(&self) -> Result<Graph, FamilyError> {
        let block_count = self.cycle_count() + self.bridges;
        if let Some(plan) = &self.attachment {
            if plan.len() != block_count.saturating_sub(1) {
                return Err(invalid("attachment plan must name one vertex per block after the first"));
            }
        }
        if block_count == 0 {
            return Ok(Graph::empty(1).expect("one vertex"));
        }
        let mut edges = Vec::new();
        let mut next = 0usize;
        for (idx, block) in (0..self.cycle_count())
            .map(|i| Some(self.cycles[i]))
            .chain((0..self.bridges).map(|_| None))
            .enumerate()
        {
            let attach = if idx == 0 {
                next = 1;
                0
            } else {
                let at = match &self.attachment {
                    Some(plan) => plan[idx - 1],
                    None => next - 1,
                };
                if at >= next {
                    return Err(invalid(format!("attachment vertex {at} does not exist yet")));
                }
                at
            };
            match block {
                Some(len) => {
                    // cycle through `attach` using len-1 fresh vertices
                    let first = next;
                    for k in 0..len - 1 {
                        let v = next;
                        next += 1;
                        let prev = if k == 0 { attach } else { v - 1 };
                        edges.push((prev, v));
                        let _ = first;
                    }
                    edges.push((next - 1, attach));
                }
                None => {
                    let v = next;
                    next += 1;
                    edges.push((attach, v));
                }
            }
        }
        Graph::new(next, &edges).map_err(|e| invalid(e.to_string()))
    }

    /// Closed form `(x-1)^(t+p) / x^(p-1) * prod((x-1)^(n_i - 1) + (-1)^n_i)`.
    pub fn polynomial(&self) -> Result<Poly, FamilyError> {
        let xm1 = Poly::x_minus(1);
        let p = self.cycle_count();
        let t = self.bridges;
        let mut num = xm1.pow((t + p) as u32);
        for &len in &self.cycles {
            let sign = if len % 2 == 0 { 1 } else { -1 };
            let factor = &xm1.pow(len as u32 - 1) + &Poly::constant(crate::poly::rint(sign));
            num = &num * &factor;
        }
        if p == 0 {
            Ok(&num * &Poly::x())
        } else {
            Ok(num.div_exact(&Poly::x().pow(p as u32 - 1))?)
        }
    }
}

/// Member of the conjectured extremal family: a `k`-clique with `n - k`
/// tree vertices attached, so the size is `C(k,2) + n - k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CStarSpec {
    pub k: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attachment: Option<Vec<usize>>,
}

impl CStarSpec {
    pub fn new(k: usize, n: usize, attachment: Option<Vec<usize>>) -> Result<Self, FamilyError> {
        if k < 1 || n < k {
            return Err(invalid("need n >= k >= 1"));
        }
        if let Some(plan) = &attachment {
            if plan.len() != n - k {
                return Err(invalid("attachment plan must name one parent per extra vertex"));
            }
            for (j, &p) in plan.iter().enumerate() {
                if p >= k + j {
                    return Err(invalid(format!("parent {p} does not exist for extra vertex {j}")));
                }
            }
        }
        Ok(CStarSpec { k, n, attachment })
    }

    pub fn build(&self) -> Graph {
        let mut edges = Graph::complete(self.k).edges();
        for j in 0..(self.n - self.k) {
            let parent = self.attachment.as_ref().map_or(0, |plan| plan[j]);
            edges.push((parent, self.k + j));
        }
        Graph::new(self.n, &edges).expect("valid construction")
    }

    /// Every member has `pi = (x)_k (x-1)^(n-k)` regardless of the plan.
    pub fn polynomial(&self) -> Poly {
        &Poly::falling_factorial(self.k) * &Poly::x_minus(1).pow((self.n - self.k) as u32)
    }
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(invalid("cycles need n >= 3"));
    }
    Ok(Graph::cycle(n))
}

/// Complete graph on `k` vertices.
pub fn complete(k: usize) -> Result<Graph, FamilyError> {
    if k > 64 {
        return Err(invalid("complete graphs are capped at 64 vertices"));
    }
    Ok(Graph::complete(k))
}

/// The `t`-spoke wheel: hub 0 adjacent to the rim cycle `1..=t`.
pub fn wheel(t: usize) -> Result<Graph, FamilyError> {
    if t < 3 {
        return Err(invalid("wheels need t >= 3"));
    }
    let mut edges: Vec<(usize, usize)> = (1..=t).map(|i| (0, i)).collect();
    edges.extend((1..=t).map(|i| (i, if i == t { 1 } else { i + 1 })));
    Graph::new(t + 1, &edges).map_err(|e| invalid(e.to_string()))
}

/// The ladder-like graph on `u_1..u_t, v_2..v_{t-1}`: the `u` path closed by
/// `u_1 u_t`, the inner `v` path, the rungs `u_i v_i`, and the two end rungs
/// `u_1 v_2`, `u_t v_{t-1}`. Here `u_i` is vertex `i - 1` and `v_i` is
/// vertex `t + i - 2`.
pub fn vt(t: usize) -> Result<Graph, FamilyError> {
    if t < 4 {
        return Err(invalid("the ladder-like family needs t >= 4"));
    }
    let u = |i: usize| i - 1;
    let v = |i: usize| t + i - 2;
    let mut edges = Vec::new();
    edges.extend((1..t).map(|i| (u(i), u(i + 1))));
    edges.extend((2..t - 1).map(|i| (v(i), v(i + 1))));
    edges.extend((2..=t - 1).map(|i| (u(i), v(i))));
    edges.push((u(1), v(2)));
    edges.push((u(t), v(t - 1)));
    edges.push((u(1), u(t)));
    Graph::new(2 * t - 2, &edges).map_err(|e| invalid(e.to_string()))
}

/// Host family for [`cactus_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessHost {
    Wheel,
    Vt,
}

/// Cactus subgraph certificate: the subgraph, the host, and the vertex map.
#[derive(Debug, Clone)]
pub struct CactusWitness {
    pub host: Graph,
    pub witness: Graph,
    /// `map[w]` is the host vertex that witness vertex `w` stands for.
    pub map: Vec<usize>,
    pub cycle_blocks: usize,
}

impl CactusWitness {
    /// Mechanical check: the map is injective, every witness edge is a host
    /// edge, the witness is a cactus, and it has the promised cycle count.
    pub fn certifies(&self) -> bool {
        let mut seen = vec![false; self.host.n()];
        for &h in &self.map {
            if h >= self.host.n() || seen[h] {
                return false;
            }
            seen[h] = true;
        }
        for (a, b) in self.witness.edges() {
            if !self.host.has_edge(self.map[a], self.map[b]) {
                return false;
            }
        }
        if !self.witness.is_cactus() {
            return false;
        }
        let bd = blocks::blocks(&self.witness).expect("cactus is connected");
        let cycles = bd.blocks.iter().filter(|b| b.edges.len() >= 3).count();
        cycles == self.cycle_blocks
    }
}

/// Explicit cactus subgraph with `t/2` cycles inside `W_t` or `V_t`.
///
/// For the wheel: hub-sharing triangles on rim pairs. For `V_t`: the two end
/// triangles plus quadrilaterals `u_i u_{i+1} v_{i+1} v_i` at odd `i`,
/// joined by bridge edges along the `u` path.
pub fn cactus_witness(host: WitnessHost, t: usize) -> Result<CactusWitness, FamilyError> {
    if t < 12 || !t.is_multiple_of(2) {
        return Err(FamilyError::UnsupportedHost);
    }
    match host {
        WitnessHost::Wheel => {
            let host_graph = wheel(t)?;
            let mut edges = Vec::new();
            for i in 1..=t / 2 {
                edges.push((0, 2 * i - 1));
                edges.push((0, 2 * i));
                edges.push((2 * i - 1, 2 * i));
            }
            let witness = Graph::new(t + 1, &edges).expect("subset of wheel");
            Ok(CactusWitness {
                host: host_graph,
                witness,
                map: (0..=t).collect(),
                cycle_blocks: t / 2,
            })
        }
        WitnessHost::Vt => {
            let host_graph = vt(t)?;
            let u = |i: usize| i - 1;
            let v = |i: usize| t + i - 2;
            let mut edges = vec![
                (u(1), u(2)),
                (u(2), v(2)),
                (u(1), v(2)), // first end triangle
                (u(t - 1), u(t)),
                (u(t - 1), v(t - 1)),
                (u(t), v(t - 1)), // second end triangle
            ];
            for i in (3..=t - 3).step_by(2) {
                edges.push((u(i), u(i + 1)));
                edges.push((v(i), v(i + 1)));
                edges.push((u(i), v(i)));
                edges.push((u(i + 1), v(i + 1)));
            }
            for k in 1..=(t - 2) / 2 {
                edges.push((u(2 * k), u(2 * k + 1))); // bridges between cycles
            }
            let witness = Graph::new(2 * t - 2, &edges).expect("subset of the host");
            Ok(CactusWitness {
                host: host_graph,
                witness,
                map: (0..2 * t - 2).collect(),
                cycle_blocks: t / 2,
            })
        }
    }
}
