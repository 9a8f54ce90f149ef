//! Certified real-root isolation via Sturm sequences over exact rationals.

use super::{Poly, PolyError, Rational, RootInterval};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Outcome of [`largest_real_root`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSearch {
    Interval(RootInterval),
    NoRealRoot,
}

/// Outcome of [`positive_beyond`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "witness")]
pub enum Positivity {
    /// `p(x) > 0` for every real `x >= x0`, certified by exact root counting.
    PositiveForAllXGeX0,
    IdenticallyZero,
    /// A rational point at (or within an isolating interval of) which strict
    /// positivity fails.
    FailsAt(String),
}

/// Integer polynomial kept primitive; sign queries avoid rational arithmetic.
#[derive(Debug, Clone)]
struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    fn from_poly(p: &Poly) -> IntPoly {
        let prim = p.primitive_part();
        IntPoly {
            c: prim.coeffs().iter().map(|r| r.numer().clone()).collect(),
        }
    }

    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    /// Sign of `p(num/den)` with `den > 0`, via `sum c_i num^i den^(d-i)`.
    fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        let d = self.degree();
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Horner in num, accumulating den powers for the lower-degree terms.
        for i in (0..=d).rev() {
            acc = acc * num + &self.c[i] * &den_pow;
            if i > 0 {
                den_pow *= den;
            }
        }
        sign_of(&acc)
    }

    fn sign_at_rational(&self, x: &Rational) -> i8 {
        self.sign_at(x.numer(), x.denom())
    }

    fn sign_at_pos_inf(&self) -> i8 {
        sign_of(self.c.last().unwrap())
    }

    fn sign_at_neg_inf(&self) -> i8 {
        let s = sign_of(self.c.last().unwrap());
        if self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }
}

fn sign_of(b: &BigInt) -> i8 {
    if b.is_zero() {
        0
    } else if b.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a square-free polynomial, with fast exact sign queries.
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain `p, p', -rem(...)`, each normalized to a primitive
    /// integer polynomial (positive scaling preserves the sign pattern).
    pub fn new(square_free: &Poly) -> SturmChain {
        let mut rational_chain = vec![square_free.clone(), square_free.derivative()];
        loop {
            let n = rational_chain.len();
            if rational_chain[n - 1].is_zero() {
                rational_chain.pop();
                break;
            }
            let (_, r) = rational_chain[n - 2]
                .divrem(&rational_chain[n - 1])
                .expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            rational_chain.push((-&r).primitive_part());
        }
        SturmChain {
            chain: rational_chain.iter().map(IntPoly::from_poly).collect(),
        }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_rational(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_pos_inf()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_neg_inf()))
    }

    /// Number of distinct real roots in `(lo, hi]`; endpoints must not be roots.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        debug_assert!(self.sign_at(lo) != 0 && self.sign_at(hi) != 0);
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Number of distinct real roots in `(lo, +inf)`.
    pub fn count_above(&self, lo: &Rational) -> usize {
        self.variations_at(lo) - self.variations_at_pos_inf()
    }

    /// Sign of the underlying square-free polynomial at `x`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        self.chain[0].sign_at_rational(x)
    }

    /// Signs of every chain member at `x`, for certificate tables.
    pub fn sign_table_at(&self, x: &Rational) -> Vec<i8> {
        self.chain.iter().map(|p| p.sign_at_rational(x)).collect()
    }

    pub fn sign_table_at_pos_inf(&self) -> Vec<i8> {
        self.chain.iter().map(|p| p.sign_at_pos_inf()).collect()
    }
}

/// Total number of distinct real roots.
pub fn count_distinct_real_roots(p: &Poly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = SturmChain::new(&p.square_free());
    chain.variations_at_neg_inf() - chain.variations_at_pos_inf()
}

/// `1 + max |a_i| / |a_d|`: every real root has absolute value strictly below it.
pub fn cauchy_bound(p: &Poly) -> Rational {
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Rational::one(),
    };
    let lead = p.leading().unwrap().abs();
    let mut max = Rational::zero();
    for c in &p.coeffs()[..d] {
        let a = c.abs();
        if a > max {
            max = a;
        }
    }
    Rational::one() + max / lead
}

/// Picks a point in `(lo, hi)` that is not a root of the chain head.
fn non_root_point(chain: &SturmChain, lo: &Rational, hi: &Rational) -> Rational {
    let two = super::rint(2);
    let mut t = (lo + hi) / &two;
    let mut gap = (hi - lo) / &two;
    while chain.sign_at(&t) == 0 {
        gap /= &two;
        t += &gap;
    }
    t
}

/// Isolates the largest real root of `p` in an interval of width at most
/// `width`, certified by exact sign counting on the square-free part.
pub fn largest_real_root(p: &Poly, width: &Rational) -> Result<RootSearch, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    assert!(width.is_positive(), "isolation width must be positive");
    if p.degree() == Some(0) {
        return Ok(RootSearch::NoRealRoot);
    }
    let q = p.square_free();
    let chain = SturmChain::new(&q);
    let bound = cauchy_bound(&q);
    let mut lo = -&bound;
    let mut hi = bound;
    if chain.count_in(&lo, &hi) == 0 {
        return Ok(RootSearch::NoRealRoot);
    }
    // Invariants: q(lo) != 0, q(hi) != 0, the largest root lies in (lo, hi],
    // and no root exceeds hi.
    loop {
        let isolated = chain.count_in(&lo, &hi) == 1;
        if isolated && &(&hi - &lo) <= width {
            return Ok(RootSearch::Interval(RootInterval::new(&lo, &hi, true)));
        }
        let mid = non_root_point(&chain, &lo, &hi);
        if chain.count_in(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Decides exactly whether `p(x) > 0` for every real `x >= x0`.
pub fn positive_beyond(p: &Poly, x0: &Rational) -> Positivity {
    if p.is_zero() {
        return Positivity::IdenticallyZero;
    }
    let at_x0 = p.eval(x0);
    if !at_x0.is_positive() {
        return Positivity::FailsAt(super::format_rational(x0));
    }
    let q = p.square_free();
    let chain = SturmChain::new(&q);
    if chain.count_above(x0) == 0 {
        // Positive at x0 and no root to the right: positive on the whole ray.
        return Positivity::PositiveForAllXGeX0;
    }
    // Some root r > x0 exists, so strict positivity fails at r. Hunt for a
    // rational witness with p <= 0; an irrational root of even multiplicity
    // has none, in which case the midpoint of a tight isolating interval is
    // reported instead.
    let bound = cauchy_bound(&q);
    let mut hi = if &bound > x0 { bound } else { x0 + Rational::one() };
    if !p.eval(&hi).is_positive() {
        return Positivity::FailsAt(super::format_rational(&hi));
    }
    let mut lo = x0.clone();
    for _ in 0..128 {
        let mid = non_root_point(&chain, &lo, &hi);
        if !p.eval(&mid).is_positive() {
            return Positivity::FailsAt(super::format_rational(&mid));
        }
        if chain.count_in(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let two = super::rint(2);
    Positivity::FailsAt(super::format_rational(&((&lo + &hi) / &two)))
}
