//! Bounding functions for the special families, exact inequality checks on
//! rational grids, and the two certified root computations that anchor the
//! subdivided-`K_{3,10}` and six-cycle-cactus comparisons.
//!
//! Bound functions with negative powers of `x` are evaluated as exact
//! rationals at each grid point rather than materialized as polynomials.

use crate::families::{CactusSpec, K3tSpec, Sk4Spec, ThetaSpec};
use crate::poly::roots::{largest_real_root, positive_beyond, Positivity, RootSearch, SturmChain};
use crate::poly::{decimal_string, format_rational, rat, rint, Poly, Rational, RootInterval};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("outside the lemma domain: {0}")]
    DomainViolation(String),
    #[error("x must be nonzero")]
    ZeroArgument,
    #[error(transparent)]
    Family(#[from] crate::families::FamilyError),
}

/// Exact comparison record for one bound instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub lemma: String,
    pub params: serde_json::Value,
    pub x: String,
    pub lhs: String,
    pub rhs: String,
    /// `lhs <= rhs`, decided exactly.
    pub holds: bool,
    /// `lhs < rhs`.
    pub strict: bool,
}

impl BoundReport {
    fn new(lemma: &str, params: serde_json::Value, x: &Rational, lhs: Rational, rhs: Rational) -> Self {
        BoundReport {
            lemma: lemma.to_string(),
            params,
            x: format_rational(x),
            lhs: format_rational(&lhs),
            rhs: format_rational(&rhs),
            holds: lhs <= rhs,
            strict: lhs < rhs,
        }
    }

    pub fn lhs_rational(&self) -> Rational {
        crate::poly::parse_rational(&self.lhs).expect("stored canonically")
    }

    pub fn rhs_rational(&self) -> Rational {
        crate::poly::parse_rational(&self.rhs).expect("stored canonically")
    }

    pub fn slack(&self) -> Rational {
        self.rhs_rational() - self.lhs_rational()
    }
}

/// `x^e` for possibly negative `e`; `x` must be nonzero when `e < 0`.
pub fn rational_pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::pow(x.clone(), e as usize)
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        num_traits::pow::pow(x.recip(), (-e) as usize)
    }
}

fn require(cond: bool, msg: &str) -> Result<(), BoundsError> {
    if cond {
        Ok(())
    } else {
        Err(BoundsError::DomainViolation(msg.to_string()))
    }
}

/// The four-case factor bounding `pi(theta_{a,b,c}, x+1) (x+1) / x^(a+b+c)`,
/// keyed on how many of `a`, `b`, `c` equal 1.
pub fn theta_bound_factor(a: u32, b: u32, c: u32, x: &Rational) -> Result<Rational, BoundsError> {
    require(a >= 1 && b >= 1 && c >= 1, "a, b, c must be positive")?;
    if x.is_zero() {
        return Err(BoundsError::ZeroArgument);
    }
    let ones = [a, b, c].iter().filter(|&&s| s == 1).count();
    let p = |e: i64| rational_pow(x, -e);
    Ok(match ones {
        0 => rint(1) + rint(3) * p(3) + p(4),
        1 => rint(1) + rint(2) * p(3) + p(6),
        2 => rint(1) + p(1) + p(3) + p(4),
        _ => rint(1) + rint(2) * p(1) + p(2),
    })
}

/// `pi(theta_{a,b,c}, x+1) <= x^(a+b+c) G_{a,b,c}(x) / (x+1)` for `x >= 1`.
pub fn check_theta_bound(a: u32, b: u32, c: u32, x: &Rational) -> Result<BoundReport, BoundsError> {
    require(x >= &rint(1), "x >= 1 required")?;
    let spec = ThetaSpec::new(a, b, c)?;
    let lhs = spec.polynomial_shifted()?.eval(x);
    let factor = theta_bound_factor(a, b, c, x)?;
    let rhs = rational_pow(x, spec.total() as i64) * factor / (x + rint(1));
    Ok(BoundReport::new("theta", json!({ "a": a, "b": b, "c": c }), x, lhs, rhs))
}

/// Uniform variant: `pi(theta, x+1) <= x^(a+b+c) (1 + 1/x + 1/x^3 + 1/x^4)
/// / (x+1)` whenever some size is at least 2 and `x >= sqrt(2)` (checked
/// exactly as `x > 0` and `x^2 >= 2`).
pub fn check_theta_uniform_bound(a: u32, b: u32, c: u32, x: &Rational) -> Result<BoundReport, BoundsError> {
    require([a, b, c].iter().any(|&s| s >= 2), "some size must be >= 2")?;
    require(x.is_positive() && (x * x) >= rint(2), "x >= sqrt(2) required")?;
    let spec = ThetaSpec::new(a, b, c)?;
    let lhs = spec.polynomial_shifted()?.eval(x);
    let p = |e: i64| rational_pow(x, -e);
    let factor = rint(1) + p(1) + p(3) + p(4);
    let rhs = rational_pow(x, spec.total() as i64) * factor / (x + rint(1));
    Ok(BoundReport::new("theta-uniform", json!({ "a": a, "b": b, "c": c }), x, lhs, rhs))
}

/// `pi(SK4^{s1,s2,s3}, x+1) <= ((x-1)/(x+1)) x^(s1+s2+s3+1) (1 + 2/x^2)`
/// for real `x >= 2`.
pub fn check_sk4_bound(s1: u32, s2: u32, s3: u32, x: &Rational) -> Result<BoundReport, BoundsError> {
    require(x >= &rint(2), "x >= 2 required")?;
    let spec = Sk4Spec::new(s1, s2, s3)?;
    let lhs = spec.polynomial()?.shift(&rint(1)).eval(x);
    let factor = rint(1) + rint(2) * rational_pow(x, -2);
    let rhs = (x - rint(1)) / (x + rint(1)) * rational_pow(x, spec.total() as i64 + 1) * factor;
    Ok(BoundReport::new("sk4", json!({ "s1": s1, "s2": s2, "s3": s3 }), x, lhs, rhs))
}

/// `F(x,t) = 3 (1 + 1/x + 1/x^3 + 1/x^4)^t + (1/x)(1 + 2/x + 1/x^2)^t
///  + (x-1)(1 + 2/x^2)^t`.
pub fn k3t_bound_factor(x: &Rational, t: usize) -> Result<Rational, BoundsError> {
    if x.is_zero() {
        return Err(BoundsError::ZeroArgument);
    }
    require(t >= 1, "t must be >= 1")?;
    let p = |e: i64| rational_pow(x, -e);
    let one = Rational::one();
    let term1 = rint(3) * num_traits::pow::pow(&one + p(1) + p(3) + p(4), t);
    let term2 = p(1) * num_traits::pow::pow(&one + rint(2) * p(1) + p(2), t);
    let term3 = (x - &one) * num_traits::pow::pow(&one + rint(2) * p(2), t);
    Ok(term1 + term2 + term3)
}

/// `pi(G, x+1) <= (x^(n+2t-2) / (x+1)^(2t-1)) F(x, t)` for a subdivided
/// `K_{3,t}` of order `n`, real `x >= 2`.
pub fn check_k3t_bound(spec: &K3tSpec, x: &Rational) -> Result<BoundReport, BoundsError> {
    require(x >= &rint(2), "x >= 2 required")?;
    let lhs = spec.polynomial()?.shift(&rint(1)).eval(x);
    let n = spec.order() as i64;
    let t = spec.t as i64;
    let rhs = rational_pow(x, n + 2 * t - 2) / rational_pow(&(x + rint(1)), 2 * t - 1)
        * k3t_bound_factor(x, spec.t)?;
    Ok(BoundReport::new(
        "k3t",
        json!({ "t": spec.t, "a": spec.a, "b": spec.b, "c": spec.c }),
        x,
        lhs,
        rhs,
    ))
}

/// `prod (x^(N_i) + 1) <= x^(N - 3p) (x + 1/(3x^2))^(3p)` for `x >= 1` and
/// every `N_i >= 3`, together with the inner binomial inequality
/// `C(p, i) <= C(3p, i) / 3^i` for `i = 0..p`.
pub fn check_product_bound(sizes: &[u64], x: &Rational) -> Result<BoundReport, BoundsError> {
    require(!sizes.is_empty(), "at least one exponent required")?;
    require(sizes.iter().all(|&n| n >= 3), "every exponent must be >= 3")?;
    require(x >= &rint(1), "x >= 1 required")?;
    let p = sizes.len();
    let total: u64 = sizes.iter().sum();
    let mut lhs = Rational::one();
    for &ni in sizes {
        lhs *= rational_pow(x, ni as i64) + rint(1);
    }
    let base = x + rational_pow(x, -2) / rint(3);
    let rhs = rational_pow(x, total as i64 - 3 * p as i64) * num_traits::pow::pow(base, 3 * p);
    let binomials_ok = binomial_ratio_holds(p as u64);
    let mut report = BoundReport::new("product", json!({ "sizes": sizes }), x, lhs, rhs);
    report.holds &= binomials_ok;
    Ok(report)
}

/// `C(p, i) <= C(3p, i) / 3^i` for all `i = 0..p`.
pub fn binomial_ratio_holds(p: u64) -> bool {
    (0..=p).all(|i| {
        let small = num_integer::binomial(BigInt::from(p), BigInt::from(i));
        let large = num_integer::binomial(BigInt::from(3 * p), BigInt::from(i));
        small * BigInt::from(3u64).pow(i as u32) <= large
    })
}

/// `pi(G, x+1) <= x^(n-8p-1) (3x^3+1)^(3p) / (3^(3p) (x+1)^(p-1))` for a
/// cactus with `p` cycles, `t` bridges, order `n`, real `x >= 1`.
pub fn check_cactus_bound(spec: &CactusSpec, x: &Rational) -> Result<BoundReport, BoundsError> {
    require(x >= &rint(1), "x >= 1 required")?;
    let lhs = spec.polynomial()?.shift(&rint(1)).eval(x);
    let n = spec.order() as i64;
    let p = spec.cycle_count() as i64;
    let cube = rint(3) * x * x * x + rint(1);
    let rhs = rational_pow(x, n - 8 * p - 1) * num_traits::pow::pow(cube, 3 * p as usize)
        / rational_pow(&rint(3), 3 * p)
        / rational_pow(&(x + rint(1)), p - 1);
    Ok(BoundReport::new(
        "cactus",
        json!({ "cycles": spec.cycles, "bridges": spec.bridges }),
        x,
        lhs,
        rhs,
    ))
}

/// Root certificate: isolating interval for the largest real root plus a
/// certified positivity verdict on `[x0, inf)`, with Sturm sign tables.
#[derive(Debug, Clone, Serialize)]
pub struct RootCertificate {
    pub certificate: String,
    pub parameter: usize,
    pub degree: usize,
    pub leading_coefficient: String,
    pub leading_positive: bool,
    pub largest_root: RootInterval,
    /// Truncated decimal rendering of the interval midpoint (display only).
    pub largest_root_decimal: String,
    pub positive_from: String,
    pub positivity: Positivity,
    pub sign_table_at_x0: Vec<i8>,
    pub sign_table_at_infinity: Vec<i8>,
    pub variations_at_x0: usize,
    pub variations_at_infinity: usize,
}

fn certify(name: &str, parameter: usize, poly: &Poly, x0: Rational) -> RootCertificate {
    let width = rat(1, 1_000_000);
    let interval = match largest_real_root(poly, &width).expect("nonzero certificate polynomial") {
        RootSearch::Interval(iv) => iv,
        RootSearch::NoRealRoot => panic!("certificate polynomial must have a real root"),
    };
    let chain = SturmChain::new(&poly.square_free());
    let mid = (interval.lo_rational() + interval.hi_rational()) / rint(2);
    RootCertificate {
        certificate: name.to_string(),
        parameter,
        degree: poly.degree().expect("nonzero"),
        leading_coefficient: format_rational(poly.leading().expect("nonzero")),
        leading_positive: poly.leading().expect("nonzero").is_positive(),
        largest_root: interval,
        largest_root_decimal: decimal_string(&mid, 7),
        positive_from: format_rational(&x0),
        positivity: positive_beyond(poly, &x0),
        sign_table_at_x0: chain.sign_table_at(&x0),
        sign_table_at_infinity: chain.sign_table_at_pos_inf(),
        variations_at_x0: chain.variations_at(&x0),
        variations_at_infinity: chain.variations_at_pos_inf(),
    }
}

/// Comparison polynomial for subdivided `K_{3,t}`:
/// `r - q` with `q = 3x (x^4+x^3+x+1)^t + (x^4+2x^3+x^2)^t
///  + x(x-1)(x^4+2x^2)^t` and `r = x^(2t-1) (x+1)^(2t-1) (x+1)(x)(x-1)(x-2)`.
pub fn k33_comparison_poly(t: usize) -> Poly {
    let x = Poly::x();
    let q1 = &x.scale(&rint(3)) * &Poly::from_ints(&[1, 1, 0, 1, 1]).pow(t as u32);
    let q2 = Poly::from_ints(&[0, 0, 1, 2, 1]).pow(t as u32);
    let q3 = &(&x * &Poly::x_minus(1)) * &Poly::from_ints(&[0, 0, 2, 0, 1]).pow(t as u32);
    let q = &(&q1 + &q2) + &q3;
    let shifted_ff4 = Poly::falling_factorial(4).shift(&rint(1));
    let r = &(&x.pow(2 * t as u32 - 1) * &Poly::from_ints(&[1, 1]).pow(2 * t as u32 - 1)) * &shifted_ff4;
    &r - &q
}

/// Comparison polynomial for a cactus with `p` cycles:
/// `3^(3p) x^(8p-3) (x+1)(x)(x-1)(x-2) (x+1)^(p-1) - (3x^3+1)^(3p)`.
pub fn cactus_comparison_poly(p: usize) -> Poly {
    let shifted_ff4 = Poly::falling_factorial(4).shift(&rint(1));
    let scale = rational_pow(&rint(3), 3 * p as i64);
    let lead = &(&Poly::x().pow(8 * p as u32 - 3) * &shifted_ff4)
        * &Poly::from_ints(&[1, 1]).pow(p as u32 - 1);
    let cube = Poly::from_ints(&[1, 0, 0, 3]).pow(3 * p as u32);
    &lead.scale(&scale) - &cube
}

/// Certificate closing the subdivided-`K_{3,10}` comparison: the largest
/// real root of `r - q` is isolated near 2.9408 and the polynomial is
/// certified positive for all `x >= 2.95`.
pub fn k33_root_certificate(t: usize) -> RootCertificate {
    certify("k33son", t, &k33_comparison_poly(t), rat(59, 20))
}

/// Certificate closing the six-cycle-cactus comparison: largest real root
/// near 2.99791, positivity certified for all `x >= 2.998`.
pub fn cactus_root_certificate(p: usize) -> RootCertificate {
    certify("cactusson", p, &cactus_comparison_poly(p), rat(1499, 500))
}

/// The paper-scale instances: `t = 10` and `p = 6`.
pub fn k33son_certificate() -> RootCertificate {
    k33_root_certificate(10)
}

pub fn cactusson_certificate() -> RootCertificate {
    cactus_root_certificate(6)
}

impl RootCertificate {
    /// Everything the certificate promises, decided from its own fields.
    pub fn all_checks_pass(&self) -> bool {
        self.leading_positive
            && self.positivity == Positivity::PositiveForAllXGeX0
            && self.largest_root.multiplicity_free
    }
}

/// Default rational grid for the bound suites.
pub fn default_x_grid() -> Vec<Rational> {
    vec![rint(1), rat(3, 2), rint(2), rat(5, 2), rint(3), rint(4), rint(10)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_factor_cases() {
        // all four table rows at hand-checked points
        assert_eq!(theta_bound_factor(2, 2, 2, &rint(2)).unwrap(), rat(23, 16));
        assert_eq!(theta_bound_factor(1, 1, 1, &rint(2)).unwrap(), rat(9, 4));
        assert_eq!(theta_bound_factor(1, 2, 2, &rint(3)).unwrap(), rat(784, 729));
        assert_eq!(theta_bound_factor(1, 1, 3, &rint(3)).unwrap(), rat(112, 81));
        assert_eq!(theta_bound_factor(0, 1, 1, &rint(2)), Err(BoundsError::DomainViolation("a, b, c must be positive".into())));
        assert_eq!(theta_bound_factor(1, 1, 1, &rint(0)), Err(BoundsError::ZeroArgument));
    }

    #[test]
    fn theta_bound_equality_case() {
        // all-ones at x = 1: both sides equal 2
        let r = check_theta_bound(1, 1, 1, &rint(1)).unwrap();
        assert!(r.holds && !r.strict);
        assert_eq!(r.lhs_rational(), rint(2));
        assert_eq!(r.rhs_rational(), rint(2));
    }

    #[test]
    fn theta_bound_smoke_grid() {
        for (a, b, c) in [(2, 1, 3), (1, 1, 2), (4, 4, 4), (1, 2, 2)] {
            for x in default_x_grid() {
                let r = check_theta_bound(a, b, c, &x).unwrap();
                assert!(r.holds, "theta bound failed at {a},{b},{c} x={x}");
            }
        }
        assert!(check_theta_bound(1, 1, 1, &rat(1, 2)).is_err());
    }

    #[test]
    fn theta_uniform_bound_domain() {
        assert!(check_theta_uniform_bound(2, 1, 1, &rat(3, 2)).unwrap().holds);
        assert!(check_theta_uniform_bound(4, 4, 4, &rint(2)).unwrap().holds);
        // near-boundary probe just above sqrt(2)
        assert!(check_theta_uniform_bound(2, 1, 1, &rat(14143, 10000)).unwrap().holds);
        // 1.414 is below sqrt(2)
        assert!(check_theta_uniform_bound(2, 1, 1, &rat(1414, 1000)).is_err());
        assert!(check_theta_uniform_bound(1, 1, 1, &rint(2)).is_err());
    }

    #[test]
    fn sk4_bound_examples() {
        let r = check_sk4_bound(1, 1, 1, &rint(2)).unwrap();
        assert_eq!(r.lhs_rational(), rint(0)); // K4 has no 3-coloring
        assert!(r.holds);
        assert!(check_sk4_bound(3, 4, 4, &rint(2)).unwrap().holds);
        assert!(check_sk4_bound(2, 2, 2, &rat(5, 2)).unwrap().holds);
        assert!(check_sk4_bound(1, 1, 1, &rat(3, 2)).is_err());
    }

    #[test]
    fn k3t_factor_and_bound() {
        assert_eq!(k3t_bound_factor(&rint(1), 1).unwrap(), rint(16));
        assert!(k3t_bound_factor(&rint(1), 0).is_err());
        assert_eq!(k3t_bound_factor(&rint(0), 1), Err(BoundsError::ZeroArgument));

        let spec = K3tSpec::uniform(1, 1).unwrap();
        assert!(check_k3t_bound(&spec, &rint(2)).unwrap().holds);
        let spec = K3tSpec::uniform(2, 2).unwrap();
        assert!(check_k3t_bound(&spec, &rint(3)).unwrap().holds);
        let spec = K3tSpec::new(3, vec![1, 2, 3], vec![2, 1, 2], vec![3, 3, 1]).unwrap();
        for x in [rint(2), rint(3), rint(5)] {
            assert!(check_k3t_bound(&spec, &x).unwrap().holds);
        }
        assert!(check_k3t_bound(&spec, &rint(1)).is_err());
    }

    #[test]
    fn product_bound_examples() {
        let r = check_product_bound(&[3], &rint(1)).unwrap();
        assert_eq!(r.lhs_rational(), rint(2));
        assert_eq!(r.rhs_rational(), rat(64, 27));
        assert!(r.holds);
        assert!(check_product_bound(&[3, 3, 3], &rint(2)).unwrap().holds);
        assert!(check_product_bound(&[2], &rint(1)).is_err());
        assert!(check_product_bound(&[3], &rat(1, 2)).is_err());
        // C(4,2) = 6 <= C(12,2)/9 = 66/9
        assert!(binomial_ratio_holds(4));
        assert!(binomial_ratio_holds(8));
    }

    #[test]
    fn cactus_bound_examples() {
        let spec = CactusSpec::new(vec![3], 0, None).unwrap();
        let r = check_cactus_bound(&spec, &rint(1)).unwrap();
        assert_eq!(r.lhs_rational(), rint(0)); // pi(C3, 2) = 0
        assert!(r.holds);

        let spec = CactusSpec::new(vec![3, 4], 2, None).unwrap();
        assert!(check_cactus_bound(&spec, &rint(2)).unwrap().holds);

        // the six-triangle shape of the cactus comparison
        let spec = CactusSpec::new(vec![3; 6], 5, None).unwrap();
        for x in [rint(1), rint(2), rint(3)] {
            assert!(check_cactus_bound(&spec, &x).unwrap().holds);
        }
        assert!(check_cactus_bound(&spec, &rat(1, 2)).is_err());
    }

    #[test]
    fn k33_certificate_isolates_the_root() {
        let cert = k33son_certificate();
        assert!(cert.leading_positive);
        assert_eq!(cert.positivity, Positivity::PositiveForAllXGeX0);
        assert!(cert.largest_root.width() <= rat(1, 1_000_000));
        assert!(cert.largest_root.contained_in(&rat(29407, 10000), &rat(29409, 10000)));
        // direct evaluation stays positive past the root
        let p = k33_comparison_poly(10);
        assert!(p.eval(&rint(3)).is_positive());
        assert!(cert.all_checks_pass());
    }

    #[test]
    fn cactus_certificate_isolates_the_root() {
        let cert = cactusson_certificate();
        assert!(cert.leading_positive);
        assert_eq!(cert.positivity, Positivity::PositiveForAllXGeX0);
        assert!(cert.largest_root.width() <= rat(1, 1_000_000));
        assert!(cert
            .largest_root
            .contained_in(&rat(299790, 100000), &rat(299792, 100000)));
        let q = cactus_comparison_poly(6);
        assert!(q.eval(&rint(3)).is_positive());
        assert!(cert.all_checks_pass());
    }

    #[test]
    fn certificates_count_no_roots_past_x0() {
        // no real root in [x0, cauchy bound]: exact Sturm count of zero
        for (poly, x0) in [
            (k33_comparison_poly(10), rat(59, 20)),
            (cactus_comparison_poly(6), rat(1499, 500)),
        ] {
            let chain = SturmChain::new(&poly.square_free());
            assert_eq!(chain.count_above(&x0), 0);
        }
    }
}
