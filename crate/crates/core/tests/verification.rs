//! Regression fixtures for the enumeration and verification pipeline.
//!
//! Counts were established by running the augmentation enumerator and
//! cross-checking the labeled-sweep route plus the published census of
//! connected graphs (1, 1, 2, 6, 21, 112, 853 for n = 1..7).

use tomescu_core::conjecture::*;
use tomescu_core::families::{K3tSpec, ThetaSpec};
use tomescu_core::graph::Graph;
use tomescu_core::poly::{rat, rint, Rational};

#[test]
fn connected_census_matches_sweep_route() {
    for n in 1..=6usize {
        let fast = enumerate_connected(n, |_| true).unwrap();
        let sweep = enumerate_connected_by_sweep(n).unwrap();
        assert_eq!(fast.len(), sweep.len(), "order {n}");
        let fa: Vec<String> = fast.iter().map(Graph::to_graph6).collect();
        let fb: Vec<String> = sweep.iter().map(Graph::to_graph6).collect();
        assert_eq!(fa, fb);
    }
    let expected = [1usize, 1, 2, 6, 21, 112, 853];
    for (i, want) in expected.iter().enumerate() {
        let n = i + 1;
        assert_eq!(enumerate_connected(n, |_| true).unwrap().len(), *want, "order {n}");
    }
}

#[test]
fn chromatic_class_census() {
    // connected 4-chromatic graphs per order
    let chi4 = [(4usize, 1usize), (5, 3), (6, 26), (7, 282)];
    for (n, want) in chi4 {
        let got = enumerate_connected(n, |g| g.chromatic_number() == 4).unwrap().len();
        assert_eq!(got, want, "4-chromatic census at order {n}");
    }
    // connected 3-chromatic graphs per order
    let chi3 = [(3usize, 1usize), (4, 2), (5, 12), (6, 64)];
    for (n, want) in chi3 {
        let got = enumerate_connected(n, |g| g.chromatic_number() == 3).unwrap().len();
        assert_eq!(got, want, "3-chromatic census at order {n}");
    }
}

#[test]
fn extremal_family_census() {
    for (n, want) in [(4usize, 1usize), (5, 1), (6, 3), (7, 7)] {
        let report = verify_conjecture(n).unwrap();
        assert_eq!(report.extremal.len(), want, "extremal census at order {n}");
        assert!(report.extremal_matches_predicate);
    }
}

#[test]
fn candidate_pipeline_census() {
    let report = finite_family_candidates(6).unwrap();
    assert_eq!(report.candidates.len(), 4);
    assert!(report.all_strictly_below);
    assert!(report.candidates.iter().all(|c| c.order == 6));
    for c in &report.candidates {
        let g = Graph::from_graph6(&c.graph6).unwrap();
        assert!(!g.is_planar());
        assert!(g.connectivity_class(3));
        assert_eq!(g.chromatic_number(), 4);
    }
}

#[test]
fn explorer_threshold_window() {
    // the worst crossover among subdivisions with unit sizes is K_{3,3}
    // itself, just below 7.405
    let grid: Vec<Rational> = (4..=10).map(rint).collect();
    let agg = explore_k33_family(1, &grid);
    assert_eq!(agg.specs_checked, 1);
    let root = agg.max_root.expect("crossover exists");
    assert!(root.lo_rational() > rat(740, 100));
    assert!(root.hi_rational() < rat(741, 100));
}

#[test]
fn clique_bound_census() {
    let r = verify_clique_bound(6, 4).unwrap();
    assert_eq!((r.checked, r.members.len()), (25, 3));
    assert!(r.violations.is_empty() && r.equality_mismatches.is_empty());
    let r = verify_clique_bound(6, 3).unwrap();
    assert_eq!((r.checked, r.members.len()), (62, 7));
    assert!(r.violations.is_empty() && r.equality_mismatches.is_empty());
}

#[test]
fn strict_gap_graphs_have_subcritical_roots() {
    // For every verified non-extremal graph the certified verdict also
    // supplies the largest gap root, which must stay below 4.
    let report = verify_conjecture(5).unwrap();
    assert!(report.violations.is_empty());
    let graphs = enumerate_connected(5, |g| g.chromatic_number() == 4).unwrap();
    for g in graphs {
        match gap_verdict(&g, 4).unwrap() {
            GapVerdict::EqualityEverywhere => {}
            GapVerdict::StrictlyBelow { certified_on_reals, largest_gap_root } => {
                assert!(certified_on_reals);
                let iv = largest_gap_root.expect("gap vanishes at 0");
                assert!(iv.hi_rational() < rint(4));
            }
            GapVerdict::ViolatedAt { .. } => panic!("no violations at order 5"),
        }
    }
}

#[test]
fn theta_shift_box_is_cheap_and_exact() {
    // spot the identity on a diagonal slice beyond the unit sizes
    for s in 1..=4u32 {
        let spec = ThetaSpec::new(s, (s % 4) + 1, ((s + 1) % 4) + 1).unwrap();
        assert_eq!(
            spec.polynomial().unwrap().shift(&rint(1)),
            spec.polynomial_shifted().unwrap()
        );
    }
}

#[test]
fn k3t_closed_form_survives_mixed_sizes() {
    let spec = K3tSpec::new(2, vec![3, 1], vec![2, 2], vec![1, 3]).unwrap();
    let closed = spec.polynomial().unwrap();
    let engine = tomescu_core::chromatic_polynomial(&spec.build());
    assert_eq!(closed, engine);
}

#[test]
fn theta_bound_slack_is_monotone_sane() {
    // the slack rhs - lhs stays nonnegative on a dense rational sample of [1, 50]
    use tomescu_core::bounds::check_theta_bound;
    for (a, b, c) in [(1, 1, 1), (2, 1, 3), (4, 4, 4), (1, 2, 2)] {
        for k in 0..=196i64 {
            let x = rint(1) + rat(k, 4);
            let r = check_theta_bound(a, b, c, &x).unwrap();
            assert!(
                r.slack() >= rint(0),
                "negative slack at ({a},{b},{c}) x={x}"
            );
        }
    }
}

#[test]
fn verified_graphs_pass_integer_point_cross_check() {
    // redundant integer-point check of the certified verdicts at order 6
    let bound = conjectured_bound(6, 4).unwrap();
    for g in enumerate_connected(6, |g| g.chromatic_number() == 4).unwrap() {
        let p = tomescu_core::chromatic_polynomial(&g);
        for x in 4..=12i64 {
            assert!(
                p.eval(&rint(x)) <= bound.eval(&rint(x)),
                "{} at x={x}",
                g.to_graph6()
            );
        }
    }
}

#[test]
fn shared_and_private_engine_caches_agree() {
    use tomescu_core::ChromaticEngine;
    let graphs: Vec<Graph> = enumerate_connected(5, |_| true).unwrap();
    let mut shared = ChromaticEngine::new();
    for g in &graphs {
        let from_shared = shared.polynomial(g);
        let from_private = ChromaticEngine::new().polynomial(g);
        assert_eq!(from_shared, from_private, "{}", g.to_graph6());
    }
}
