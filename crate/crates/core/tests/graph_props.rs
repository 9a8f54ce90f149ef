//! Randomized structural invariants for the graph layer, seeded for
//! reproducibility.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tomescu_core::chroma::count_colorings;
use tomescu_core::graph::{blocks, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, &edges).expect("valid")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(g in graph_strategy(20)) {
        let code = g.to_graph6();
        prop_assert_eq!(Graph::from_graph6(&code).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_permutation_invariant(g in graph_strategy(8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let reference = g.canonical_form();
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            prop_assert_eq!(g.permuted(&perm).canonical_form(), reference.clone());
        }
    }

    #[test]
    fn blocks_partition_edges(g in graph_strategy(9)) {
        prop_assume!(g.is_connected() && g.n() >= 1);
        let bd = blocks::blocks(&g).unwrap();
        let mut union: Vec<(usize, usize)> = bd.blocks.iter().flat_map(|b| b.edges.clone()).collect();
        union.sort_unstable();
        prop_assert_eq!(union.len(), g.size()); // pairwise disjoint
        prop_assert_eq!(union, g.edges()); // and covering
        for b in &bd.blocks {
            for pair in b.vertices.windows(2) {
                prop_assert!(pair[0] < pair[1]);
            }
        }
    }

    /// Cross-module: the chromatic number is the smallest positive x with a
    /// nonzero brute-force coloring count.
    #[test]
    fn chromatic_number_matches_counting(g in graph_strategy(6)) {
        prop_assume!(g.n() >= 1);
        let chi = g.chromatic_number();
        prop_assert!(count_colorings(&g, chi) > 0);
        if chi > 1 {
            prop_assert_eq!(count_colorings(&g, chi - 1), 0);
        }
    }
}

/// Blocks of a connected random graph: two blocks share at most one vertex,
/// and shared vertices are cut vertices.
#[test]
fn block_intersections_are_cut_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260810);
    let mut tested = 0;
    while tested < 40 {
        let n = rng.gen_range(2..=9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.35) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        tested += 1;
        let bd = blocks::blocks(&g).unwrap();
        for i in 0..bd.blocks.len() {
            for j in (i + 1)..bd.blocks.len() {
                let a: Vec<usize> = bd.blocks[i]
                    .vertices
                    .iter()
                    .filter(|v| bd.blocks[j].vertices.contains(v))
                    .copied()
                    .collect();
                assert!(a.len() <= 1, "blocks overlap in more than one vertex");
                if let [v] = a[..] {
                    assert!(bd.cut_vertices.contains(&v), "shared vertex {v} must cut");
                }
            }
        }
    }
}

/// Connectivity by exhaustive cutsets agrees with the structure of blocks:
/// a connected graph with at least 3 vertices is 2-connected exactly when it
/// has a single block.
#[test]
fn two_connectivity_matches_block_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tested = 0;
    while tested < 60 {
        let n = rng.gen_range(3..=8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        tested += 1;
        let bd = blocks::blocks(&g).unwrap();
        let single_block = bd.blocks.len() == 1 && bd.blocks[0].vertices.len() == g.n();
        assert_eq!(g.connectivity_class(2), single_block, "{g:?}");
    }
}
