//! Property tests over randomly sampled trees and mutated code strings.

use std::ops::ControlFlow;

use proptest::prelude::*;

use bitree_core::{
    breakdown, decode, elementary_move, encode, for_each_tree, lex, orbit, root_sweep,
    sample_random, Corner, Direction, EncodingRoot, PlaneTree, Token, VertexRef,
    DEFAULT_MAX_TREES,
};

fn small_tree() -> impl Strategy<Value = PlaneTree> {
    (1usize..=4, 1usize..=4, any::<u64>())
        .prop_map(|(n, m, seed)| sample_random(n, m, seed, DEFAULT_MAX_TREES).unwrap())
}

fn tree_with_root() -> impl Strategy<Value = (PlaneTree, EncodingRoot)> {
    (small_tree(), any::<u32>(), any::<u32>()).prop_map(|(tree, pick_v, pick_e)| {
        let vertex = VertexRef::white(1 + pick_v as usize % tree.white_count());
        let rot = tree.rotation(vertex);
        let edge = rot[pick_e as usize % rot.len()];
        (tree, EncodingRoot { vertex, edge })
    })
}

fn even_tree() -> impl Strategy<Value = PlaneTree> {
    (1usize..=4, 1usize..=4, any::<u64>())
        .prop_filter("even vertex count", |(n, m, _)| (n + m) % 2 == 0)
        .prop_map(|(n, m, seed)| sample_random(n, m, seed, DEFAULT_MAX_TREES).unwrap())
}

proptest! {
    #[test]
    fn decode_inverts_encode((tree, root) in tree_with_root()) {
        let code = encode(&tree, root).unwrap();
        prop_assert_eq!(code.len(), 2 * tree.vertex_count());
        let (back, back_root) = decode(&code).unwrap();
        prop_assert_eq!(back, tree);
        prop_assert_eq!(back_root, root);
    }

    #[test]
    fn printed_codes_relex((tree, root) in tree_with_root()) {
        let code = encode(&tree, root).unwrap();
        prop_assert_eq!(lex(&code.to_string()).unwrap(), code);
    }

    #[test]
    fn contour_visits_every_corner_once((tree, pick) in (small_tree(), any::<u32>())) {
        let verts: Vec<_> = tree.vertices().collect();
        let vertex = verts[pick as usize % verts.len()];
        let start = Corner { vertex, arrival: pick as usize % tree.degree(vertex) };
        let corners = tree.contour(start);
        prop_assert_eq!(corners.len(), 2 * tree.edge_count());
        for pair in corners.windows(2) {
            prop_assert_ne!(pair[0].vertex.color(), pair[1].vertex.color());
        }
        let mut per_vertex = std::collections::BTreeMap::new();
        for c in &corners {
            *per_vertex.entry(c.vertex).or_insert(0usize) += 1;
        }
        for v in tree.vertices() {
            prop_assert_eq!(per_vertex.get(&v).copied().unwrap_or(0), tree.degree(v));
        }
    }

    #[test]
    fn opposite_directions_cancel((tree, pick) in (small_tree(), any::<u32>())) {
        let leaves = tree.leaves();
        let leaf = leaves[pick as usize % leaves.len()];
        for first in [Direction::Ccw, Direction::Cw] {
            let there = elementary_move(&tree, leaf, first).unwrap();
            let back = elementary_move(&there.tree, leaf, first.reversed()).unwrap();
            prop_assert_eq!(&back.tree, &tree);
        }
    }

    #[test]
    fn orbits_preserve_counts_and_return((tree, pick) in (small_tree(), any::<u32>())) {
        let leaves = tree.leaves();
        let leaf = leaves[pick as usize % leaves.len()];
        let orb = orbit(&tree, leaf, Direction::Ccw).unwrap();
        if tree.vertex_count() == 2 {
            prop_assert!(orb.is_empty());
        } else {
            prop_assert_eq!(orb.len(), tree.edge_count() - 1);
            prop_assert_eq!(orb.last().unwrap(), &tree);
            for t in &orb {
                prop_assert_eq!(t.white_count(), tree.white_count());
                prop_assert_eq!(t.black_count(), tree.black_count());
            }
        }
    }

    #[test]
    fn root_sweep_is_singleton_for_even_trees(tree in even_tree()) {
        prop_assert_eq!(root_sweep(&tree).unwrap().len(), 1);
    }

    #[test]
    fn black_white_pair_counts_partition((tree, root) in tree_with_root()) {
        if tree.vertex_count() % 2 != 0 {
            return Ok(());
        }
        let code = encode(&tree, root).unwrap();
        let bd = breakdown(&code).unwrap();
        let mut whites_before = 0u64;
        let mut white_before_black = 0u64;
        for tok in code.tokens() {
            match tok {
                Token::White(_) => whites_before += 1,
                Token::Black(_) => white_before_black += whites_before,
                Token::Close => {}
            }
        }
        let n = tree.white_count() as u64;
        let m = tree.black_count() as u64;
        prop_assert_eq!(bd.c + white_before_black, n * m);
    }

    #[test]
    fn passports_and_duals_are_inverse(tree in small_tree()) {
        let passport = tree.passport();
        prop_assert_eq!(passport.dual().to_passport(), passport.clone());
        prop_assert_eq!(passport.edge_count(), tree.edge_count());
    }

    #[test]
    fn lexer_never_panics(text in "[vu()0-9 x]{0,24}") {
        if let Ok(code) = lex(&text) {
            prop_assert_eq!(lex(&code.to_string()).unwrap(), code);
        }
    }

    #[test]
    fn json_round_trips(tree in small_tree()) {
        let back = PlaneTree::from_json(&tree.to_json()).unwrap();
        prop_assert_eq!(back, tree);
    }
}

#[test]
fn enumeration_streams_are_strictly_sorted() {
    for (n, m) in [(2, 3), (3, 2), (2, 4)] {
        let mut previous = None;
        for_each_tree(n, m, DEFAULT_MAX_TREES, |_, code| {
            if let Some(prev) = &previous {
                assert!(prev < code, "({n},{m}) stream out of order");
            }
            previous = Some(code.clone());
            ControlFlow::Continue(())
        })
        .unwrap();
    }
}

#[test]
fn uniform_sampler_matches_exhaustive_frequencies() {
    // 10^4 draws over the four (2,2)-trees; each bucket stays within five
    // standard deviations of the uniform expectation.
    let draws = 10_000u64;
    let mut counts = std::collections::BTreeMap::new();
    for seed in 0..draws {
        let tree = sample_random(2, 2, seed, DEFAULT_MAX_TREES).unwrap();
        *counts.entry(bitree_core::canonical_code(&tree)).or_insert(0u64) += 1;
    }
    assert_eq!(counts.len(), 4);
    let expected = draws as f64 / 4.0;
    let sigma = (draws as f64 * 0.25 * 0.75).sqrt();
    for (code, count) in counts {
        let deviation = (count as f64 - expected).abs();
        assert!(
            deviation <= 5.0 * sigma,
            "{code}: {count} draws deviates {deviation:.1} (> 5 sigma = {:.1})",
            5.0 * sigma
        );
    }
}
