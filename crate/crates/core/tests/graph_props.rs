mod common;

use std::collections::BTreeSet;

use common::*;
use hankel_core::graphs::{
    all_labeled_trees, canonical_form, enumerate_rooted_labelings, format_graph, is_closed_labeling,
    is_rooted_labeling, maximal_cliques, parse_graph, prufer_decode, standard, tree_isomorphism_classes, LabeledGraph,
};
use proptest::prelude::*;

fn random_tree(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec(1..=n, n - 2).prop_map(move |seq| prufer_decode(&seq, n).unwrap())
    })
}

fn random_graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            LabeledGraph::new(n, pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| *e)).unwrap()
        })
    })
}

/// Pairwise form of closedness: edges sharing their smaller or their larger
/// endpoint force an edge between the other two endpoints.
fn closed_oracle(g: &LabeledGraph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    edges.iter().all(|&(i, j)| {
        edges.iter().all(|&(k, l)| {
            (i != k || j == l || g.has_edge(j, l)) && (j != l || i == k || g.has_edge(i, k))
        })
    })
}

fn is_clique(g: &LabeledGraph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&v| g.has_edge(u, v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rooted_labelings_match_brute_force(t in random_tree(6)) {
        let n = t.n();
        let mut oracle = BTreeSet::new();
        for perm in permutations(n) {
            let relabeled = t.relabeled(&perm).unwrap();
            if is_rooted_labeling(&relabeled).unwrap().is_some() {
                oracle.insert(relabeled);
            }
        }
        let got: BTreeSet<LabeledGraph> = enumerate_rooted_labelings(&t).unwrap().into_iter().collect();
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn rooted_children_are_consecutive(t in random_tree(7)) {
        for r in enumerate_rooted_labelings(&t).unwrap() {
            let cert = is_rooted_labeling(&r).unwrap().unwrap();
            prop_assert_eq!(cert.root(), 1);
            for v in 1..=r.n() {
                let kids = cert.children(v);
                for w in kids.windows(2) {
                    prop_assert_eq!(w[1], w[0] + 1);
                }
                prop_assert!(kids.iter().all(|&c| c > v));
            }
            prop_assert_eq!(canonical_form(&r).unwrap(), canonical_form(&t).unwrap());
        }
    }

    #[test]
    fn cliques_match_brute_force(g in random_graph(7)) {
        let n = g.n();
        let cliques: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|mask| (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect::<Vec<_>>())
            .filter(|vs| is_clique(&g, vs))
            .collect();
        let mut maximal: Vec<Vec<usize>> = cliques
            .iter()
            .filter(|c| !cliques.iter().any(|d| d.len() > c.len() && c.iter().all(|v| d.contains(v))))
            .cloned()
            .collect();
        maximal.sort();
        let mut got = maximal_cliques(&g);
        got.sort();
        prop_assert_eq!(got, maximal);
    }

    #[test]
    fn closedness_matches_pairwise_condition(g in random_graph(7)) {
        prop_assume!(g.is_connected());
        prop_assert_eq!(is_closed_labeling(&g), closed_oracle(&g));
    }

    #[test]
    fn graph_files_round_trip(g in random_graph(8)) {
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }
}

#[test]
fn tree_shape_counts() {
    let counts: Vec<usize> = (2..=7).map(|n| tree_isomorphism_classes(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 6, 11]);
    for n in 2..=6 {
        assert_eq!(all_labeled_trees(n).unwrap().len(), n.pow(n as u32 - 2));
    }
}

#[test]
fn closed_families() {
    for n in 2..=8 {
        assert!(is_closed_labeling(&standard::complete(n).unwrap()));
        for t in 1..=n.saturating_sub(2) {
            assert!(is_closed_labeling(&standard::path_plus_edge(n, t, 2).unwrap()));
        }
    }
    assert!(!is_closed_labeling(&standard::figure2()));
}
