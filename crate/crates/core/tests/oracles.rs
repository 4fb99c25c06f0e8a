//! Library results against independent brute-force computations.

mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use proptest::prelude::*;
use rslab_core::engine::{
    contains_copy, find_rainbow_copy, is_properly_rainbow_saturated, is_saturated,
    is_semi_saturated, search_rainbow_free_colouring, EdgeColouring, DEFAULT_BUDGET,
};
use rslab_core::graph::{all_automorphisms, canonical_form, edge, pair_orbits, Edge, Graph};
use rslab_core::oracle::{census, enumerate_graphs, enumerate_trees, CensusConfig, Quantity};

#[test]
fn graph_counts_match_burnside() {
    let burnside: Vec<u64> = (1..=7).map(burnside_count).collect();
    assert_eq!(burnside, [1, 2, 4, 11, 34, 156, 1044]);
    for n in 1..=7 {
        assert_eq!(
            enumerate_graphs(n, None).len() as u64,
            burnside[n - 1],
            "n={n}"
        );
    }
}

#[test]
fn graph_classes_match_labelled_dedup() {
    for n in 1..=6 {
        let perms = permutations(n);
        let labelled: HashSet<u64> = labelled_graphs(n)
            .map(|g| brute_canonical(&g, &perms))
            .collect();
        let ours: HashSet<u64> = enumerate_graphs(n, None)
            .iter()
            .map(|g| brute_canonical(g, &perms))
            .collect();
        assert_eq!(
            ours.len(),
            enumerate_graphs(n, None).len(),
            "duplicates at n={n}"
        );
        assert_eq!(ours, labelled, "n={n}");
    }
}

/// Labelled trees on `n` vertices decoded from Pruefer sequences.
fn pruefer_trees(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = (code % n as u64) as usize;
                    code /= n as u64;
                    d
                })
                .collect();
            let mut degree = vec![1; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::new();
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

#[test]
fn tree_classes_match_pruefer_dedup() {
    for n in 1..=7 {
        let perms = permutations(n);
        let labelled: BTreeSet<u64> = pruefer_trees(n)
            .iter()
            .map(|t| brute_canonical(t, &perms))
            .collect();
        let trees = enumerate_trees(n);
        assert!(trees.iter().all(Graph::is_tree));
        let ours: BTreeSet<u64> = trees.iter().map(|t| brute_canonical(t, &perms)).collect();
        assert_eq!(ours.len(), trees.len());
        assert_eq!(ours, labelled, "n={n}");
    }
}

#[test]
fn automorphism_counts_of_named_graphs() {
    for (g, count) in [
        (Graph::complete(4), 24),
        (Graph::path(5), 2),
        (Graph::star(4), 24),
        (Graph::empty(3), 6),
        (Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap(), 12),
    ] {
        assert_eq!(all_automorphisms(&g).len(), count);
        assert_eq!(brute_automorphisms(&g).len(), count);
    }
}

fn brute_pair_orbits(g: &Graph) -> BTreeSet<BTreeSet<Edge>> {
    let autos = brute_automorphisms(g);
    let n = g.n();
    let mut orbits = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            orbits.insert(
                autos
                    .iter()
                    .map(|p| edge(p[u], p[v]))
                    .collect::<BTreeSet<Edge>>(),
            );
        }
    }
    orbits
}

fn colouring_strategy(g: &Graph, max_colour: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1..=max_colour, g.edge_count())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_form_decides_isomorphism(g in small_graph(6, 15), seed in any::<u64>(), toggle in any::<bool>()) {
        let perms = permutations(g.n());
        let p = &perms[(seed % perms.len() as u64) as usize];
        let mut h = g.permuted(p);
        if toggle && g.n() >= 2 {
            let (u, v) = (0, 1);
            h = if h.has_edge(u, v) { h.without_edges(&[(u, v)]) } else { h.with_edge(u, v).unwrap() };
        }
        prop_assert_eq!(canonical_form(&g) == canonical_form(&h), brute_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(p)));
    }

    #[test]
    fn automorphisms_match_brute_force(g in small_graph(7, 21)) {
        let mut ours = all_automorphisms(&g);
        ours.sort();
        prop_assert_eq!(ours, brute_automorphisms(&g));
    }

    #[test]
    fn pair_orbits_match_brute_force(g in small_graph(7, 21)) {
        let po = pair_orbits(&g);
        let ours: BTreeSet<BTreeSet<Edge>> = po
            .edge_orbits
            .iter()
            .chain(&po.non_edge_orbits)
            .map(|o| o.iter().copied().collect())
            .collect();
        prop_assert_eq!(ours, brute_pair_orbits(&g));
        prop_assert!(po.edge_orbits.iter().flatten().all(|&(u, v)| g.has_edge(u, v)));
        prop_assert!(po.non_edge_orbits.iter().flatten().all(|&(u, v)| !g.has_edge(u, v)));
    }

    #[test]
    fn copy_detection_matches_brute_force(g in small_graph(7, 12), which in 0usize..5) {
        let h = pat(["P3", "P4", "K1,3", "P5", "S2,3"][which]);
        prop_assert_eq!(contains_copy(&g, &h).is_some(), brute_copy(&g, h.graph(), None).is_some());
    }

    #[test]
    fn rainbow_detection_matches_brute_force(
        (g, colours) in small_graph(7, 12).prop_flat_map(|g| { let s = colouring_strategy(&g, 4); (Just(g), s) }),
        which in 0usize..4,
    ) {
        let h = pat(["P3", "P4", "K1,3", "P5"][which]);
        let c = EdgeColouring::from_parallel(&g, &colours).unwrap();
        let f = |u: usize, v: usize| colours[g.edge_index(u, v).unwrap()];
        let ours = find_rainbow_copy(&g, &h, &c).unwrap();
        prop_assert_eq!(ours.is_some(), brute_copy(&g, h.graph(), Some(&f)).is_some());
        if let Some(e) = ours {
            prop_assert!(e.is_rainbow(&g, h.graph(), &c));
        }
    }

    #[test]
    fn rainbow_free_search_matches_brute_force(g in small_graph(6, 6), which in 0usize..3) {
        let h = pat(["P4", "K1,3", "P5"][which]);
        let v = search_rainbow_free_colouring(&g, &h, DEFAULT_BUDGET);
        prop_assert!(!v.is_unknown());
        prop_assert_eq!(v.is_established(), brute_rainbow_free_exists(&g, h.graph()));
    }

    #[test]
    fn prsat_matches_definition(g in small_graph(6, 5), which in 0usize..3) {
        let h = pat(["P4", "K1,3", "P5"][which]);
        let v = is_properly_rainbow_saturated(&g, &h, DEFAULT_BUDGET);
        prop_assert!(!v.is_unknown());
        prop_assert_eq!(v.is_established(), brute_prsat(&g, h.graph()));
    }

    #[test]
    fn saturation_matches_definition(g in small_graph(7, 21), which in 0usize..4) {
        let h = pat(["P4", "K1,3", "P5", "T5star"][which]);
        let free = brute_copy(&g, h.graph(), None).is_none();
        let semi = g.non_edges().iter().all(|&(u, v)| uses_edge(&g.with_edge(u, v).unwrap(), h.graph(), (u, v)));
        prop_assert_eq!(is_semi_saturated(&g, &h).holds, semi);
        prop_assert_eq!(is_saturated(&g, &h).holds, free && semi);
    }
}

/// Some copy of `h` in `g` maps an edge onto `e`.
fn uses_edge(g: &Graph, h: &Graph, e: Edge) -> bool {
    g.n() >= h.n()
        && permutations(g.n()).iter().any(|p| {
            let images: Vec<Edge> = h.edges().iter().map(|&(a, b)| edge(p[a], p[b])).collect();
            images.iter().all(|&(u, v)| g.has_edge(u, v)) && images.contains(&e)
        })
}

/// Minimum edge count over labelled graphs on `n` vertices with the property.
fn brute_min(n: usize, max_edges: usize, holds: impl Fn(&Graph) -> bool) -> Option<usize> {
    labelled_graphs(n)
        .filter(|g| g.edge_count() <= max_edges && holds(g))
        .map(|g| g.edge_count())
        .min()
}

#[test]
fn sat_census_matches_labelled_search() {
    for (p, n) in [
        ("P4", 4),
        ("P4", 5),
        ("P4", 6),
        ("K1,3", 5),
        ("K1,3", 6),
        ("P5", 5),
    ] {
        let h = pat(p);
        let expected = brute_min(n, usize::MAX, |g| {
            brute_copy(g, h.graph(), None).is_none()
                && g.non_edges()
                    .iter()
                    .all(|&(u, v)| uses_edge(&g.with_edge(u, v).unwrap(), h.graph(), (u, v)))
        });
        let rec = census(n, &h, Quantity::Sat, CensusConfig::default()).unwrap();
        assert_eq!(rec.value.exact(), expected, "sat({n}, {p})");
    }
}

#[test]
fn prsat_census_matches_labelled_search() {
    // the brute force only looks at graphs with at most `value` edges
    for (p, n, value) in [("P4", 5, 4), ("K1,3", 5, 4), ("K1,3", 4, 3)] {
        let h = pat(p);
        let rec = census(n, &h, Quantity::Prsat, CensusConfig::default()).unwrap();
        assert_eq!(rec.value.exact(), Some(value), "prsat({n}, {p})");
        assert_eq!(
            brute_min(n, value, |g| brute_prsat(g, h.graph())),
            Some(value),
            "prsat({n}, {p})"
        );
    }
}
