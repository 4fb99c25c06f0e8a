//! Brute-force reference implementations shared by the integration tests.

#![allow(dead_code)]

use proptest::prelude::*;
use rslab_core::graph::{Edge, Graph, Pattern, PatternSpec};

pub fn pat(s: &str) -> Pattern {
    s.parse::<PatternSpec>().unwrap().compile().unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[i - 1] < p[j]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn pairs(n: usize) -> Vec<Edge> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Adjacency bit pattern of `g` relabelled by `p`.
fn relabelled_mask(g: &Graph, p: &[usize], pair_index: &[Vec<usize>]) -> u64 {
    g.edges()
        .iter()
        .fold(0, |m, &(u, v)| m | 1 << pair_index[p[u]][p[v]])
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    for (i, (u, v)) in pairs(n).into_iter().enumerate() {
        idx[u][v] = i;
        idx[v][u] = i;
    }
    idx
}

/// Least relabelled adjacency pattern over all permutations.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let idx = pair_index(g.n());
    perms
        .iter()
        .map(|p| relabelled_mask(g, p, &idx))
        .min()
        .unwrap()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && {
        let perms = permutations(a.n());
        brute_canonical(a, &perms) == brute_canonical(b, &perms)
    }
}

pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    permutations(g.n())
        .into_iter()
        .filter(|p| g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .collect()
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len()).map(move |mask| {
        Graph::new(
            n,
            ps.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Number of unlabelled graphs on `n` vertices by Burnside's lemma.
pub fn burnside_count(n: usize) -> u64 {
    let perms = permutations(n);
    let ps = pairs(n);
    let idx = pair_index(n);
    let mut total = 0u64;
    for p in &perms {
        let mut seen = vec![false; ps.len()];
        let mut cycles = 0;
        for start in 0..ps.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let (u, v) = ps[i];
                i = idx[p[u]][p[v]];
            }
        }
        total += 1 << cycles;
    }
    total / perms.len() as u64
}

/// Injective maps of the pattern into `g` that hit every pattern edge,
/// optionally with pairwise distinct colours.
pub fn brute_copy(
    g: &Graph,
    h: &Graph,
    colours: Option<&dyn Fn(usize, usize) -> u32>,
) -> Option<Vec<usize>> {
    fn go(
        g: &Graph,
        h: &Graph,
        colours: Option<&dyn Fn(usize, usize) -> u32>,
        map: &mut Vec<usize>,
    ) -> bool {
        if map.len() == h.n() {
            let images: Vec<Edge> = h.edges().iter().map(|&(a, b)| (map[a], map[b])).collect();
            if !images.iter().all(|&(u, v)| g.has_edge(u, v)) {
                return false;
            }
            return match colours {
                None => true,
                Some(c) => {
                    let mut cs: Vec<u32> = images.iter().map(|&(u, v)| c(u, v)).collect();
                    cs.sort_unstable();
                    cs.windows(2).all(|w| w[0] != w[1])
                }
            };
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            map.push(v);
            if go(g, h, colours, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    let mut map = Vec::new();
    go(g, h, colours, &mut map).then_some(map)
}

/// Proper colourings of `g` with colours `1..=m` (every assignment, not up
/// to renaming), listed parallel to `g.edges()`.
pub fn brute_proper_colourings(g: &Graph) -> Vec<Vec<u32>> {
    let m = g.edge_count();
    let mut out = Vec::new();
    let mut c = vec![1u32; m];
    if m == 0 {
        return vec![c];
    }
    loop {
        let proper = (0..m).all(|i| {
            (i + 1..m).all(|j| {
                let (a, b) = (g.edges()[i], g.edges()[j]);
                c[i] != c[j] || (a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1)
            })
        });
        if proper {
            out.push(c.clone());
        }
        let Some(i) = (0..m).find(|&i| c[i] < m as u32) else {
            return out;
        };
        c[i] += 1;
        c[..i].iter_mut().for_each(|x| *x = 1);
    }
}

pub fn brute_rainbow_free_exists(g: &Graph, h: &Graph) -> bool {
    brute_proper_colourings(g).iter().any(|c| {
        let f = |u: usize, v: usize| c[g.edge_index(u, v).unwrap()];
        brute_copy(g, h, Some(&f)).is_none()
    })
}

/// Properly rainbow saturated by direct evaluation of the definition over
/// all colourings and all non-edges.
pub fn brute_prsat(g: &Graph, h: &Graph) -> bool {
    brute_rainbow_free_exists(g, h)
        && g.non_edges()
            .iter()
            .all(|&(u, v)| !brute_rainbow_free_exists(&g.with_edge(u, v).unwrap(), h))
}

/// Random graph on 1..=max_n vertices with at most `max_edges` edges.
pub fn small_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let ps = pairs(n);
        proptest::collection::vec(any::<bool>(), ps.len()).prop_map(move |bits| {
            let chosen: Vec<Edge> = ps
                .iter()
                .zip(&bits)
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .take(max_edges)
                .collect();
            Graph::new(n, chosen).unwrap()
        })
    })
}
