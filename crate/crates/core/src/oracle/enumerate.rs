//! Graphs up to isomorphism by edge augmentation.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::graph::canon::pair_orbits_from_generators;
use crate::graph::{automorphism_generators, canonical_form, CanonicalLabel, Graph};

/// Isomorphism classes of `n`-vertex graphs, one edge count at a time.
///
/// Each level holds the canonical labels of all classes with that many
/// edges, sorted. The next level is produced by adding one non-edge per
/// automorphism orbit to every class of the current level.
#[derive(Debug, Clone)]
pub struct EdgeLevels {
    n: usize,
    next_edges: usize,
    current: Vec<CanonicalLabel>,
}

impl EdgeLevels {
    pub fn new(n: usize) -> Self {
        EdgeLevels {
            n,
            next_edges: 0,
            current: Vec::new(),
        }
    }
}

fn augment(level: &[CanonicalLabel]) -> Vec<CanonicalLabel> {
    let children: BTreeSet<CanonicalLabel> = level
        .par_iter()
        .flat_map_iter(|label| {
            let g = label.to_graph();
            let gens = automorphism_generators(&g);
            pair_orbits_from_generators(&g, &gens)
                .non_edge_representatives()
                .into_iter()
                .map(|(u, v)| canonical_form(&g.with_edge(u, v).unwrap()))
                .collect::<Vec<_>>()
        })
        .collect();
    children.into_iter().collect()
}

impl Iterator for EdgeLevels {
    /// `(edge count, sorted canonical labels)`
    type Item = (usize, Vec<CanonicalLabel>);

    fn next(&mut self) -> Option<Self::Item> {
        let max = self.n * self.n.saturating_sub(1) / 2;
        if self.next_edges > max {
            return None;
        }
        self.current = if self.next_edges == 0 {
            vec![canonical_form(&Graph::empty(self.n))]
        } else {
            augment(&self.current)
        };
        self.next_edges += 1;
        Some((self.next_edges - 1, self.current.clone()))
    }
}

/// One representative per isomorphism class, ordered by edge count and then
/// canonical label. With `edge_cap`, only classes with at most that many edges.
pub fn enumerate_graphs(n: usize, edge_cap: Option<usize>) -> Vec<Graph> {
    EdgeLevels::new(n)
        .take_while(|(m, _)| edge_cap.is_none_or(|cap| *m <= cap))
        .flat_map(|(_, level)| level.into_iter().map(|l| l.to_graph()))
        .collect()
}

/// Number of isomorphism classes of trees on `n` vertices, by filtering the
/// `n - 1` edge level.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    EdgeLevels::new(n)
        .nth(n - 1)
        .map(|(_, level)| {
            level
                .into_iter()
                .map(|l| l.to_graph())
                .filter(Graph::is_tree)
                .collect()
        })
        .unwrap_or_default()
}
