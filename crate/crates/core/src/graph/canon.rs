//! Canonical labelling by individualisation-refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell
//! and recurse. Every leaf is a discrete partition and hence a relabelling;
//! the canonical graph is the relabelling with the largest adjacency bit
//! string. Automorphisms are collected whenever two leaves give the same
//! graph and are used to prune children that lie in a common orbit of the
//! pointwise stabiliser of the current path.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{edge, io, Edge, Graph};

/// Isomorphism-complete label: the graph6 encoding of the canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Decodes the label back into the canonical representative.
    pub fn to_graph(&self) -> Graph {
        io::from_graph6(&self.0).expect("canonical labels are valid graph6")
    }

    pub fn from_graph6(s: &str) -> Result<Self, io::FormatError> {
        let g = io::from_graph6(s)?;
        Ok(canonical_form(&g))
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel({:?})", self.0)
    }
}

impl Serialize for CanonicalLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for CanonicalLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalLabel::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

/// Result of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Canonicalization {
    /// `labelling[v]` is the canonical index of vertex `v`.
    pub labelling: Vec<usize>,
    /// Automorphisms found during the search; they generate the full group.
    pub generators: Vec<Vec<usize>>,
    pub canonical: Graph,
}

pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    CanonicalLabel(io::to_graph6(&canonical_labelling(g).canonical))
}

pub fn canonical_labelling(g: &Graph) -> Canonicalization {
    let n = g.n();
    if n == 0 {
        return Canonicalization {
            labelling: Vec::new(),
            generators: Vec::new(),
            canonical: g.clone(),
        };
    }
    let mut s = Searcher {
        g,
        n,
        counts: vec![0; n],
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let root = s.refine(vec![(0..n).collect()]);
    let mut path = Vec::new();
    s.search(root, &mut path);
    let best = s.best.expect("search visits at least one leaf");
    Canonicalization {
        canonical: g.permuted(&best.perm),
        labelling: best.perm,
        generators: s.generators,
    }
}

pub fn automorphism_generators(g: &Graph) -> Vec<Vec<usize>> {
    canonical_labelling(g).generators
}

#[derive(Clone)]
struct Leaf {
    path: Vec<usize>,
    perm: Vec<usize>,
    cert: Vec<u64>,
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    counts: Vec<u32>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

type Cells = Vec<Vec<usize>>;

impl Searcher<'_> {
    /// Splits cells by neighbour counts into each cell until stable.
    fn refine(&mut self, mut cells: Cells) -> Cells {
        'restart: loop {
            for si in 0..cells.len() {
                self.counts.iter_mut().for_each(|c| *c = 0);
                for &w in &cells[si] {
                    for &x in self.g.neighbours(w) {
                        self.counts[x] += 1;
                    }
                }
                let counts = &self.counts;
                let mut split = false;
                let mut next: Cells = Vec::with_capacity(cells.len() + 1);
                for cell in &cells {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut c = cell.clone();
                    c.sort_unstable_by_key(|&v| (counts[v], v));
                    let mut start = 0;
                    for i in 1..=c.len() {
                        if i == c.len() || counts[c[i]] != counts[c[start]] {
                            if start > 0 {
                                split = true;
                            }
                            next.push(c[start..i].to_vec());
                            start = i;
                        }
                    }
                }
                if split {
                    cells = next;
                    continue 'restart;
                }
            }
            return cells;
        }
    }

    /// Returns `Some(level)` to abandon everything below the first-path node
    /// at that depth.
    fn search(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let target_idx = cells.iter().position(|c| c.len() > 1).unwrap();
        let target = cells[target_idx].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() && self.same_orbit_as_any(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&w| w != v).collect();
            child[target_idx] = vec![v];
            child.insert(target_idx + 1, rest);
            let child = self.refine(child);
            path.push(v);
            let jump = self.search(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let mut perm = vec![0; self.n];
        for (i, c) in cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        let cert = certificate(self.g, &perm);
        if self.first.is_none() {
            let leaf = Leaf {
                path: path.to_vec(),
                perm,
                cert,
            };
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return None;
        }
        let first = self.first.as_ref().unwrap();
        if cert == first.cert {
            let gamma = compose_inverse(&first.perm, &perm);
            let lcp = first
                .path
                .iter()
                .zip(path)
                .take_while(|(a, b)| a == b)
                .count();
            self.push_generator(gamma);
            return Some(lcp);
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            Ordering::Equal => {
                let gamma = compose_inverse(&best.perm, &perm);
                self.push_generator(gamma);
            }
            Ordering::Greater => {
                self.best = Some(Leaf {
                    path: path.to_vec(),
                    perm,
                    cert,
                });
            }
            Ordering::Less => {}
        }
        None
    }

    fn push_generator(&mut self, gamma: Vec<usize>) {
        if gamma.iter().enumerate().all(|(i, &x)| i == x) || self.generators.contains(&gamma) {
            return;
        }
        self.generators.push(gamma);
    }

    fn same_orbit_as_any(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.n);
        for gen in &self.generators {
            if path.iter().all(|&p| gen[p] == p) {
                for (x, &y) in gen.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        let r = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == r)
    }
}

/// `gamma(v) = a^{-1}(b(v))`: the automorphism relating two leaves with equal
/// certificates.
fn compose_inverse(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (v, &p) in a.iter().enumerate() {
        inv[p] = v;
    }
    b.iter().map(|&p| inv[p]).collect()
}

fn certificate(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let bits = n * n.saturating_sub(1) / 2;
    let mut cert = vec![0u64; bits.div_ceil(64).max(1)];
    for &(u, v) in g.edges() {
        let (i, j) = edge(perm[u], perm[v]);
        // graph6 order: column j, row i < j
        let idx = j * (j - 1) / 2 + i;
        // most significant first so that Vec ordering follows bit order
        cert[idx / 64] |= 1u64 << (63 - (idx % 64));
    }
    cert
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so representatives are orbit minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Automorphism orbits on unordered vertex pairs, split by adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOrbits {
    pub edge_orbits: Vec<Vec<Edge>>,
    pub non_edge_orbits: Vec<Vec<Edge>>,
}

impl PairOrbits {
    /// Least non-edge of each non-edge orbit.
    pub fn non_edge_representatives(&self) -> Vec<Edge> {
        self.non_edge_orbits.iter().map(|o| o[0]).collect()
    }

    pub fn edge_representatives(&self) -> Vec<Edge> {
        self.edge_orbits.iter().map(|o| o[0]).collect()
    }
}

pub fn pair_orbits(g: &Graph) -> PairOrbits {
    pair_orbits_from_generators(g, &automorphism_generators(g))
}

pub(crate) fn pair_orbits_from_generators(g: &Graph, generators: &[Vec<usize>]) -> PairOrbits {
    let n = g.n();
    let index = |u: usize, v: usize| u * n + v;
    let mut uf = UnionFind::new(n * n);
    for gen in generators {
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = edge(gen[u], gen[v]);
                uf.union(index(u, v), index(a, b));
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Edge>> = Default::default();
    for u in 0..n {
        for v in u + 1..n {
            let r = uf.find(index(u, v));
            groups.entry(r).or_default().push((u, v));
        }
    }
    let mut edge_orbits = Vec::new();
    let mut non_edge_orbits = Vec::new();
    for (_, mut orbit) in groups {
        orbit.sort_unstable();
        if g.has_edge(orbit[0].0, orbit[0].1) {
            edge_orbits.push(orbit);
        } else {
            non_edge_orbits.push(orbit);
        }
    }
    edge_orbits.sort();
    non_edge_orbits.sort();
    PairOrbits {
        edge_orbits,
        non_edge_orbits,
    }
}

/// Orbits of ordered adjacent pairs `(u, v)`; one representative arc each.
pub(crate) fn arc_orbit_representatives(
    g: &Graph,
    generators: &[Vec<usize>],
) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut uf = UnionFind::new(n * n);
    for gen in generators {
        for &(u, v) in g.edges() {
            uf.union(u * n + v, gen[u] * n + gen[v]);
            uf.union(v * n + u, gen[v] * n + gen[u]);
        }
    }
    let mut reps = Vec::new();
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if uf.find(a * n + b) == a * n + b {
                reps.push((a, b));
            }
        }
    }
    reps.sort_unstable();
    reps
}

/// Every automorphism, by backtracking over vertex images. Intended for small
/// graphs or small groups.
pub fn all_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_automorphism(g, 0, &mut image, &mut used, &mut out);
    out
}

fn extend_automorphism(
    g: &Graph,
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = g.n();
    if v == n {
        out.push(image.clone());
        return;
    }
    for w in 0..n {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend_automorphism(g, v + 1, image, used, out);
        used[w] = false;
    }
    image[v] = usize::MAX;
}
