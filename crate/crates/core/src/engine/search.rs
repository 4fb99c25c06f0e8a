//! Exhaustive search over proper edge colourings up to colour renaming.

use serde::{Deserialize, Serialize};

use std::collections::BTreeSet;

use crate::graph::{all_automorphisms, edge, pair_orbits, Edge, Graph, Pattern};

use super::colouring::{restricted_growth, EdgeColouring};
use super::embed::{Colours, Embedding, Host, Matcher};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Established,
    Refuted,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A proper colouring of the graph under test.
    Colouring { colouring: EdgeColouring },
    /// A (rainbow) copy of the pattern.
    Embedding { embedding: Embedding },
    /// A non-edge `e` together with a rainbow-free proper colouring of `G + e`.
    NonEdge {
        edge: Edge,
        colouring: EdgeColouring,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchVerdict {
    pub status: Status,
    pub certificate: Option<Certificate>,
    pub nodes_explored: u64,
    pub budget: u64,
    /// Set when the host has fewer vertices than the pattern.
    pub degenerate: bool,
}

impl SearchVerdict {
    pub fn is_established(&self) -> bool {
        self.status == Status::Established
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }

    /// The colouring carried by the certificate, if any.
    pub fn colouring(&self) -> Option<&EdgeColouring> {
        match &self.certificate {
            Some(Certificate::Colouring { colouring })
            | Some(Certificate::NonEdge { colouring, .. }) => Some(colouring),
            _ => None,
        }
    }
}

/// Node counter shared by the sub-searches of one verdict.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Meter {
    pub used: u64,
    pub limit: u64,
}

impl Meter {
    pub(crate) fn new(limit: u64) -> Self {
        Meter { used: 0, limit }
    }

    fn exhausted(&self) -> bool {
        self.used >= self.limit
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    /// The visitor asked to stop.
    Stopped,
    /// Every branch was explored.
    Completed,
    OutOfBudget,
}

/// Edges between non-leaf vertices in breadth-first order from a
/// maximum-degree vertex (lowest index on ties), restarting in each remaining
/// component, followed by the leaf edges grouped by their inner vertex in the
/// order those vertices were reached.
pub(crate) fn search_order(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let leaf_edge = |u: usize, w: usize| g.degree(u) == 1 || g.degree(w) == 1;
    let mut seen = vec![false; n];
    let mut listed = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut reached = Vec::with_capacity(n);
    loop {
        let root = (0..n)
            .filter(|&v| !seen[v] && g.degree(v) > 0)
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
        let Some(root) = root else { break };
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            reached.push(u);
            for &w in g.neighbours(u) {
                let i = g.edge_index(u, w).unwrap();
                if !listed[i] && !leaf_edge(u, w) {
                    listed[i] = true;
                    order.push(edge(u, w));
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    for u in reached {
        for &w in g.neighbours(u) {
            let i = g.edge_index(u, w).unwrap();
            if !listed[i] {
                listed[i] = true;
                order.push(edge(u, w));
            }
        }
    }
    order
}

/// Restricted-growth enumeration of the proper colourings of one graph,
/// optionally pruning every branch whose coloured edges hold a rainbow copy.
pub(crate) struct ColouringSearch {
    order: Vec<Edge>,
    /// `slot[i]` is the position of `order[i]` in `g.edges()`.
    slot: Vec<usize>,
    host: Host,
    adjacent_before: Vec<Vec<usize>>,
    colour: Vec<u32>,
    degree: Vec<u32>,
    matcher: Option<Matcher>,
    /// `after_twin[i]`: `order[i - 1]` and `order[i]` join two leaves to the
    /// same vertex, and `order[i]` must take the larger colour.
    after_twin: Vec<bool>,
}

impl ColouringSearch {
    /// With `break_twins`, colourings that differ by swapping leaves of a
    /// common neighbour are visited once. Existence searches stay complete;
    /// enumeration then covers colourings up to those swaps as well.
    pub(crate) fn new(g: &Graph, h: Option<&Pattern>, break_twins: bool) -> Self {
        let order = search_order(g);
        let slot = order
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let host = Host::new(g.n(), &order);
        let adjacent_before = order
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                order[..i]
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a == u || a == v || b == u || b == v)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let matcher = h.filter(|h| h.order() <= g.n()).map(Matcher::new);
        let leaf_parent = |(a, b): Edge| match (g.degree(a), g.degree(b)) {
            (1, 1) => None,
            (1, _) => Some(b),
            (_, 1) => Some(a),
            _ => None,
        };
        let after_twin = (0..order.len())
            .map(|i| {
                break_twins
                    && i > 0
                    && leaf_parent(order[i]).is_some()
                    && leaf_parent(order[i]) == leaf_parent(order[i - 1])
            })
            .collect();
        ColouringSearch {
            after_twin,
            colour: vec![0; order.len()],
            degree: vec![0; g.n()],
            order,
            slot,
            host,
            adjacent_before,
            matcher,
        }
    }

    /// Current colouring, parallel to `g.edges()`.
    fn parallel(&self) -> Vec<u32> {
        let mut out = vec![0; self.order.len()];
        for (i, &s) in self.slot.iter().enumerate() {
            out[s] = self.colour[i];
        }
        out
    }

    /// Calls `visit` on every surviving complete colouring (parallel to
    /// `g.edges()`) until it returns `true`.
    pub(crate) fn run(&mut self, meter: &mut Meter, visit: &mut dyn FnMut(&[u32]) -> bool) -> Flow {
        self.dfs(0, 0, meter, visit)
    }

    fn dfs(
        &mut self,
        i: usize,
        max: u32,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Flow {
        if i == self.order.len() {
            let c = self.parallel();
            return if visit(&c) {
                Flow::Stopped
            } else {
                Flow::Completed
            };
        }
        let (u, v) = self.order[i];
        let lowest = if self.after_twin[i] {
            self.colour[i - 1] + 1
        } else {
            1
        };
        for c in lowest..=max + 1 {
            if self.adjacent_before[i].iter().any(|&j| self.colour[j] == c) {
                continue;
            }
            if meter.exhausted() {
                return Flow::OutOfBudget;
            }
            meter.used += 1;
            self.colour[i] = c;
            self.degree[u] += 1;
            self.degree[v] += 1;
            let pruned = match &mut self.matcher {
                Some(m) => m
                    .find_through(
                        &self.host,
                        Colours::Rainbow(&self.colour),
                        &self.degree,
                        self.order.len(),
                        u,
                        v,
                    )
                    .is_some(),
                None => false,
            };
            let flow = if pruned {
                Flow::Completed
            } else {
                self.dfs(i + 1, max.max(c), meter, visit)
            };
            self.colour[i] = 0;
            self.degree[u] -= 1;
            self.degree[v] -= 1;
            if flow != Flow::Completed {
                return flow;
            }
        }
        Flow::Completed
    }
}

/// Outcome of looking for a rainbow-free proper colouring.
pub(crate) enum Found {
    /// Colours parallel to `g.edges()`.
    Colouring(Vec<u32>),
    None,
    OutOfBudget,
}

fn first_free_colouring(g: &Graph, h: &Pattern, meter: &mut Meter) -> Found {
    let mut search = ColouringSearch::new(g, Some(h), true);
    let mut result = None;
    match search.run(meter, &mut |c| {
        result = Some(c.to_vec());
        true
    }) {
        Flow::Stopped => Found::Colouring(result.unwrap()),
        Flow::Completed => Found::None,
        Flow::OutOfBudget => Found::OutOfBudget,
    }
}

/// Searches the vertex sets in `parts` independently (valid for connected
/// patterns) and merges the colourings.
fn free_colouring_by_parts(
    g: &Graph,
    h: &Pattern,
    parts: &[Vec<usize>],
    meter: &mut Meter,
) -> Found {
    let mut colours = vec![0u32; g.edge_count()];
    for part in parts {
        let sub = g.induced(part);
        if sub.edge_count() == 0 {
            continue;
        }
        match first_free_colouring(&sub, h, meter) {
            Found::Colouring(c) => {
                for (&(a, b), &col) in sub.edges().iter().zip(&c) {
                    colours[g.edge_index(part[a], part[b]).unwrap()] = col;
                }
            }
            other => return other,
        }
    }
    Found::Colouring(colours)
}

pub(crate) fn free_colouring(g: &Graph, h: &Pattern, meter: &mut Meter) -> Found {
    if h.is_connected() {
        free_colouring_by_parts(g, h, &g.components(), meter)
    } else {
        first_free_colouring(g, h, meter)
    }
}

fn verdict(
    status: Status,
    certificate: Option<Certificate>,
    meter: &Meter,
    g: &Graph,
    h: &Pattern,
) -> SearchVerdict {
    SearchVerdict {
        status,
        certificate,
        nodes_explored: meter.used,
        budget: meter.limit,
        degenerate: g.n() < h.order(),
    }
}

fn colouring_of(g: &Graph, c: &[u32]) -> EdgeColouring {
    EdgeColouring::from_parallel(g, c).expect("search colours every edge with a positive colour")
}

/// Established when `g` has a proper colouring with no rainbow copy of `h`
/// (the certificate is that colouring); Refuted when every proper colouring
/// has one.
pub fn search_rainbow_free_colouring(g: &Graph, h: &Pattern, budget: u64) -> SearchVerdict {
    let mut meter = Meter::new(budget);
    match free_colouring(g, h, &mut meter) {
        Found::Colouring(c) => verdict(
            Status::Established,
            Some(Certificate::Colouring {
                colouring: colouring_of(g, &c),
            }),
            &meter,
            g,
            h,
        ),
        Found::None => verdict(Status::Refuted, None, &meter, g, h),
        Found::OutOfBudget => verdict(Status::Unknown, None, &meter, g, h),
    }
}

/// Established when every proper colouring of `g` contains a rainbow copy of
/// `h`; Refuted carries a rainbow-free colouring.
pub fn forces_rainbow(g: &Graph, h: &Pattern, budget: u64) -> SearchVerdict {
    let mut v = search_rainbow_free_colouring(g, h, budget);
    v.status = match v.status {
        Status::Established => Status::Refuted,
        Status::Refuted => Status::Established,
        Status::Unknown => Status::Unknown,
    };
    v
}

/// Checks condition 2 for the non-edge `e` of `g`, given a rainbow-free
/// colouring `base` of `g`. Returns a rainbow-free colouring of `g + e` (in
/// the edge order of `g + e`) if one exists.
fn free_colouring_after_adding(
    g: &Graph,
    h: &Pattern,
    e: Edge,
    base: &[u32],
    meter: &mut Meter,
) -> Found {
    let ge = g.with_edge(e.0, e.1).expect("non-edge");
    if !h.is_connected() {
        return first_free_colouring(&ge, h, meter);
    }
    // Only the component of g + e containing e changes; the others keep
    // their colours from `base`.
    let comps = g.components();
    let merged: Vec<usize> = {
        let mut m: Vec<usize> = comps
            .iter()
            .filter(|c| c.contains(&e.0) || c.contains(&e.1))
            .flatten()
            .copied()
            .collect();
        m.sort_unstable();
        m
    };
    match free_colouring_by_parts(&ge, h, &[merged.clone()], meter) {
        Found::Colouring(mut c) => {
            for (i, &(a, b)) in ge.edges().iter().enumerate() {
                if !merged.contains(&a) {
                    c[i] = base[g.edge_index(a, b).unwrap()];
                }
            }
            Found::Colouring(c)
        }
        other => other,
    }
}

/// The order in which condition 2 is checked: one non-edge per orbit of
/// `Aut(g)`, least first.
pub fn condition_two_non_edges(g: &Graph) -> Vec<Edge> {
    pair_orbits(g).non_edge_representatives()
}

/// Proper rainbow saturation: `g` has a rainbow-free proper colouring, and
/// adding any non-edge forces a rainbow copy. Refuted certificates are either
/// absent (no rainbow-free colouring of `g`) or a non-edge with a rainbow-free
/// colouring of `g + e`.
pub fn is_properly_rainbow_saturated(g: &Graph, h: &Pattern, budget: u64) -> SearchVerdict {
    is_properly_rainbow_saturated_over(g, h, budget, &condition_two_non_edges(g))
}

/// As [`is_properly_rainbow_saturated`] but checking condition 2 on the given
/// non-edges only.
pub fn is_properly_rainbow_saturated_over(
    g: &Graph,
    h: &Pattern,
    budget: u64,
    non_edges: &[Edge],
) -> SearchVerdict {
    let mut meter = Meter::new(budget);
    let base = match free_colouring(g, h, &mut meter) {
        Found::Colouring(c) => c,
        Found::None => return verdict(Status::Refuted, None, &meter, g, h),
        Found::OutOfBudget => return verdict(Status::Unknown, None, &meter, g, h),
    };
    for &e in non_edges {
        match free_colouring_after_adding(g, h, e, &base, &mut meter) {
            Found::Colouring(c) => {
                let ge = g.with_edge(e.0, e.1).unwrap();
                let cert = Certificate::NonEdge {
                    edge: e,
                    colouring: colouring_of(&ge, &c),
                };
                return verdict(Status::Refuted, Some(cert), &meter, g, h);
            }
            Found::None => {}
            Found::OutOfBudget => return verdict(Status::Unknown, None, &meter, g, h),
        }
    }
    let cert = Certificate::Colouring {
        colouring: colouring_of(g, &base),
    };
    verdict(Status::Established, Some(cert), &meter, g, h)
}

/// Enumerates every proper colouring of `g` up to colour renaming, skipping
/// those with a rainbow copy of `h` when a pattern is given. Each colouring
/// is passed in restricted-growth form along the search order, listed
/// parallel to `g.edges()`. Returns the number visited, or `None` if the
/// budget ran out.
pub fn enumerate_colourings(
    g: &Graph,
    h: Option<&Pattern>,
    budget: u64,
    mut visit: impl FnMut(&EdgeColouring),
) -> Option<u64> {
    let mut meter = Meter::new(budget);
    let mut search = ColouringSearch::new(g, h, false);
    let mut count = 0u64;
    let flow = search.run(&mut meter, &mut |c| {
        count += 1;
        visit(&colouring_of(g, c));
        false
    });
    (flow == Flow::Completed).then_some(count)
}

/// Rainbow-free proper colourings of `g` up to colour renaming and
/// automorphisms of `g`: one key per class, the least restricted-growth
/// normal form over all automorphic images. `None` if the budget ran out.
/// Meant for graphs with small automorphism groups.
pub fn rainbow_free_colouring_classes(
    g: &Graph,
    h: &Pattern,
    budget: u64,
) -> Option<BTreeSet<Vec<u32>>> {
    let autos = all_automorphisms(g);
    let mut classes = BTreeSet::new();
    enumerate_colourings(g, Some(h), budget, |c| {
        classes.insert(colouring_class_key(g, c, &autos));
    })?;
    Some(classes)
}

/// Least normal form of `c` over the given automorphisms of `g`.
pub fn colouring_class_key(g: &Graph, c: &EdgeColouring, automorphisms: &[Vec<usize>]) -> Vec<u32> {
    automorphisms
        .iter()
        .map(|sigma| {
            let moved: Vec<u32> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    c.get(sigma[u], sigma[v])
                        .expect("automorphism maps edges to edges")
                })
                .collect();
            restricted_growth(&moved)
        })
        .min()
        .unwrap_or_else(|| restricted_growth(&c.parallel(g).expect("colouring covers g")))
}
