//! Subgraph matching: plain copies, rainbow copies, and copies anchored at a
//! given host edge.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, Pattern};

use super::colouring::{restricted_growth, ColouringError, EdgeColouring};

const NO_EDGE: u32 = u32::MAX;

/// Injective map from pattern vertices to host vertices; `map[p]` is the
/// image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Host edges covered by the pattern edges, in pattern edge order.
    pub fn edge_image(&self, h: &Graph) -> Vec<Edge> {
        h.edges()
            .iter()
            .map(|&(p, q)| crate::graph::edge(self.map[p], self.map[q]))
            .collect()
    }

    /// Checks injectivity and that every pattern edge lands on a host edge.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        if self.map.len() != h.n() || self.map.iter().any(|&x| x >= g.n()) {
            return false;
        }
        let mut seen = self.map.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.edge_image(h).iter().all(|&(u, v)| g.has_edge(u, v))
    }

    /// Valid and all image edges carry distinct colours.
    pub fn is_rainbow(&self, g: &Graph, h: &Graph, c: &EdgeColouring) -> bool {
        if !self.is_valid(g, h) {
            return false;
        }
        let mut cols: Vec<Option<u32>> = self
            .edge_image(h)
            .iter()
            .map(|&(u, v)| c.get(u, v))
            .collect();
        if cols.iter().any(Option::is_none) {
            return false;
        }
        cols.sort_unstable();
        cols.windows(2).all(|w| w[0] != w[1])
    }
}

/// Host graph with edge ids, in whatever edge order the caller chooses.
pub(crate) struct Host {
    n: usize,
    adj: Vec<Vec<(usize, u32)>>,
    eid: Vec<u32>,
}

impl Host {
    pub(crate) fn new(n: usize, edges: &[Edge]) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut eid = vec![NO_EDGE; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i as u32));
            adj[v].push((u, i as u32));
            eid[u * n + v] = i as u32;
            eid[v * n + u] = i as u32;
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Host { n, adj, eid }
    }

    #[inline]
    pub(crate) fn edge_id(&self, u: usize, v: usize) -> Option<u32> {
        let e = self.eid[u * self.n + v];
        (e != NO_EDGE).then_some(e)
    }
}

/// Matching order for the pattern: `order[i]` is placed at step `i`, and
/// `earlier[i]` lists its neighbours placed before it, tree parent first.
#[derive(Debug, Clone)]
struct Plan {
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
}

impl Plan {
    fn new(h: &Graph, seeds: &[usize]) -> Self {
        let k = h.n();
        let mut pos = vec![usize::MAX; k];
        let mut order = Vec::with_capacity(k);
        let mut queue = std::collections::VecDeque::new();
        let push = |v: usize, order: &mut Vec<usize>, pos: &mut Vec<usize>| {
            pos[v] = order.len();
            order.push(v);
        };
        for &s in seeds {
            push(s, &mut order, &mut pos);
            queue.push_back(s);
        }
        let mut next_root = 0;
        loop {
            while let Some(u) = queue.pop_front() {
                for &w in h.neighbours(u) {
                    if pos[w] == usize::MAX {
                        push(w, &mut order, &mut pos);
                        queue.push_back(w);
                    }
                }
            }
            while next_root < k && pos[next_root] != usize::MAX {
                next_root += 1;
            }
            if next_root == k {
                break;
            }
            push(next_root, &mut order, &mut pos);
            queue.push_back(next_root);
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut e: Vec<usize> = h
                    .neighbours(v)
                    .iter()
                    .copied()
                    .filter(|&w| pos[w] < i)
                    .collect();
                e.sort_by_key(|&w| pos[w]);
                e
            })
            .collect();
        Plan { order, earlier }
    }
}

/// What counts as a usable host edge during matching.
#[derive(Clone, Copy)]
pub(crate) enum Colours<'a> {
    /// Every host edge is usable and colours are ignored.
    Plain,
    /// Edge `i` is usable iff `c[i] != 0`, and image edges must have
    /// pairwise distinct colours.
    Rainbow(&'a [u32]),
}

impl Colours<'_> {
    #[inline]
    fn colour(&self, e: u32) -> u32 {
        match self {
            Colours::Plain => 1,
            Colours::Rainbow(c) => c[e as usize],
        }
    }

    #[inline]
    fn rainbow(&self) -> bool {
        matches!(self, Colours::Rainbow(_))
    }
}

/// Reusable matcher for one pattern against hosts of bounded order.
pub(crate) struct Matcher {
    free: Plan,
    anchored: Vec<((usize, usize), Plan)>,
    pattern_degree: Vec<u32>,
    map: Vec<usize>,
    used: Vec<bool>,
    count: Vec<u32>,
    stack: Vec<u32>,
}

struct Ctx<'a> {
    host: &'a Host,
    colours: Colours<'a>,
    degree: &'a [u32],
}

impl Matcher {
    pub(crate) fn new(h: &Pattern) -> Self {
        let hg = h.graph();
        let anchored = h
            .arc_representatives()
            .iter()
            .map(|&(p, q)| ((p, q), Plan::new(hg, &[p, q])))
            .collect();
        Matcher {
            free: Plan::new(hg, &[]),
            anchored,
            pattern_degree: hg.degrees().iter().map(|&d| d as u32).collect(),
            map: vec![usize::MAX; hg.n()],
            used: Vec::new(),
            count: Vec::new(),
            stack: Vec::new(),
        }
    }

    /// Scratch arrays are all-false / all-zero between calls; only grow them.
    fn reset(&mut self, host_n: usize, colour_bound: usize) {
        if self.used.len() < host_n {
            self.used.resize(host_n, false);
        }
        if self.count.len() <= colour_bound {
            self.count.resize(colour_bound + 1, 0);
        }
    }

    /// Any copy (rainbow if colours are given); `degree[v]` is the number of
    /// usable host edges at `v` and is used for pruning.
    pub(crate) fn find(
        &mut self,
        host: &Host,
        colours: Colours<'_>,
        degree: &[u32],
        colour_bound: usize,
    ) -> Option<Embedding> {
        self.reset(host.n, colour_bound);
        let plan = std::mem::replace(
            &mut self.free,
            Plan {
                order: Vec::new(),
                earlier: Vec::new(),
            },
        );
        let ctx = Ctx {
            host,
            colours,
            degree,
        };
        let found = self.extend(&plan, 0, &ctx);
        self.free = plan;
        found.then(|| Embedding {
            map: self.map.clone(),
        })
    }

    /// A copy using host edge `(a, b)` (which must be usable).
    pub(crate) fn find_through(
        &mut self,
        host: &Host,
        colours: Colours<'_>,
        degree: &[u32],
        colour_bound: usize,
        a: usize,
        b: usize,
    ) -> Option<Embedding> {
        let e = host.edge_id(a, b)?;
        self.reset(host.n, colour_bound);
        let plans = std::mem::take(&mut self.anchored);
        let ctx = Ctx {
            host,
            colours,
            degree,
        };
        let mut found = false;
        // Arc representatives cover both orientations, so mapping each
        // representative onto (a, b) alone is exhaustive.
        let c = colours.colour(e) as usize;
        for &((p, q), ref plan) in &plans {
            if degree[a] < self.pattern_degree[p] || degree[b] < self.pattern_degree[q] {
                continue;
            }
            self.map[p] = a;
            self.map[q] = b;
            self.used[a] = true;
            self.used[b] = true;
            if colours.rainbow() {
                self.count[c] += 1;
            }
            found = self.extend(plan, 2, &ctx);
            self.used[a] = false;
            self.used[b] = false;
            if colours.rainbow() {
                self.count[c] -= 1;
            }
            if found {
                break;
            }
        }
        self.anchored = plans;
        found.then(|| Embedding {
            map: self.map.clone(),
        })
    }

    fn extend(&mut self, plan: &Plan, i: usize, ctx: &Ctx<'_>) -> bool {
        if i == plan.order.len() {
            return true;
        }
        let u = plan.order[i];
        let need = self.pattern_degree[u];
        let earlier = &plan.earlier[i];
        if earlier.is_empty() {
            for x in 0..ctx.host.n {
                if self.used[x] || ctx.degree[x] < need {
                    continue;
                }
                self.map[u] = x;
                self.used[x] = true;
                if self.extend(plan, i + 1, ctx) {
                    self.used[x] = false;
                    return true;
                }
                self.used[x] = false;
            }
            return false;
        }
        let parent = self.map[earlier[0]];
        for &(x, e0) in &ctx.host.adj[parent] {
            if self.used[x] || ctx.degree[x] < need || ctx.colours.colour(e0) == 0 {
                continue;
            }
            let mark = self.stack.len();
            let mut ok = true;
            for (j, &w) in earlier.iter().enumerate() {
                let e = if j == 0 {
                    Some(e0)
                } else {
                    ctx.host.edge_id(self.map[w], x)
                };
                let c = e.map_or(0, |e| ctx.colours.colour(e));
                if c == 0 || (ctx.colours.rainbow() && self.count[c as usize] > 0) {
                    ok = false;
                    break;
                }
                if ctx.colours.rainbow() {
                    self.count[c as usize] += 1;
                    self.stack.push(c);
                }
            }
            let found = ok && {
                self.map[u] = x;
                self.used[x] = true;
                let found = self.extend(plan, i + 1, ctx);
                self.used[x] = false;
                found
            };
            while self.stack.len() > mark {
                let c = self.stack.pop().unwrap();
                self.count[c as usize] -= 1;
            }
            if found {
                return true;
            }
        }
        false
    }
}

/// Dense colour ids for a full colouring of `g`, parallel to `g.edges()`.
fn dense_colours(g: &Graph, c: &EdgeColouring) -> Result<(Vec<u32>, usize), ColouringError> {
    let dense = restricted_growth(&c.parallel(g)?);
    let bound = dense.iter().copied().max().unwrap_or(0) as usize;
    Ok((dense, bound))
}

fn degrees(g: &Graph) -> Vec<u32> {
    g.degrees().iter().map(|&d| d as u32).collect()
}

/// Any copy of `h` in `g`.
pub fn contains_copy(g: &Graph, h: &Pattern) -> Option<Embedding> {
    let host = Host::new(g.n(), g.edges());
    Matcher::new(h).find(&host, Colours::Plain, &degrees(g), 0)
}

/// A copy of `h` in `g` that uses the edge `(a, b)` of `g`.
pub fn find_copy_through(g: &Graph, h: &Pattern, a: usize, b: usize) -> Option<Embedding> {
    let host = Host::new(g.n(), g.edges());
    Matcher::new(h).find_through(&host, Colours::Plain, &degrees(g), 0, a, b)
}

/// A copy of `h` in `g` whose edges receive distinct colours under `c`.
pub fn find_rainbow_copy(
    g: &Graph,
    h: &Pattern,
    c: &EdgeColouring,
) -> Result<Option<Embedding>, ColouringError> {
    let (dense, bound) = dense_colours(g, c)?;
    let host = Host::new(g.n(), g.edges());
    Ok(Matcher::new(h).find(&host, Colours::Rainbow(&dense), &degrees(g), bound))
}

/// A rainbow path with `length` edges starting at `start`, restricted to
/// `allowed` vertices (all if `None`), avoiding colour `avoid_colour` and
/// vertex `avoid_vertex`. Returns the vertex sequence.
pub fn find_rainbow_path_from(
    g: &Graph,
    c: &EdgeColouring,
    start: usize,
    length: usize,
    allowed: Option<&[usize]>,
    avoid_colour: Option<u32>,
    avoid_vertex: Option<usize>,
) -> Option<Vec<usize>> {
    let mut ok = vec![allowed.is_none(); g.n()];
    if let Some(a) = allowed {
        for &v in a {
            ok[v] = true;
        }
    }
    if let Some(v) = avoid_vertex {
        ok[v] = false;
    }
    if !ok[start] {
        return None;
    }
    let mut path = vec![start];
    let mut colours: Vec<u32> = avoid_colour.into_iter().collect();
    fn go(
        g: &Graph,
        c: &EdgeColouring,
        ok: &[bool],
        length: usize,
        path: &mut Vec<usize>,
        colours: &mut Vec<u32>,
    ) -> bool {
        if path.len() == length + 1 {
            return true;
        }
        let u = *path.last().unwrap();
        for &w in g.neighbours(u) {
            if !ok[w] || path.contains(&w) {
                continue;
            }
            let Some(col) = c.get(u, w) else { continue };
            if colours.contains(&col) {
                continue;
            }
            path.push(w);
            colours.push(col);
            if go(g, c, ok, length, path, colours) {
                return true;
            }
            path.pop();
            colours.pop();
        }
        false
    }
    go(g, c, &ok, length, &mut path, &mut colours).then_some(path)
}
