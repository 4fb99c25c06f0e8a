//! Target graphs: the named tree families and explicit graphs.
//!
//! Every realization uses a fixed labelling:
//!
//! * `Path(k)`: `0-1-..-(k-1)`.
//! * `Star(k)`: centre 0, leaves `1..=k`.
//! * `Broom { length: k, pendants: m }`: head 0, path `0-1-..-(k-1)`, pendants
//!   `k..k+m` attached to the head.
//! * `SubdividedStar(k)`: centre 0 adjacent to `1..=k-2`, vertex `k-1`
//!   hangs off `k-2`.
//! * `DoubleStar { t, s }`: the central edge `0-1`, `t` pendants on 0 then
//!   `s` pendants on 1.
//! * `Caterpillar(leaves)`: spine `0..l`, then the leaves of spine vertex 0,
//!   then those of spine vertex 1, and so on.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::canon::{arc_orbit_representatives, automorphism_generators};
use super::{io, Graph};

#[derive(Debug, Error)]
pub enum PatternError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse pattern {0:?}")]
    Parse(String),
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] io::FormatError),
}

/// Declarative description of a target graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    /// `P_k` on `k` vertices.
    Path(usize),
    /// `K_{1,k}`.
    Star(usize),
    /// `B_{k,m}`: `P_k` with `m` pendants appended at one endpoint.
    Broom {
        length: usize,
        pendants: usize,
    },
    /// `T_k^*`: `K_{1,k-2}` with one edge subdivided (`k` vertices).
    SubdividedStar(usize),
    /// `S_{t+1,s+1}`: `K_2` with `t` and `s` pendants on its ends.
    DoubleStar {
        t: usize,
        s: usize,
    },
    /// Leaf counts along the spine.
    Caterpillar(Vec<usize>),
    Explicit(Graph),
}

impl PatternSpec {
    pub fn realize(&self) -> Result<Graph, PatternError> {
        let invalid = |msg: String| Err(PatternError::InvalidParameter(msg));
        let g = match *self {
            PatternSpec::Path(k) => {
                if k < 2 {
                    return invalid(format!("P_{k} needs at least 2 vertices"));
                }
                Graph::path(k)
            }
            PatternSpec::Star(k) => {
                if k < 1 {
                    return invalid("K_{1,0} has an isolated vertex".into());
                }
                Graph::star(k)
            }
            PatternSpec::Broom { length, pendants } => {
                if length < 1 || pendants < 1 {
                    return invalid(format!("B_{{{length},{pendants}}} needs k, m >= 1"));
                }
                let mut edges: Vec<_> = (1..length).map(|v| (v - 1, v)).collect();
                edges.extend((length..length + pendants).map(|v| (0, v)));
                Graph::new(length + pendants, edges).expect("broom edges are simple")
            }
            PatternSpec::SubdividedStar(k) => {
                if k < 4 {
                    return invalid(format!("T_{k}^* needs k >= 4"));
                }
                let mut edges: Vec<_> = (1..=k - 2).map(|v| (0, v)).collect();
                edges.push((k - 2, k - 1));
                Graph::new(k, edges).expect("subdivided star edges are simple")
            }
            PatternSpec::DoubleStar { t, s } => {
                let mut edges = vec![(0, 1)];
                edges.extend((2..2 + t).map(|v| (0, v)));
                edges.extend((2 + t..2 + t + s).map(|v| (1, v)));
                Graph::new(2 + t + s, edges).expect("double star edges are simple")
            }
            PatternSpec::Caterpillar(ref leaves) => {
                let spine = leaves.len();
                if spine == 0 || (spine == 1 && leaves[0] == 0) {
                    return invalid("caterpillar needs at least one edge".into());
                }
                let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
                let mut next = spine;
                for (i, &count) in leaves.iter().enumerate() {
                    for _ in 0..count {
                        edges.push((i, next));
                        next += 1;
                    }
                }
                Graph::new(next, edges).expect("caterpillar edges are simple")
            }
            PatternSpec::Explicit(ref g) => {
                if g.edge_count() == 0 {
                    return invalid("explicit pattern has no edges".into());
                }
                if !g.isolated_vertices().is_empty() {
                    return invalid("explicit pattern has isolated vertices".into());
                }
                g.clone()
            }
        };
        Ok(g)
    }

    pub fn compile(&self) -> Result<Pattern, PatternError> {
        Pattern::new(self.clone())
    }

    /// `T_{k,l}` from the caterpillar upper bound: spine of length `l`, the
    /// last spine vertex of degree 2, remaining leaves on the first.
    pub fn caterpillar_target(k: usize, ell: usize) -> Result<Self, PatternError> {
        if ell < 2 || k < ell + 2 {
            return Err(PatternError::InvalidParameter(format!(
                "caterpillar T_{{{k},{ell}}} needs l >= 2 and k >= l + 2"
            )));
        }
        let mut leaves = vec![0; ell];
        leaves[0] = k - ell - 1;
        leaves[ell - 1] = 1;
        Ok(PatternSpec::Caterpillar(leaves))
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Path(k) => write!(f, "P{k}"),
            PatternSpec::Star(k) => write!(f, "K1,{k}"),
            PatternSpec::Broom { length, pendants } => write!(f, "B{length},{pendants}"),
            PatternSpec::SubdividedStar(k) => write!(f, "T{k}star"),
            PatternSpec::DoubleStar { t, s } => write!(f, "S{},{}", t + 1, s + 1),
            PatternSpec::Caterpillar(leaves) => {
                let list: Vec<String> = leaves.iter().map(ToString::to_string).collect();
                write!(f, "cat:ell={};leaves={}", leaves.len(), list.join(","))
            }
            PatternSpec::Explicit(g) => write!(f, "g6:{}", io::to_graph6(g)),
        }
    }
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

impl FromStr for PatternSpec {
    type Err = PatternError;

    /// Compact one-token grammar: `P5`, `K1,4`, `B4,2`, `T5star`, `S3,2`,
    /// `cat:ell=4;leaves=1,0,0,1`, `g6:<graph6>` or `@file`.
    fn from_str(s: &str) -> Result<Self, PatternError> {
        let s = s.trim();
        let err = || PatternError::Parse(s.to_string());
        if let Some(path) = s.strip_prefix('@') {
            let text = std::fs::read_to_string(path).map_err(|source| PatternError::Io {
                path: path.to_string(),
                source,
            })?;
            return Ok(PatternSpec::Explicit(io::parse_graph_text(&text)?));
        }
        if let Some(code) = s.strip_prefix("g6:") {
            return Ok(PatternSpec::Explicit(io::from_graph6(code)?));
        }
        if let Some(body) = s.strip_prefix("cat:") {
            let mut ell = None;
            let mut leaves = None;
            for part in body.split(';') {
                let (key, value) = part.split_once('=').ok_or_else(err)?;
                match key.trim() {
                    "ℓ" | "ell" | "l" => {
                        ell = Some(value.trim().parse::<usize>().map_err(|_| err())?)
                    }
                    "leaves" => {
                        let list: Result<Vec<usize>, _> = value
                            .split(',')
                            .map(|x| x.trim().parse::<usize>())
                            .collect();
                        leaves = Some(list.map_err(|_| err())?);
                    }
                    _ => return Err(err()),
                }
            }
            let leaves = leaves.ok_or_else(err)?;
            if let Some(ell) = ell {
                if ell != leaves.len() {
                    return Err(PatternError::InvalidParameter(format!(
                        "spine length {ell} but {} leaf counts",
                        leaves.len()
                    )));
                }
            }
            return Ok(PatternSpec::Caterpillar(leaves));
        }
        if let Some(k) = s.strip_prefix('T') {
            let k = k
                .strip_suffix("star")
                .or_else(|| k.strip_suffix('*'))
                .ok_or_else(err)?;
            return Ok(PatternSpec::SubdividedStar(k.parse().map_err(|_| err())?));
        }
        if let Some(rest) = s.strip_prefix("K1,") {
            return Ok(PatternSpec::Star(rest.parse().map_err(|_| err())?));
        }
        if let Some(k) = s.strip_prefix('P') {
            return Ok(PatternSpec::Path(k.parse().map_err(|_| err())?));
        }
        if let Some(rest) = s.strip_prefix('B') {
            let (length, pendants) = parse_pair(rest).ok_or_else(err)?;
            return Ok(PatternSpec::Broom { length, pendants });
        }
        if let Some(rest) = s.strip_prefix('S') {
            let (a, b) = parse_pair(rest).ok_or_else(err)?;
            if a == 0 || b == 0 {
                return Err(PatternError::InvalidParameter(format!(
                    "S_{{{a},{b}}} needs both sides >= 1"
                )));
            }
            return Ok(PatternSpec::DoubleStar { t: a - 1, s: b - 1 });
        }
        Err(err())
    }
}

/// A realized pattern together with the data the matchers need.
#[derive(Debug, Clone)]
pub struct Pattern {
    spec: PatternSpec,
    graph: Graph,
    connected: bool,
    arc_reps: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn new(spec: PatternSpec) -> Result<Self, PatternError> {
        let graph = spec.realize()?;
        let gens = automorphism_generators(&graph);
        let arc_reps = arc_orbit_representatives(&graph, &gens);
        Ok(Pattern {
            connected: graph.is_connected(),
            spec,
            graph,
            arc_reps,
        })
    }

    pub fn spec(&self) -> &PatternSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn size(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// One ordered edge per orbit of `Aut(H)` acting on ordered edges.
    pub fn arc_representatives(&self) -> &[(usize, usize)] {
        &self.arc_reps
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}
