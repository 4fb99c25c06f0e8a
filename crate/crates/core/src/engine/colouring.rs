use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge, Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("edge ({0}, {1}) has no colour")]
    MissingEdgeColour(usize, usize),
    #[error("colour given for ({0}, {1}), which is not an edge")]
    NotAnEdge(usize, usize),
    #[error("colours must be positive integers")]
    ZeroColour,
    #[error("{got} colours supplied for {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
}

/// Map from edges to positive integer colours.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(
    into = "Vec<(usize, usize, u32)>",
    try_from = "Vec<(usize, usize, u32)>"
)]
pub struct EdgeColouring {
    colours: BTreeMap<Edge, u32>,
}

impl EdgeColouring {
    pub fn new(entries: impl IntoIterator<Item = (Edge, u32)>) -> Result<Self, ColouringError> {
        let mut colours = BTreeMap::new();
        for ((u, v), c) in entries {
            if c == 0 {
                return Err(ColouringError::ZeroColour);
            }
            colours.insert(edge(u, v), c);
        }
        Ok(EdgeColouring { colours })
    }

    /// Colours listed in the order of `g.edges()`.
    pub fn from_parallel(g: &Graph, colours: &[u32]) -> Result<Self, ColouringError> {
        if colours.len() != g.edge_count() {
            return Err(ColouringError::LengthMismatch {
                expected: g.edge_count(),
                got: colours.len(),
            });
        }
        Self::new(g.edges().iter().copied().zip(colours.iter().copied()))
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.colours.get(&edge(u, v)).copied()
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.colours.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        let mut seen: Vec<u32> = self.colours.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Colours parallel to `g.edges()`, checking that exactly `E(g)` is coloured.
    pub fn parallel(&self, g: &Graph) -> Result<Vec<u32>, ColouringError> {
        if let Some((&(u, v), _)) = self.colours.iter().find(|(&(u, v), _)| !g.has_edge(u, v)) {
            return Err(ColouringError::NotAnEdge(u, v));
        }
        g.edges()
            .iter()
            .map(|&(u, v)| {
                self.get(u, v)
                    .ok_or(ColouringError::MissingEdgeColour(u, v))
            })
            .collect()
    }

    pub fn classes(&self) -> BTreeMap<u32, Vec<Edge>> {
        let mut out: BTreeMap<u32, Vec<Edge>> = BTreeMap::new();
        for (&e, &c) in &self.colours {
            out.entry(c).or_default().push(e);
        }
        out
    }

    /// Relabels colours by first appearance along `g.edges()`, so two
    /// colourings are equal up to renaming iff their normal forms agree.
    pub fn normalized(&self, g: &Graph) -> Result<Vec<u32>, ColouringError> {
        Ok(restricted_growth(&self.parallel(g)?))
    }

    /// Extends with one more coloured edge.
    pub fn with(&self, e: Edge, c: u32) -> Self {
        let mut colours = self.colours.clone();
        colours.insert(edge(e.0, e.1), c);
        EdgeColouring { colours }
    }
}

impl From<EdgeColouring> for Vec<(usize, usize, u32)> {
    fn from(c: EdgeColouring) -> Self {
        c.colours.into_iter().map(|((u, v), c)| (u, v, c)).collect()
    }
}

impl TryFrom<Vec<(usize, usize, u32)>> for EdgeColouring {
    type Error = ColouringError;

    fn try_from(v: Vec<(usize, usize, u32)>) -> Result<Self, ColouringError> {
        EdgeColouring::new(v.into_iter().map(|(a, b, c)| ((a, b), c)))
    }
}

/// Renames values by order of first appearance, starting at 1.
pub fn restricted_growth(colours: &[u32]) -> Vec<u32> {
    let mut names: BTreeMap<u32, u32> = BTreeMap::new();
    colours
        .iter()
        .map(|c| {
            let next = names.len() as u32 + 1;
            *names.entry(*c).or_insert(next)
        })
        .collect()
}

/// True iff every colour class is a matching.
pub fn is_proper(g: &Graph, c: &EdgeColouring) -> Result<bool, ColouringError> {
    let colours = c.parallel(g)?;
    Ok(is_proper_parallel(g, &colours))
}

pub(crate) fn is_proper_parallel(g: &Graph, colours: &[u32]) -> bool {
    let mut at: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (&(u, v), &c) in g.edges().iter().zip(colours) {
        for w in [u, v] {
            if at[w].contains(&c) {
                return false;
            }
            at[w].push(c);
        }
    }
    true
}
