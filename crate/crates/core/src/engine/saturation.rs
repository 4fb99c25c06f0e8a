//! Classical saturation and semi-saturation.

use serde::{Deserialize, Serialize};

use crate::graph::{pair_orbits, Edge, Graph, Pattern};

use super::embed::{contains_copy, find_copy_through, Embedding};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SaturationWitness {
    /// The graph already contains the pattern.
    Copy { embedding: Embedding },
    /// Adding this non-edge creates no copy of the pattern through it.
    NonEdge { edge: Edge },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub holds: bool,
    /// Present exactly when `holds` is false.
    pub witness: Option<SaturationWitness>,
}

impl SaturationReport {
    fn yes() -> Self {
        SaturationReport {
            holds: true,
            witness: None,
        }
    }

    fn no(w: SaturationWitness) -> Self {
        SaturationReport {
            holds: false,
            witness: Some(w),
        }
    }
}

/// First non-edge among `non_edges` whose addition creates no copy of `h`
/// through the new edge.
fn first_unforced(g: &Graph, h: &Pattern, non_edges: &[Edge]) -> Option<Edge> {
    non_edges.iter().copied().find(|&(u, v)| {
        let ge = g.with_edge(u, v).expect("non-edge");
        find_copy_through(&ge, h, u, v).is_none()
    })
}

/// `g` is `h`-free and adding any non-edge creates a copy of `h`.
pub fn is_saturated(g: &Graph, h: &Pattern) -> SaturationReport {
    if let Some(embedding) = contains_copy(g, h) {
        return SaturationReport::no(SaturationWitness::Copy { embedding });
    }
    is_semi_saturated(g, h)
}

/// Adding any non-edge `e` creates a copy of `h` that uses `e`; `g` itself
/// may contain `h`.
pub fn is_semi_saturated(g: &Graph, h: &Pattern) -> SaturationReport {
    is_semi_saturated_over(g, h, &pair_orbits(g).non_edge_representatives())
}

/// As [`is_semi_saturated`], checking only the given non-edges.
pub fn is_semi_saturated_over(g: &Graph, h: &Pattern, non_edges: &[Edge]) -> SaturationReport {
    match first_unforced(g, h, non_edges) {
        Some(edge) => SaturationReport::no(SaturationWitness::NonEdge { edge }),
        None => SaturationReport::yes(),
    }
}
