//! Deterministic builders for the extremal graphs, with their rainbow-free
//! colourings where one is known.

mod cube;
mod stars;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::engine::EdgeColouring;
use crate::graph::{Graph, PatternSpec};
use crate::oracle::{census, CensusConfig, CensusValue, OracleError, Quantity};

pub use cube::{caterpillar_construction, folded_cube, hypercube, FoldedCube};
pub use stars::{double_star_construction, star_forest, DoubleStarVariant};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the census for the remainder component (n={n}, {pattern}) did not settle: {value}")]
    OracleBudgetExceeded {
        n: usize,
        pattern: String,
        value: String,
    },
    #[error("the census reports no properly rainbow {pattern}-saturated graph on {n} vertices")]
    NoRemainderWitness { n: usize, pattern: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("construction failed its own check: {0}")]
    ConstructionInvalid(String),
    #[error("n={n} is not a(m s + 1) + b((m + 1)s + 1) for m={m}, s={s}")]
    NotRepresentable { n: usize, m: usize, s: usize },
}

/// A graph together with a proper colouring and a short description of
/// which construction produced it.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetBundle {
    pub graph: Graph,
    pub colouring: EdgeColouring,
    pub provenance: String,
}

impl GadgetBundle {
    /// Colours parallel to `graph.edges()`.
    pub fn colours(&self) -> Vec<u32> {
        self.colouring
            .parallel(&self.graph)
            .expect("bundle colouring covers the graph")
    }
}

/// Triangle `x1 x2 x3` (vertices 0, 1, 2) with `m + 1` pendants `y_{i,0..=m}`
/// on each `x_i`, where `y_{i,l}` is vertex `3 + (i-1)(m+1) + l`. Colour `i`
/// goes on `x_i y_{i,0}` and on the triangle edge opposite `x_i`; colour
/// `l + 3` goes on every `x_i y_{i,l}` with `l >= 1`.
pub fn broom_gadget(m: usize) -> Result<GadgetBundle, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::InvalidParameter(
            "broom gadget needs m >= 1".into(),
        ));
    }
    let y = |i: usize, l: usize| 3 + (i - 1) * (m + 1) + l;
    let mut entries = vec![((1, 2), 1), ((0, 2), 2), ((0, 1), 3)];
    for i in 1..=3 {
        entries.push(((i - 1, y(i, 0)), i as u32));
        for l in 1..=m {
            entries.push(((i - 1, y(i, l)), (l + 3) as u32));
        }
    }
    let graph = Graph::new(3 * (m + 2), entries.iter().map(|&(e, _)| e))
        .expect("gadget edges are distinct");
    let colouring = EdgeColouring::new(entries).expect("gadget colours are positive");
    Ok(GadgetBundle {
        graph,
        colouring,
        provenance: format!("broom-gadget(m={m})"),
    })
}

fn remainder_cache() -> &'static Mutex<HashMap<(usize, usize), Graph>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Graph>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A least-edge properly rainbow `B_{4,m}`-saturated graph on `r` vertices:
/// `K_r` below the pattern order, otherwise the first census witness.
pub fn broom_remainder(r: usize, m: usize) -> Result<Graph, ConstructionError> {
    if r < m + 4 {
        return Ok(Graph::complete(r));
    }
    if let Some(g) = remainder_cache().lock().unwrap().get(&(r, m)) {
        return Ok(g.clone());
    }
    let spec = PatternSpec::Broom {
        length: 4,
        pendants: m,
    };
    let h = spec
        .compile()
        .map_err(|e| ConstructionError::InvalidParameter(e.to_string()))?;
    let rec = census(r, &h, Quantity::Prsat, CensusConfig::default())?;
    let g = match rec.value {
        CensusValue::Exact { .. } => rec.witnesses[0].to_graph(),
        CensusValue::NoneExists => {
            return Err(ConstructionError::NoRemainderWitness {
                n: r,
                pattern: spec.to_string(),
            })
        }
        CensusValue::Unknown { .. } => {
            return Err(ConstructionError::OracleBudgetExceeded {
                n: r,
                pattern: spec.to_string(),
                value: rec.value.to_string(),
            })
        }
    };
    remainder_cache().lock().unwrap().insert((r, m), g.clone());
    Ok(g)
}

/// `floor(n / 3(m+2))` gadget copies followed by a remainder component.
pub fn broom_saturated(n: usize, m: usize) -> Result<Graph, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::InvalidParameter(
            "broom needs m >= 1".into(),
        ));
    }
    let block = 3 * (m + 2);
    if n < block {
        return Err(ConstructionError::InvalidParameter(format!(
            "needs n >= {block}"
        )));
    }
    let gadget = broom_gadget(m)?.graph;
    let copies = vec![gadget; n / block];
    let rest = broom_remainder(n % block, m)?;
    Ok(Graph::union_all(
        copies.iter().chain(std::iter::once(&rest)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{find_rainbow_copy, is_proper};

    #[test]
    fn gadget_sizes() {
        let b = broom_gadget(1).unwrap();
        assert_eq!(
            (
                b.graph.n(),
                b.graph.edge_count(),
                b.colouring.colour_count()
            ),
            (9, 9, 4)
        );
        let b = broom_gadget(2).unwrap();
        assert_eq!(
            (
                b.graph.n(),
                b.graph.edge_count(),
                b.colouring.colour_count()
            ),
            (12, 12, 5)
        );
        assert!(broom_gadget(0).is_err());
    }

    #[test]
    fn gadget_colouring_is_rainbow_free() {
        for m in 1..=3 {
            let b = broom_gadget(m).unwrap();
            assert!(is_proper(&b.graph, &b.colouring).unwrap());
            let h = PatternSpec::Broom {
                length: 4,
                pendants: m,
            }
            .compile()
            .unwrap();
            assert!(find_rainbow_copy(&b.graph, &h, &b.colouring)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn broom_saturated_edge_counts() {
        assert_eq!(broom_saturated(18, 1).unwrap().edge_count(), 18);
        assert_eq!(broom_saturated(9, 1).unwrap().edge_count(), 9);
        assert_eq!(broom_saturated(10, 1).unwrap().edge_count(), 9);
        assert_eq!(broom_saturated(11, 1).unwrap().edge_count(), 10);
        assert!(broom_saturated(8, 1).is_err());
    }
}
