//! Folded cubes with their difference colouring, and the caterpillar
//! construction built on them.

use crate::engine::EdgeColouring;
use crate::graph::Graph;

use super::{ConstructionError, GadgetBundle};

/// `F_index`: vertices are bit-vectors of length `index - 1` (stored as
/// integers), adjacent when they differ by a unit vector or by the all-ones
/// vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldedCube {
    index: usize,
}

impl FoldedCube {
    pub fn new(index: usize) -> Result<Self, ConstructionError> {
        if !(3..=24).contains(&index) {
            return Err(ConstructionError::InvalidParameter(format!(
                "folded cube index must be in 3..=24, got {index}"
            )));
        }
        Ok(FoldedCube { index })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dimension(&self) -> usize {
        self.index - 1
    }

    pub fn order(&self) -> usize {
        1 << self.dimension()
    }

    /// Unit vectors `e_1, ..., e_d` followed by the all-ones vector.
    pub fn directions(&self) -> Vec<usize> {
        let d = self.dimension();
        (0..d)
            .map(|i| 1 << i)
            .chain(std::iter::once((1 << d) - 1))
            .collect()
    }

    pub fn graph(&self) -> Graph {
        let dirs = self.directions();
        let edges = (0..self.order()).flat_map(|x| {
            dirs.iter()
                .map(move |&a| (x, x ^ a))
                .filter(|&(x, y)| x < y)
        });
        Graph::new(self.order(), edges).expect("directions are distinct")
    }

    /// Colour of `xy` is the position (from 1) of `x xor y` in the direction list.
    pub fn difference_colouring(&self, g: &Graph) -> EdgeColouring {
        let dirs = self.directions();
        EdgeColouring::new(g.edges().iter().map(|&(x, y)| {
            let c = dirs
                .iter()
                .position(|&a| a == x ^ y)
                .expect("edge along a direction");
            ((x, y), c as u32 + 1)
        }))
        .expect("colours are positive")
    }
}

/// `F_{ell-1}` with its difference colouring: the rainbow `P_ell`-free
/// colouring with `ell - 1` colours.
pub fn folded_cube(ell: usize) -> Result<GadgetBundle, ConstructionError> {
    if ell < 4 {
        return Err(ConstructionError::InvalidParameter(format!(
            "folded cube needs ell >= 4, got {ell}"
        )));
    }
    let f = FoldedCube::new(ell - 1)?;
    let graph = f.graph();
    let colouring = f.difference_colouring(&graph);
    Ok(GadgetBundle {
        graph,
        colouring,
        provenance: format!("folded-cube difference colouring (ell={ell})"),
    })
}

/// The `d`-dimensional hypercube on `0..2^d`.
pub fn hypercube(d: usize) -> Graph {
    let edges = (0..1usize << d).flat_map(|x| {
        (0..d)
            .map(move |i| (x, x ^ (1 << i)))
            .filter(|&(x, y)| x < y)
    });
    Graph::new(1 << d, edges).expect("hypercube edges are distinct")
}

/// `F_{ell-1}` (vertices `0..2^{ell-2}`) with the remaining `n - 2^{ell-2}`
/// vertices as pendants, pendant `j` hanging from cube vertex `j mod
/// 2^{ell-2}`. The colouring extends the difference colouring, giving the
/// `t`-th pendant of each cube vertex colour `ell - 1 + t`.
pub fn caterpillar_construction(
    n: usize,
    k: usize,
    ell: usize,
) -> Result<GadgetBundle, ConstructionError> {
    if ell < 4 || k < ell + 2 {
        return Err(ConstructionError::InvalidParameter(format!(
            "needs ell >= 4 and k >= ell + 2, got k={k}, ell={ell}"
        )));
    }
    let cube = folded_cube(ell)?;
    let c = cube.graph.n();
    if n < (k + 1) * c {
        return Err(ConstructionError::InvalidParameter(format!(
            "needs n >= {}",
            (k + 1) * c
        )));
    }
    let mut entries: Vec<((usize, usize), u32)> = cube.colouring.iter().collect();
    for j in 0..n - c {
        entries.push(((j % c, c + j), (ell - 1 + 1 + j / c) as u32));
    }
    let graph = Graph::new(n, entries.iter().map(|&(e, _)| e)).expect("pendant edges are new");
    let colouring = EdgeColouring::new(entries).expect("colours are positive");
    Ok(GadgetBundle {
        graph,
        colouring,
        provenance: format!("folded cube with pendants (n={n}, k={k}, ell={ell})"),
    })
}
