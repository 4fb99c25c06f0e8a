//! Star forests for subdivided stars and the `K_1 + mK_s` unions for double
//! stars.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::is_saturated;
use crate::graph::{Graph, PatternSpec};

use super::ConstructionError;

/// Visits the multisets of `parts` integers in `allowed`, summing to `total`,
/// in descending lexicographic order (each list non-increasing). Stops when
/// `visit` returns true.
fn multisets(
    total: usize,
    parts: usize,
    max: usize,
    allowed: &dyn Fn(usize) -> bool,
    prefix: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if parts == 0 {
        return total == 0 && visit(prefix);
    }
    for p in (2..=max.min(total)).rev() {
        if !allowed(p) || total - p < 2 * (parts - 1) {
            continue;
        }
        prefix.push(p);
        let stop = multisets(total - p, parts - 1, p, allowed, prefix, visit);
        prefix.pop();
        if stop {
            return true;
        }
    }
    false
}

fn star_union(sizes: &[usize]) -> Graph {
    let stars: Vec<Graph> = sizes.iter().map(|&s| Graph::star(s - 1)).collect();
    Graph::union_all(&stars)
}

/// A `T_{k+1}*`-saturated star forest with `n - floor((n+k-1)/(k+1))` edges.
///
/// The forest has `c = floor((n+k-1)/(k+1))` components. Candidate
/// component orders (each at least 2) are tried with as many `K_{1,k}`
/// components as possible first, and the first candidate that passes the
/// saturation check is returned.
pub fn star_forest(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    if k < 4 || n < k + 3 {
        return Err(ConstructionError::InvalidParameter(format!(
            "star forest needs k >= 4 and n >= k + 3, got n={n}, k={k}"
        )));
    }
    let target = PatternSpec::SubdividedStar(k + 1)
        .compile()
        .map_err(|e| ConstructionError::InvalidParameter(e.to_string()))?;
    let c = (n + k - 1) / (k + 1);
    let full = k + 1;
    for odd in 0..=c {
        let regular = c - odd;
        let Some(rest) = n.checked_sub(regular * full) else {
            continue;
        };
        let mut found = None;
        multisets(
            rest,
            odd,
            rest,
            &|p| p != full,
            &mut Vec::new(),
            &mut |others| {
                let mut sizes = vec![full; regular];
                sizes.extend_from_slice(others);
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                let g = star_union(&sizes);
                let ok = is_saturated(&g, &target).holds;
                if ok {
                    found = Some(g);
                }
                ok
            },
        );
        if let Some(g) = found {
            return Ok(g);
        }
    }
    Err(ConstructionError::ConstructionInvalid(format!(
        "no star forest on {n} vertices with {c} components is T{}*-saturated",
        k + 1
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DoubleStarVariant {
    /// Saturated for `S_{t+1,s+1}`.
    Sat,
    /// Properly rainbow saturated for `S_{t+1,s+1}`.
    Prsat,
}

impl FromStr for DoubleStarVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sat" => Ok(DoubleStarVariant::Sat),
            "prsat" => Ok(DoubleStarVariant::Prsat),
            _ => Err(format!("unknown variant {s:?} (expected sat or prsat)")),
        }
    }
}

/// `K_1 + mK_s`: a centre (first vertex) joined to `m` disjoint `K_s`.
fn fan_of_cliques(m: usize, s: usize) -> Graph {
    let mut edges = Vec::new();
    for block in 0..m {
        let base = 1 + block * s;
        for i in 0..s {
            edges.push((0, base + i));
            for j in i + 1..s {
                edges.push((base + i, base + j));
            }
        }
    }
    Graph::new(m * s + 1, edges).expect("fan edges are distinct")
}

/// `a(K_1 + mK_s) ∪ b(K_1 + (m+1)K_s)` on `n` vertices with `b` least, where
/// `m = ceil((t+1)/s) + 1` for the saturated variant and
/// `m = ceil((t+s+1)/s) + 1` for the properly rainbow saturated one.
pub fn double_star_construction(
    n: usize,
    t: usize,
    s: usize,
    variant: DoubleStarVariant,
) -> Result<Graph, ConstructionError> {
    if s == 0 || t < s {
        return Err(ConstructionError::InvalidParameter(format!(
            "needs t >= s >= 1, got t={t}, s={s}"
        )));
    }
    let t_eff = match variant {
        DoubleStarVariant::Sat => t,
        DoubleStarVariant::Prsat => t + s,
    };
    let m = (t_eff + 1).div_ceil(s) + 1;
    let (small, large) = (m * s + 1, (m + 1) * s + 1);
    let b = (0..=n / large)
        .find(|b| (n - b * large) % small == 0)
        .ok_or(ConstructionError::NotRepresentable { n, m, s })?;
    let a = (n - b * large) / small;
    let parts: Vec<Graph> = std::iter::repeat_n(fan_of_cliques(m, s), a)
        .chain(std::iter::repeat_n(fan_of_cliques(m + 1, s), b))
        .collect();
    Ok(Graph::union_all(&parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_stars(k: usize) -> Graph {
        Graph::star(k).disjoint_union(&Graph::star(k))
    }

    #[test]
    fn star_forest_examples() {
        assert_eq!(star_forest(10, 4).unwrap(), two_stars(4));
        assert_eq!(star_forest(7, 4).unwrap().edge_count(), 5);
        let g = star_forest(8, 4).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree_sequence()[..2], [5, 1]);
        for n in 7..=20 {
            assert_eq!(
                star_forest(n, 4).unwrap().edge_count(),
                n - (n + 3) / 5,
                "n={n}"
            );
        }
        assert!(star_forest(6, 4).is_err());
    }

    #[test]
    fn double_star_examples() {
        assert_eq!(
            double_star_construction(10, 2, 1, DoubleStarVariant::Sat).unwrap(),
            two_stars(4)
        );
        assert_eq!(
            double_star_construction(8, 1, 1, DoubleStarVariant::Sat).unwrap(),
            two_stars(3)
        );
        let g = double_star_construction(12, 1, 1, DoubleStarVariant::Prsat).unwrap();
        assert_eq!(g, two_stars(5));
        let g = double_star_construction(16, 2, 2, DoubleStarVariant::Sat).unwrap();
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.edge_count(), 9 + 12);
        assert!(matches!(
            double_star_construction(7, 2, 1, DoubleStarVariant::Sat),
            Err(ConstructionError::NotRepresentable { .. })
        ));
    }
}
