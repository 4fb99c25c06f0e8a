//! Closed-form bounds on sat, ssat and prsat, evaluated exactly.

use std::ops::RangeInclusive;

use num_rational::Rational64;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::engine::contains_copy;
use crate::graph::{Graph, Pattern, PatternError, PatternSpec};

use super::census::Quantity;

#[derive(Debug, Error)]
pub enum FormulaError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the pattern is regular, so it has no second smallest degree")]
    RegularGraph,
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// One evaluated bound at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub name: String,
    pub quantity: Quantity,
    pub pattern: String,
    pub params: Vec<(String, i64)>,
    pub n: i64,
    #[serde(serialize_with = "ratio_opt")]
    pub lower: Option<Rational64>,
    #[serde(serialize_with = "ratio_opt")]
    pub upper: Option<Rational64>,
    #[serde(serialize_with = "ratio_opt")]
    pub exact: Option<Rational64>,
    /// The bound holds only up to an additive O(1) term, which is dropped.
    pub asymptotic: bool,
    /// Coefficient of `n` in an asymptotic bound.
    #[serde(serialize_with = "ratio_opt")]
    pub slope: Option<Rational64>,
    /// Why the parameters fall outside the range the bound is stated for.
    pub out_of_range: Option<String>,
}

fn ratio_opt<S: Serializer>(v: &Option<Rational64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl BoundRow {
    /// `lower <= exact <= upper` for the values present. Asymptotic and
    /// out-of-range rows are not checked.
    pub fn is_consistent(&self) -> bool {
        if self.asymptotic || self.out_of_range.is_some() {
            return true;
        }
        let vals: Vec<Rational64> = [self.lower, self.exact, self.upper]
            .into_iter()
            .flatten()
            .collect();
        vals.windows(2).all(|w| w[0] <= w[1])
    }

    /// True when a known value `v` respects the row's non-asymptotic bounds.
    pub fn admits(&self, v: i64) -> bool {
        if self.asymptotic || self.out_of_range.is_some() {
            return true;
        }
        let v = Rational64::from_integer(v);
        self.lower.is_none_or(|l| l <= v)
            && self.upper.is_none_or(|u| v <= u)
            && self.exact.is_none_or(|e| e == v)
    }
}

/// Each family of bounds; the parameters select the member.
#[derive(Debug, Clone)]
pub enum Formula {
    /// Connected patterns containing P6: prsat >= n - 1.
    PathContainingLower { pattern: PatternSpec },
    /// Brooms B_{4,m}: n - 1 <= prsat <= 3(m+2)q + C(r, 2) with n = 3(m+2)q + r.
    Broom { m: i64 },
    /// Paths P_k, k >= 5: n - 1 <= prsat <= the broom bound (k = 5) or
    /// n + (k-5)2^{k-5}.
    Path { k: i64 },
    /// Caterpillars T_{k,ell} whose last spine vertex has degree 2:
    /// prsat <= n + (ell-3)2^{ell-3}.
    Caterpillar { k: i64, ell: i64 },
    /// Trees whose degree-2 vertices have no leaf neighbours:
    /// prsat >= (1 + 1/(12r+52))n + O(1).
    CaterpillarConverse { pattern: PatternSpec },
    /// prsat(n, T_k*) = sat(n, T_{k+1}*) = n - floor((n+k-1)/(k+1)).
    SubdividedStarPrsat { k: i64 },
    /// sat(n, T_k*) = n - floor((n+k-2)/k).
    SubdividedStarSat { k: i64 },
    /// Classical bounds on sat(n, S_{t+1,s+1}).
    DoubleStarSat { t: i64, s: i64 },
    /// The construction-based upper bounds on sat and prsat of S_{t+1,s+1}
    /// and the prsat lower bound s n / 2.
    DoubleStarImproved { t: i64, s: i64 },
    /// prsat >= ssat >= (delta_2 - 1)n/2 for non-star trees on >= 5 vertices.
    SecondDegreeLower { pattern: PatternSpec },
    /// prsat(n, K_{1,k}) = sat(n, K_{1,k}), in closed form.
    Star { k: i64 },
}

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn frac(a: i64, b: i64) -> Rational64 {
    Rational64::new(a, b)
}

fn binom2(r: i64) -> i64 {
    r * (r - 1) / 2
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

/// Smallest degree value strictly above the minimum degree.
pub fn tree_second_degree(t: &Graph) -> Result<usize, FormulaError> {
    let min = t.degrees().into_iter().min().unwrap_or(0);
    t.degrees()
        .into_iter()
        .filter(|&d| d > min)
        .min()
        .ok_or(FormulaError::RegularGraph)
}

/// Length of a longest path whose internal vertices all have degree 2.
pub fn longest_bare_path(t: &Graph) -> usize {
    let mut best = 0;
    for start in 0..t.n() {
        // Walk outwards from `start`; only degree-2 vertices may be passed through.
        let mut stack = vec![(start, usize::MAX, 0usize)];
        while let Some((v, parent, len)) = stack.pop() {
            best = best.max(len);
            if v != start && t.degree(v) != 2 {
                continue;
            }
            for &w in t.neighbours(v) {
                if w != parent {
                    stack.push((w, v, len + 1));
                }
            }
        }
    }
    best
}

fn diameter(t: &Graph) -> usize {
    (0..t.n())
        .flat_map(|v| t.distances_from(v).into_iter().flatten())
        .max()
        .unwrap_or(0)
}

struct RowBuilder {
    name: &'static str,
    quantity: Quantity,
    pattern: String,
    params: Vec<(String, i64)>,
}

impl RowBuilder {
    fn row(&self, n: i64) -> BoundRow {
        BoundRow {
            name: self.name.to_string(),
            quantity: self.quantity,
            pattern: self.pattern.clone(),
            params: self.params.clone(),
            n,
            lower: None,
            upper: None,
            exact: None,
            asymptotic: false,
            slope: None,
            out_of_range: None,
        }
    }
}

fn params(list: &[(&str, i64)]) -> Vec<(String, i64)> {
    list.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn range_note(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(msg)
}

fn broom_upper(n: i64, block: i64) -> Rational64 {
    let r = n % block;
    q(block * (n / block) + binom2(r))
}

fn need(ok: bool, msg: &str) -> Result<(), FormulaError> {
    if ok {
        Ok(())
    } else {
        Err(FormulaError::InvalidParameter(msg.to_string()))
    }
}

impl Formula {
    /// Evaluates the family at every `n` in the range. Parameters outside the
    /// stated hypotheses still produce rows, flagged in `out_of_range`.
    pub fn rows(&self, ns: RangeInclusive<i64>) -> Result<Vec<BoundRow>, FormulaError> {
        let mut out = Vec::new();
        match self {
            Formula::PathContainingLower { pattern } => {
                let p = Pattern::new(pattern.clone())?;
                let contains_p6 =
                    contains_copy(p.graph(), &"P6".parse::<PatternSpec>()?.compile()?).is_some();
                let b = RowBuilder {
                    name: "pattern-containing-p6-lower",
                    quantity: Quantity::Prsat,
                    pattern: pattern.to_string(),
                    params: Vec::new(),
                };
                for n in ns {
                    let mut r = b.row(n);
                    r.lower = Some(q(n - 1));
                    r.out_of_range = range_note(p.is_connected() && contains_p6, || {
                        "pattern must be connected and contain P6".into()
                    });
                    out.push(r);
                }
            }
            Formula::Broom { m } => {
                let m = *m;
                need(m >= 1, "broom needs m >= 1")?;
                let block = 3 * (m + 2);
                let b = RowBuilder {
                    name: "broom-bounds",
                    quantity: Quantity::Prsat,
                    pattern: PatternSpec::Broom {
                        length: 4,
                        pendants: m as usize,
                    }
                    .to_string(),
                    params: params(&[("m", m)]),
                };
                for n in ns {
                    let mut r = b.row(n);
                    r.lower = Some(q(n - 1));
                    r.upper = Some(broom_upper(n, block));
                    r.out_of_range = range_note(n >= block, || format!("needs n >= {block}"));
                    out.push(r);
                }
            }
            Formula::Path { k } => {
                let k = *k;
                need(k >= 2, "path needs k >= 2")?;
                let min_n = (k + 1) * (1i64 << (k - 4).max(0));
                let b = RowBuilder {
                    name: "path-bounds",
                    quantity: Quantity::Prsat,
                    pattern: PatternSpec::Path(k as usize).to_string(),
                    params: params(&[("k", k)]),
                };
                for n in ns {
                    let mut r = b.row(n);
                    r.lower = Some(q(n - 1));
                    r.upper = Some(if k == 5 {
                        broom_upper(n, 9)
                    } else {
                        q(n + (k - 5).max(0) * (1i64 << (k - 5).max(0)))
                    });
                    r.out_of_range = range_note(k >= 5 && n >= min_n, || {
                        format!("needs k >= 5 and n >= {min_n}")
                    });
                    out.push(r);
                }
            }
            Formula::Caterpillar { k, ell } => {
                let (k, ell) = (*k, *ell);
                need(ell >= 2 && k > ell, "caterpillar needs k > ell >= 2")?;
                let spec = PatternSpec::caterpillar_target(k as usize, ell as usize)?;
                let min_n = (k + 1) * (1i64 << (ell - 2));
                let b = RowBuilder {
                    name: "caterpillar-upper",
                    quantity: Quantity::Prsat,
                    pattern: spec.to_string(),
                    params: params(&[("k", k), ("ell", ell)]),
                };
                for n in ns {
                    let mut r = b.row(n);
                    r.lower = Some(q(n - 1));
                    r.upper = Some(q(n + (ell - 3).max(0) * (1i64 << (ell - 3).max(0))));
                    r.out_of_range = range_note(ell >= 4 && k >= ell + 2 && n >= min_n, || {
                        format!("needs ell >= 4, k >= ell + 2 and n >= {min_n}")
                    });
                    out.push(r);
                }
            }
            Formula::CaterpillarConverse { pattern } => {
                let p = Pattern::new(pattern.clone())?;
                let t = p.graph();
                need(t.is_tree(), "pattern must be a tree")?;
                let bare = longest_bare_path(t) as i64;
                let r_param = bare.max(2);
                let slope = q(1) + frac(1, 12 * r_param + 52);
                let degree_two_ok = (0..t.n())
                    .filter(|&v| t.degree(v) == 2)
                    .all(|v| t.neighbours(v).iter().all(|&w| t.degree(w) != 1));
                let hyp = diameter(t) >= 4 && degree_two_ok;
                let b = RowBuilder {
                    name: "caterpillar-converse-lower",
                    quantity: Quantity::Prsat,
                    pattern: pattern.to_string(),
                    params: params(&[("t", bare), ("r", r_param)]),
                };
                for n in ns {
                    let mut r = b.row(n);
                    r.lower = Some(slope * q(n));
                    r.slope = Some(slope);
                    r.asymptotic = true;
                    r.out_of_range = range_note(hyp, || {
                        "needs diameter >= 4 and no degree-2 vertex with a leaf neighbour".into()
                    });
                    out.push(r);
                }
            }
            Formula::SubdividedStarPrsat { k } => {
                let k = *k;
                need(k >= 4, "subdivided star needs k >= 4")?;
                let b = RowBuilder {
                    name: "subdivided-star-prsat-exact",
                    quantity: Quantity::Prsat,
                    pattern: PatternSpec::SubdividedStar(k as usize).to_string(),
                    params: params(&[("k", k)]),
                };
                for n in ns {
                    let mut r = b.row(n);
                    r.exact = Some(q(n - (n + k - 1).div_euclid(k + 1)));
                    r.out_of_range = range_note(n >= k + 3, || format!("needs n >= {}", k + 3));
                    out.push(r);
                }
            }
            Formula::SubdividedStarSat { k } => {
                let k = *k;
                need(k >= 4, "subdivided star needs k >= 4")?;
                let b = RowBuilder {
                    name: "subdivided-star-sat-exact",
                    quantity: Quantity::Sat,
                    pattern: PatternSpec::SubdividedStar(k as usize).to_string(),
                    params: params(&[("k", k)]),
                };
                for n in ns {
                    let mut r = b.row(n);
                    r.exact = Some(q(n - (n + k - 2).div_euclid(k)));
                    r.out_of_range = range_note(k >= 5 && n >= k + 2, || {
                        format!("needs k >= 5 and n >= {}", k + 2)
                    });
                    out.push(r);
                }
            }
            Formula::DoubleStarSat { t, s } => {
                let (t, s) = (*t, *s);
                need(t >= s && s >= 1, "double star needs t >= s >= 1")?;
                let b = RowBuilder {
                    name: "double-star-sat-bounds",
                    quantity: Quantity::Sat,
                    pattern: PatternSpec::DoubleStar {
                        t: t as usize,
                        s: s as usize,
                    }
                    .to_string(),
                    params: params(&[("t", t), ("s", s)]),
                };
                let min_n = (s + 1).pow(3);
                for n in ns {
                    let mut r = b.row(n);
                    r.lower = Some(frac(s, 2) * q(n));
                    r.upper = Some(if t == s {
                        frac(s, 2) * q(n) + frac(t * (t + 2), 2)
                    } else {
                        frac(s + 1, 2) * q(n) - frac(s * s + 8, 8)
                    });
                    r.out_of_range = range_note(n >= min_n, || format!("needs n >= {min_n}"));
                    out.push(r);
                }
            }
            Formula::DoubleStarImproved { t, s } => {
                let (t, s) = (*t, *s);
                need(t >= s && s >= 1, "double star needs t >= s >= 1")?;
                let pattern = PatternSpec::DoubleStar {
                    t: t as usize,
                    s: s as usize,
                }
                .to_string();
                let c = ceil_div(t + 1, s);
                let slope = |m: i64| frac(m * s, m * s + 1) * frac(s + 1, 2);
                let sat_upper = RowBuilder {
                    name: "double-star-sat-upper",
                    quantity: Quantity::Sat,
                    pattern: pattern.clone(),
                    params: params(&[("t", t), ("s", s), ("m", c + 1)]),
                };
                let prsat_lower = RowBuilder {
                    name: "double-star-prsat-lower",
                    quantity: Quantity::Prsat,
                    pattern: pattern.clone(),
                    params: params(&[("t", t), ("s", s)]),
                };
                let prsat_upper = RowBuilder {
                    name: "double-star-prsat-upper",
                    quantity: Quantity::Prsat,
                    pattern,
                    params: params(&[("t", t), ("s", s), ("m", c + 2)]),
                };
                for n in ns {
                    let mut r = sat_upper.row(n);
                    r.slope = Some(slope(c + 1));
                    r.upper = Some(slope(c + 1) * q(n));
                    r.asymptotic = true;
                    out.push(r);
                    let mut r = prsat_lower.row(n);
                    r.lower = Some(frac(s, 2) * q(n));
                    out.push(r);
                    let mut r = prsat_upper.row(n);
                    r.slope = Some(slope(c + 2));
                    r.upper = Some(slope(c + 2) * q(n));
                    r.asymptotic = true;
                    out.push(r);
                }
            }
            Formula::SecondDegreeLower { pattern } => {
                let p = Pattern::new(pattern.clone())?;
                let t = p.graph();
                let d2 = tree_second_degree(t)? as i64;
                let is_star = t.is_tree() && t.max_degree() + 1 == t.n();
                let hyp_tree = t.is_tree() && !is_star && t.n() >= 5;
                let min_n = (d2 - 1).pow(3);
                for quantity in [Quantity::Ssat, Quantity::Prsat] {
                    let b = RowBuilder {
                        name: "second-degree-lower",
                        quantity,
                        pattern: pattern.to_string(),
                        params: params(&[("delta2", d2)]),
                    };
                    for n in ns.clone() {
                        let mut r = b.row(n);
                        r.lower = Some(frac(d2 - 1, 2) * q(n));
                        r.out_of_range = range_note(hyp_tree && n >= min_n, || {
                            format!("needs a non-star tree on at least 5 vertices and n >= {min_n}")
                        });
                        out.push(r);
                    }
                }
            }
            Formula::Star { k } => {
                let k = *k;
                need(k >= 1, "star needs k >= 1")?;
                for quantity in [Quantity::Prsat, Quantity::Sat] {
                    let b = RowBuilder {
                        name: "star-exact",
                        quantity,
                        pattern: PatternSpec::Star(k as usize).to_string(),
                        params: params(&[("k", k)]),
                    };
                    for n in ns.clone() {
                        let mut r = b.row(n);
                        r.exact = Some(if n >= k + k / 2 {
                            frac(k - 1, 2) * q(n) - frac(k * k / 4, 2)
                        } else {
                            q(binom2(k) + binom2(n - k))
                        });
                        r.out_of_range = range_note(n >= k + 1, || format!("needs n >= {}", k + 1));
                        out.push(r);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Convenience wrapper around [`Formula::rows`].
pub fn formula_table(
    formula: &Formula,
    ns: RangeInclusive<i64>,
) -> Result<Vec<BoundRow>, FormulaError> {
    formula.rows(ns)
}

/// Three legs of length two joined at a centre.
pub fn spider_three_by_two() -> PatternSpec {
    PatternSpec::Explicit(Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap())
}

/// The families and parameters tabulated by `reproduce formulas`.
pub fn standard_formulas() -> Vec<Formula> {
    let tree = |s: &str| s.parse::<PatternSpec>().expect("built-in pattern");
    vec![
        Formula::PathContainingLower {
            pattern: tree("P6"),
        },
        Formula::Broom { m: 1 },
        Formula::Broom { m: 2 },
        Formula::Path { k: 5 },
        Formula::Path { k: 6 },
        Formula::Caterpillar { k: 6, ell: 4 },
        Formula::Caterpillar { k: 7, ell: 5 },
        Formula::CaterpillarConverse {
            pattern: spider_three_by_two(),
        },
        Formula::SubdividedStarPrsat { k: 4 },
        Formula::SubdividedStarPrsat { k: 5 },
        Formula::SubdividedStarSat { k: 5 },
        Formula::SubdividedStarSat { k: 6 },
        Formula::DoubleStarSat { t: 1, s: 1 },
        Formula::DoubleStarSat { t: 2, s: 1 },
        Formula::DoubleStarImproved { t: 2, s: 1 },
        Formula::DoubleStarImproved { t: 3, s: 2 },
        Formula::SecondDegreeLower {
            pattern: tree("P5"),
        },
        Formula::SecondDegreeLower {
            pattern: tree("S3,3"),
        },
        Formula::Star { k: 3 },
        Formula::Star { k: 4 },
    ]
}
