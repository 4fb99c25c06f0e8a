//! Brute-force sat, ssat and prsat over all graphs of a given order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{is_properly_rainbow_saturated, is_saturated, is_semi_saturated, Status};
use crate::graph::{CanonicalLabel, Graph, Pattern};

use super::enumerate::EdgeLevels;

/// Largest order any census will enumerate.
pub const CENSUS_CUTOFF: usize = 9;

/// Per-graph node budget inside a census; Unknown verdicts are retried once
/// with ten times this.
pub const CENSUS_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("order {n} is above the census cutoff {cutoff}")]
    OrderAboveCutoff { n: usize, cutoff: usize },
    #[error("census order must be at least 1")]
    EmptyOrder,
    #[error("could not build worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Sat,
    Ssat,
    Prsat,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Sat => "sat",
            Quantity::Ssat => "ssat",
            Quantity::Prsat => "prsat",
        })
    }
}

impl FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sat" => Ok(Quantity::Sat),
            "ssat" => Ok(Quantity::Ssat),
            "prsat" => Ok(Quantity::Prsat),
            _ => Err(format!(
                "unknown quantity {s:?} (expected sat, ssat or prsat)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CensusValue {
    Exact {
        edges: usize,
    },
    /// Some class with `lower` edges (and none fewer) could not be decided.
    /// `upper` is the least edge count with a confirmed witness, if any.
    Unknown {
        lower: usize,
        upper: Option<usize>,
    },
    /// No graph of this order has the property.
    NoneExists,
}

impl CensusValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            CensusValue::Exact { edges } => Some(*edges),
            _ => None,
        }
    }
}

impl fmt::Display for CensusValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusValue::Exact { edges } => write!(f, "{edges}"),
            CensusValue::Unknown {
                lower,
                upper: Some(u),
            } => write!(f, "unknown in [{lower}, {u}]"),
            CensusValue::Unknown { lower, upper: None } => write!(f, "unknown, at least {lower}"),
            CensusValue::NoneExists => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    pub pattern: String,
    pub quantity: Quantity,
    pub value: CensusValue,
    /// Every class attaining the value.
    pub witnesses: Vec<CanonicalLabel>,
    /// Classes with at most the value's edge count whose verdict stayed
    /// Unknown after escalation.
    pub unresolved: Vec<CanonicalLabel>,
    pub total_graphs_examined: u64,
    pub budget_used: u64,
    /// Per-graph node budget of the first pass.
    pub budget: u64,
    /// Set when `n` is smaller than the pattern order.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub budget: u64,
    /// Worker count; 0 uses the global pool.
    pub threads: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            budget: CENSUS_BUDGET,
            threads: 0,
        }
    }
}

/// Decides one graph: `(status, nodes spent)`.
pub fn evaluate(g: &Graph, h: &Pattern, quantity: Quantity, budget: u64) -> (Status, u64) {
    let holds = |b: bool| {
        if b {
            Status::Established
        } else {
            Status::Refuted
        }
    };
    match quantity {
        Quantity::Sat => (holds(is_saturated(g, h).holds), 0),
        Quantity::Ssat => (holds(is_semi_saturated(g, h).holds), 0),
        Quantity::Prsat => {
            let v = is_properly_rainbow_saturated(g, h, budget);
            if v.status != Status::Unknown {
                return (v.status, v.nodes_explored);
            }
            let retry = is_properly_rainbow_saturated(g, h, budget.saturating_mul(10));
            (retry.status, v.nodes_explored + retry.nodes_explored)
        }
    }
}

/// Minimum edge count of an `n`-vertex graph with the property, scanning
/// isomorphism classes by increasing edge count and stopping at the first
/// edge count with a witness.
pub fn census(
    n: usize,
    h: &Pattern,
    quantity: Quantity,
    config: CensusConfig,
) -> Result<CensusRecord, OracleError> {
    if n == 0 {
        return Err(OracleError::EmptyOrder);
    }
    if n > CENSUS_CUTOFF {
        return Err(OracleError::OrderAboveCutoff {
            n,
            cutoff: CENSUS_CUTOFF,
        });
    }
    if config.threads == 0 {
        return Ok(run_census(n, h, quantity, config.budget));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| OracleError::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| run_census(n, h, quantity, config.budget)))
}

fn run_census(n: usize, h: &Pattern, quantity: Quantity, budget: u64) -> CensusRecord {
    let mut total = 0u64;
    let mut used = 0u64;
    let mut first_unknown: Option<usize> = None;
    let mut unresolved = Vec::new();
    let mut value = None;
    let mut witnesses = Vec::new();
    for (m, level) in EdgeLevels::new(n) {
        let verdicts: Vec<(Status, u64)> = level
            .par_iter()
            .map(|label| evaluate(&label.to_graph(), h, quantity, budget))
            .collect();
        total += level.len() as u64;
        used += verdicts.iter().map(|v| v.1).sum::<u64>();
        for (label, (status, _)) in level.iter().zip(&verdicts) {
            match status {
                Status::Established => witnesses.push(label.clone()),
                Status::Unknown => {
                    unresolved.push(label.clone());
                    first_unknown.get_or_insert(m);
                }
                Status::Refuted => {}
            }
        }
        if !witnesses.is_empty() {
            value = Some(m);
            break;
        }
    }
    let value = match (value, first_unknown) {
        (Some(v), Some(u)) if u < v => CensusValue::Unknown {
            lower: u,
            upper: Some(v),
        },
        (Some(v), _) => CensusValue::Exact { edges: v },
        (None, Some(u)) => CensusValue::Unknown {
            lower: u,
            upper: None,
        },
        (None, None) => CensusValue::NoneExists,
    };
    CensusRecord {
        n,
        pattern: h.to_string(),
        quantity,
        value,
        witnesses,
        unresolved,
        total_graphs_examined: total,
        budget_used: used,
        budget,
        degenerate: n < h.order(),
    }
}

pub fn sat_number(n: usize, h: &Pattern) -> Result<CensusRecord, OracleError> {
    census(n, h, Quantity::Sat, CensusConfig::default())
}

pub fn ssat_number(n: usize, h: &Pattern) -> Result<CensusRecord, OracleError> {
    census(n, h, Quantity::Ssat, CensusConfig::default())
}

pub fn prsat_number(n: usize, h: &Pattern, budget: u64) -> Result<CensusRecord, OracleError> {
    census(n, h, Quantity::Prsat, CensusConfig { budget, threads: 0 })
}

/// Re-checks every witness of a record: right edge count and the property
/// holds. Returns the first offending witness.
pub fn verify_record(record: &CensusRecord, h: &Pattern) -> Result<(), CanonicalLabel> {
    for w in &record.witnesses {
        let g = w.to_graph();
        let edges_ok = match record.value {
            CensusValue::Exact { edges }
            | CensusValue::Unknown {
                upper: Some(edges), ..
            } => g.edge_count() == edges,
            _ => false,
        };
        let (status, _) = evaluate(&g, h, record.quantity, record.budget);
        if g.n() != record.n || !edges_ok || status != Status::Established {
            return Err(w.clone());
        }
    }
    Ok(())
}
