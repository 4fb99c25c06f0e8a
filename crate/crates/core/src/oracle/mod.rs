//! Ground truth by exhaustion: graphs up to isomorphism, brute-force
//! saturation numbers, a record cache, and the closed-form bounds.

mod cache;
mod census;
mod enumerate;
mod formulas;

pub use cache::{CacheError, CensusCache, CACHE_ENV};
pub use census::{
    census, evaluate, prsat_number, sat_number, ssat_number, verify_record, CensusConfig,
    CensusRecord, CensusValue, OracleError, Quantity, CENSUS_BUDGET, CENSUS_CUTOFF,
};
pub use enumerate::{enumerate_graphs, enumerate_trees, EdgeLevels};
pub use formulas::{
    formula_table, longest_bare_path, spider_three_by_two, standard_formulas, tree_second_degree,
    BoundRow, Formula, FormulaError,
};
