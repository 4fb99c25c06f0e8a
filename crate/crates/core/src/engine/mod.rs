//! Decision procedures: proper colourings, rainbow copies, the colouring
//! search and the three saturation verdicts.

mod colouring;
mod embed;
mod saturation;
mod search;

pub use colouring::{is_proper, restricted_growth, ColouringError, EdgeColouring};
pub use embed::{
    contains_copy, find_copy_through, find_rainbow_copy, find_rainbow_path_from, Embedding,
};
pub use saturation::{
    is_saturated, is_semi_saturated, is_semi_saturated_over, SaturationReport, SaturationWitness,
};
pub use search::{
    colouring_class_key, condition_two_non_edges, enumerate_colourings, forces_rainbow,
    is_properly_rainbow_saturated, is_properly_rainbow_saturated_over,
    rainbow_free_colouring_classes, search_rainbow_free_colouring, Certificate, SearchVerdict,
    Status, DEFAULT_BUDGET,
};
