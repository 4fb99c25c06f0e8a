//! Proper rainbow saturation of trees.
//!
//! * [`graph`]: graphs, tree patterns, canonical labelling and file formats.
//! * [`engine`]: proper colourings, rainbow copies and the saturation verdicts.
//! * [`constructions`]: the extremal constructions with their colourings.
//! * [`oracle`]: graph enumeration, brute-force censuses and closed-form bounds.
//! * [`reproduce`]: pass/fail tables over all of the above.

pub mod constructions;
pub mod engine;
pub mod graph;
pub mod oracle;
pub mod reproduce;
