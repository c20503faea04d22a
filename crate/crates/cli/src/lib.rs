//! Library side of the `skewlines` command: family builders, the analysis
//! pipeline and parameter searches.

pub mod family;
pub mod report;
pub mod search;
