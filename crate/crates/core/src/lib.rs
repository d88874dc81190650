//! Linear hypergraphs without fans: constructions of extremal systems,
//! configuration detection, exact bounds, reductions and exhaustive search.

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod configurations;
pub mod constructions;
mod embed;
pub mod field;
pub mod hypergraph;
pub mod io;
pub mod reductions;
pub mod search;
