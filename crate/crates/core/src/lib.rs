pub mod bits;
pub mod budget;
pub mod canon;
pub mod construct;
pub mod decomposition;
pub mod error;
pub mod extremal;
pub mod family;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod pattern;
pub mod subgraph;
pub mod suite;
pub mod symmetry;

pub use budget::{Budget, Outcome};
pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_ORDER};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use subgraph::{contains_subgraph, find_embedding};
