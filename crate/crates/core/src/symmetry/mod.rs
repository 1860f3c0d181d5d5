//! Symmetric vertices and subgraphs, replication, the class `D(n, r, c)`
//! and the extremal shape verifier.

mod class;
mod dichotomy;
mod families;
mod shape;

pub use class::{in_symmetry_class, ClassCertificate};
pub use dichotomy::{classify_dichotomy, Dichotomy};
pub use families::{find_symmetric_families, find_symmetric_vertices, replicate, SymmetricFamily};
pub use shape::{verify_extremal_shape, verify_extremal_shape_exhaustive, ShapeCertificate};
