//! Exact verification toolkit for the Eisenstein-Picard modular group
//! PU(2,1; Z[ω]) acting on complex hyperbolic 2-space.

pub mod field;
pub mod geom;
pub mod group;
pub mod handles;
pub mod isotropy;
pub mod linalg;
pub mod polytope;
pub mod report;
pub mod verify;
pub mod word;
