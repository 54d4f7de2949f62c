//! Exact reconstruction of the Leech-root model of the supersingular K3
//! surface in characteristic 2 with Artin invariant 1, and the finite
//! geometry and explicit equations attached to it.

pub mod char2;
pub mod error;
pub mod fibsearch;
pub mod graph;
pub mod golay;
pub mod lattice;
pub mod leech;
pub mod lorentz;
pub mod planegeom;

pub use error::{Error, Result};
