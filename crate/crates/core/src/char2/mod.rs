//! Finite fields of characteristic 2 and polynomials over them.

pub mod field;
pub mod models;
pub mod poly;

pub use field::{projective_points, Field};
pub use poly::Poly;
