//! Chebyshev space curves `t -> (T_a(t), T_b(t), C(t))`: polynomial
//! embeddings of the line, their reduction by involutions, the knot
//! diagrams they trace, and the Jones polynomials of those knots.

pub mod algebra;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod poly;

pub use error::{Error, Result};
