//! Seidel matrix characteristic polynomials over GF(3).

pub mod algebra;
pub mod census;
pub mod graph;
pub mod realizer;
pub mod sample;
pub mod seidel;
pub mod sweep;
