//! Exact arithmetic over ℚ(√5): scalars, square matrices and polynomials.

mod matrix;
mod poly;
mod scalar;

pub(crate) use matrix::dot;
pub use matrix::{nullspace, rank_of, ExactMatrix};
pub use poly::ExactPoly;
pub use scalar::Scalar;

/// Vector over ℚ(√5).
pub type Vector = Vec<Scalar>;
