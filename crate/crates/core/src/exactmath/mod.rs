//! Exact integer and rational linear algebra.

pub mod abelian;
pub mod matrix;
pub mod rational;
pub mod snf;

pub use abelian::FiniteAbelianGroup;
pub use matrix::IntMatrix;
pub use rational::Rational;
pub use snf::{smith_decomposition, smith_normal_form, InvariantFactors, SmithDecomposition};
