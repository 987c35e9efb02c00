//! Exact computations around the connection index `f = |P∨/Q∨|` of a compact
//! simply connected Lie group: root data, Weyl and affine Weyl groups, torus
//! stabilizers, the extended quotient `T//W` and the K-theory of the reduced
//! group C*-algebra of its Langlands dual.

pub mod affine;
pub mod error;
pub mod exactmath;
pub mod extquot;
pub mod finite;
pub mod ktheory;
pub mod rootsys;
pub mod suite;
pub mod torus;
pub mod weyl;

pub use error::{Error, Result};
