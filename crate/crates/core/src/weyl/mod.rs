//! The finite Weyl group `W = N_G(T)/T` acting on coroot coordinates.

mod group;
mod matrix;
mod orbit;
mod subgroup;

use std::collections::HashSet;

pub use group::{conjugacy_classes, ConjugacyClass, WeylGroup, DEFAULT_CAP};
pub use matrix::{WeylElement, WeylMatrix};
pub use orbit::{orbit_stabilizer, OrbitStabilizer};
pub use subgroup::MatrixSubgroup;

use crate::finite::GroupElement;
use crate::rootsys::RootSystem;

impl GroupElement for WeylMatrix {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn identity_like(&self) -> Self {
        WeylMatrix::identity(self.dim())
    }
}

/// Simple reflections of `rs`.
pub fn simple_reflections(rs: &RootSystem) -> Vec<WeylMatrix> {
    (0..rs.rank()).map(|i| WeylMatrix::simple_reflection(rs.cartan_entries(), i)).collect()
}

/// Coxeter exponent `m_ij` read off the Cartan matrix.
pub fn coxeter_exponent(cartan: &[Vec<i64>], i: usize, j: usize) -> u64 {
    if i == j {
        return 1;
    }
    match cartan[i][j] * cartan[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        other => panic!("not a finite-type bond: {other}"),
    }
}

/// Every `s_i s_j` has order exactly `m_ij`.
pub fn coxeter_relations_hold(rs: &RootSystem) -> bool {
    let s = simple_reflections(rs);
    let n = rs.rank();
    (0..n).all(|i| (0..n).all(|j| s[i].mul(&s[j]).order() == coxeter_exponent(rs.cartan_entries(), i, j)))
}

/// The root set, as linear functionals on coroot coordinates, is carried to
/// itself by `w` (a root `α` goes to `α ∘ w^{-1}`, whose functional is
/// `w^{-T} φ_α`; we check the equivalent `w^T φ ∈ roots` for every root).
pub fn permutes_roots(rs: &RootSystem, w: &WeylMatrix) -> bool {
    let functionals: HashSet<Vec<i64>> = rs
        .all_roots()
        .iter()
        .map(|r| rs.root_functional(r))
        .collect();
    let wt = w.transpose();
    functionals.iter().all(|phi| functionals.contains(&wt.apply_int(phi)))
}

/// Determinant via the exact integer routine.
pub fn determinant(w: &WeylMatrix) -> i64 {
    use num_traits::ToPrimitive;
    w.to_int_matrix().det().expect("square").to_i64().expect("±1")
}
