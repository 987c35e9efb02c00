use std::fmt;

use crate::exactmath::rational::{vec_to_strings, zero_vec};
use crate::exactmath::Rational;
use crate::finite::GroupElement;
use crate::rootsys::{LatticeName, RootSystem};
use crate::weyl::WeylMatrix;

/// Affine map `x ↦ w x + γ` of `t`, an element of `W_a = Q∨ ⋊ W` or of
/// `W′_a = P∨ ⋊ W` according to `lattice`. Equality ignores the tag.
#[derive(Clone)]
pub struct AffineMap {
    pub linear: WeylMatrix,
    pub translation: Vec<Rational>,
    pub lattice: LatticeName,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        Self { linear: WeylMatrix::identity(n), translation: zero_vec(n), lattice: LatticeName::Coroot }
    }

    pub fn translation_by(gamma: Vec<Rational>, lattice: LatticeName) -> Self {
        Self { linear: WeylMatrix::identity(gamma.len()), translation: gamma, lattice }
    }

    pub fn linear_part(w: WeylMatrix) -> Self {
        let n = w.dim();
        Self { linear: w, translation: zero_vec(n), lattice: LatticeName::Coroot }
    }

    /// Affine reflection `s_{α,k}: x ↦ x - (α(x) - k) α∨` for a positive root
    /// given in simple-root coordinates.
    pub fn reflection(rs: &RootSystem, root: &[i64], k: i64) -> Self {
        let n = rs.rank();
        let coroot = crate::rootsys::coroot_of(rs.gram(), root);
        let phi = rs.root_functional(root);
        let mut m = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (r == c) as i64 - coroot[r] * phi[c];
            }
        }
        let translation = coroot.iter().map(|&a| Rational::from_integer((a * k).into())).collect();
        Self { linear: WeylMatrix::from_i64(n, &m), translation, lattice: LatticeName::Coroot }
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.linear.apply(x).into_iter().zip(&self.translation).map(|(a, b)| a + b).collect()
    }

    /// `self ∘ other`: `(γ₁, w₁)(γ₂, w₂) = (γ₁ + w₁γ₂, w₁w₂)`.
    pub fn compose(&self, other: &Self) -> Self {
        let translation = self
            .linear
            .apply(&other.translation)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, b)| a + b)
            .collect();
        let lattice = match (self.lattice, other.lattice) {
            (LatticeName::Coroot, LatticeName::Coroot) => LatticeName::Coroot,
            _ => LatticeName::Coweight,
        };
        Self { linear: self.linear.mul(&other.linear), translation, lattice }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.linear.inverse();
        let translation = inv.apply(&self.translation).into_iter().map(|x| -x).collect();
        Self { linear: inv, translation, lattice: self.lattice }
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(|x| *x == Rational::from_integer(0.into()))
    }

    /// Whether the translation lies in the tagged lattice.
    pub fn translation_in_lattice(&self, rs: &RootSystem) -> bool {
        match self.lattice {
            LatticeName::Coroot => rs.in_coroot_lattice(&self.translation),
            LatticeName::Coweight => rs.in_coweight_lattice(&self.translation),
        }
    }
}

impl PartialEq for AffineMap {
    fn eq(&self, other: &Self) -> bool {
        self.linear == other.linear && self.translation == other.translation
    }
}

impl Eq for AffineMap {}

impl std::hash::Hash for AffineMap {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.linear.hash(state);
        self.translation.hash(state);
    }
}

impl GroupElement for AffineMap {
    fn compose(&self, other: &Self) -> Self {
        AffineMap::compose(self, other)
    }

    fn identity_like(&self) -> Self {
        let mut id = AffineMap::identity(self.linear.dim());
        id.lattice = self.lattice;
        id
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x ↦ {:?}·x + {:?}", self.linear, vec_to_strings(&self.translation))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use crate::rootsys::CartanType;

    #[test]
    fn a1_reflections() {
        let a1 = RootSystem::build("A1".parse::<CartanType>().unwrap());
        let s0 = AffineMap::reflection(&a1, &[1], 0);
        let s1 = AffineMap::reflection(&a1, &[1], 1);
        assert_eq!(s0.apply(&[rat(-3, 10)]), vec![rat(3, 10)]);
        assert_eq!(s1.apply(&[rat(7, 10)]), vec![rat(3, 10)]);
        // s1 ∘ s0 is translation by α∨
        let t = s1.compose(&s0);
        assert!(t.linear.is_identity());
        assert_eq!(t.translation, vec![int(1)]);
        assert!(t.compose(&t.inverse()).is_identity());
    }

    #[test]
    fn composition_rule() {
        let g2 = RootSystem::build("G2".parse::<CartanType>().unwrap());
        let a = AffineMap::reflection(&g2, &[3, 2], 1);
        let b = AffineMap::reflection(&g2, &[1, 1], -2);
        let x = vec![rat(1, 7), rat(-2, 3)];
        assert_eq!(a.compose(&b).apply(&x), a.apply(&b.apply(&x)));
        assert!(a.translation_in_lattice(&g2));
    }
}
