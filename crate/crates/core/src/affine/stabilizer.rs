use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::alcove::{reduce_to_alcove, Alcove};
use super::map::AffineMap;
use crate::error::{Error, Result};
use crate::exactmath::{smith_decomposition, FiniteAbelianGroup, Rational, SmithDecomposition};
use crate::rootsys::{LatticeName, RootSystem};

/// The stabilizer `H_A` of the fundamental alcove in `W′_a = P∨ ⋊ W`.
///
/// Element `k` is `h_k = u_k ∘ t_{γ_k}` where `γ_k` represents the `k`-th
/// coset of `P∨/Q∨` (in the order of `labels`) and `u_k ∈ W_a` walks the
/// translated alcove back. `h_k ∘ h_l = h_{k+l}` is verified on construction.
#[derive(Clone, Debug)]
pub struct AlcoveStabilizer {
    pub elements: Vec<AffineMap>,
    /// Coordinates of each element in `P∨/Q∨ ≅ Z/d_1 × ... × Z/d_r`.
    pub labels: Vec<Vec<u64>>,
    /// Coset representatives `γ_k ∈ P∨`, coroot coordinates.
    pub translations: Vec<Vec<Rational>>,
    /// `vertex_permutations[k][i] = j` when `h_k(v_i) = v_j`.
    pub vertex_permutations: Vec<Vec<usize>>,
    /// `fundamental`: the label group. `structure`: recomputed from the
    /// Cayley table of the affine maps.
    pub fundamental: FiniteAbelianGroup,
    pub structure: FiniteAbelianGroup,
    cosets: CosetLabeller,
    table: Vec<usize>,
}

/// Reads the class of a coweight-lattice vector in `P∨/Q∨ = coker(C^T)`.
#[derive(Clone, Debug)]
struct CosetLabeller {
    snf: SmithDecomposition,
    /// Positions of the diagonal entries `> 1`.
    torsion: Vec<usize>,
}

impl CosetLabeller {
    fn new(rs: &RootSystem) -> Self {
        let snf = smith_decomposition(&rs.cartan().transpose());
        let torsion = (0..snf.diagonal.len()).filter(|&k| snf.diagonal[k] > BigInt::one()).collect();
        Self { snf, torsion }
    }

    fn factors(&self) -> Vec<u64> {
        self.torsion.iter().map(|&k| self.snf.diagonal[k].to_u64().expect("small")).collect()
    }

    /// `y` in coweight coordinates, integral.
    fn label(&self, y: &[BigInt]) -> Vec<u64> {
        let u = &self.snf.left;
        self.torsion
            .iter()
            .map(|&k| {
                let z: BigInt = (0..y.len()).map(|c| u.get(k, c) * &y[c]).sum();
                z.mod_floor(&self.snf.diagonal[k]).to_u64().expect("small")
            })
            .collect()
    }

    /// A representative `Σ_k c_k U^{-1} e_k`, coweight coordinates.
    fn representative(&self, label: &[u64]) -> Vec<BigInt> {
        let ui = &self.snf.left_inverse;
        let n = ui.rows();
        (0..n)
            .map(|r| self.torsion.iter().zip(label).map(|(&k, &c)| ui.get(r, k) * BigInt::from(c)).sum())
            .collect()
    }
}

impl AlcoveStabilizer {
    pub fn build(rs: &RootSystem, alcove: &Alcove) -> Result<Self> {
        let cosets = CosetLabeller::new(rs);
        let fundamental = FiniteAbelianGroup::new(cosets.factors())?;
        let labels = fundamental.elements();
        let mut elements = Vec::with_capacity(labels.len());
        let mut translations = Vec::with_capacity(labels.len());
        let mut vertex_permutations = Vec::with_capacity(labels.len());
        for label in &labels {
            let y: Vec<Rational> = cosets.representative(label).into_iter().map(Rational::from_integer).collect();
            let gamma = rs.from_coweight_coords(&y);
            let shifted: Vec<Rational> = alcove.barycenter.iter().zip(&gamma).map(|(a, b)| a + b).collect();
            let (_, u) = reduce_to_alcove(rs, &shifted);
            let h = u.compose(&AffineMap::translation_by(gamma.clone(), LatticeName::Coweight));
            if h.apply(&alcove.barycenter) != alcove.barycenter {
                return Err(Error::Consistency(format!("h for coset {label:?} moves the barycenter")));
            }
            let perm = vertex_permutation(&h, alcove)
                .ok_or_else(|| Error::Consistency(format!("h for coset {label:?} does not permute vertices")))?;
            if cosets.label(&integral_coweight(rs, &h.translation)?) != *label {
                return Err(Error::Consistency(format!("h for coset {label:?} lies in the wrong coset")));
            }
            elements.push(h);
            translations.push(gamma);
            vertex_permutations.push(perm);
        }
        let index: HashMap<&AffineMap, usize> = elements.iter().enumerate().map(|(i, h)| (h, i)).collect();
        let label_index: HashMap<&Vec<u64>, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let m = elements.len();
        let mut table = vec![0usize; m * m];
        for a in 0..m {
            for b in 0..m {
                let p = elements[a].compose(&elements[b]);
                let k = *index
                    .get(&p)
                    .ok_or_else(|| Error::Consistency("alcove stabilizer is not closed".into()))?;
                if k != label_index[&fundamental.add(&labels[a], &labels[b])] {
                    return Err(Error::Consistency("coset labelling is not a homomorphism".into()));
                }
                table[a * m + b] = k;
            }
        }
        let structure = FiniteAbelianGroup::from_operation(m, 0, |a, b| table[a * m + b])?;
        Ok(Self { elements, labels, translations, vertex_permutations, fundamental, structure, cosets, table })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `h_a ∘ h_b` as an index.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn index_of(&self, h: &AffineMap) -> Option<usize> {
        self.elements.iter().position(|e| e == h)
    }

    pub fn index_of_label(&self, label: &[u64]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Class in `P∨/Q∨` of a coweight-lattice vector given in coroot coordinates.
    pub fn coset_label(&self, rs: &RootSystem, gamma: &[Rational]) -> Result<Vec<u64>> {
        Ok(self.cosets.label(&integral_coweight(rs, gamma)?))
    }

    /// Elements fixing `x`.
    pub fn fixing(&self, x: &[Rational]) -> Vec<usize> {
        (0..self.order()).filter(|&k| self.elements[k].apply(x) == x).collect()
    }
}

fn integral_coweight(rs: &RootSystem, gamma: &[Rational]) -> Result<Vec<BigInt>> {
    rs.to_coweight_coords(gamma)
        .into_iter()
        .map(|q| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::Consistency("translation is not in the coweight lattice".into()))
            }
        })
        .collect()
}

fn vertex_permutation(h: &AffineMap, alcove: &Alcove) -> Option<Vec<usize>> {
    let mut seen = vec![false; alcove.vertices.len()];
    let mut perm = Vec::with_capacity(alcove.vertices.len());
    for v in &alcove.vertices {
        let image = h.apply(v);
        let j = alcove.vertices.iter().position(|w| *w == image)?;
        if seen[j] {
            return None;
        }
        seen[j] = true;
        perm.push(j);
    }
    Some(perm)
}
