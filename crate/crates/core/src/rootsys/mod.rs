//! Root systems, their coroot and coweight lattices, and the fundamental
//! group `P∨/Q∨`.
//!
//! Every vector of the Cartan subalgebra `t` is written in the basis of simple
//! coroots. The Cartan matrix is stored with `C[i][j] = α_j(α_i∨)`, so a simple
//! root acts on coroot coordinates `x` by `α_j(x) = Σ_i x_i C[i][j]`, and the
//! fundamental coweights `ω_i∨` are the rows of `C^{-1}`. Roots themselves are
//! integer vectors in simple-root coordinates.

mod cartan;
pub mod classify;

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub use cartan::{CartanType, Series};

use crate::exactmath::{smith_normal_form, FiniteAbelianGroup, IntMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeName {
    Coroot,
    Coweight,
}

/// A full-rank lattice in `t`, basis vectors in coroot coordinates.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub name: LatticeName,
    pub basis: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: IntMatrix,
    c: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    marks: Vec<i64>,
    fundamental_coweights: Vec<Vec<Rational>>,
    /// Rows of `(C^T)^{-1}`: maps coweight coordinates back to coroot coordinates.
    ct_inverse: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let gram = cartan_type.gram();
        let c: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let cartan = IntMatrix::from_rows(&c).expect("rank >= 1");
        let positive_roots = close_positive_roots(&c);
        let positive_coroots = positive_roots.iter().map(|r| coroot_of(&gram, r)).collect();
        let marks = positive_roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("nonempty")
            .clone();
        let fundamental_coweights = cartan.inverse_rational().expect("Cartan matrices are invertible");
        let ct_inverse = cartan.transpose().inverse_rational().expect("invertible");
        Self {
            cartan_type,
            cartan,
            c,
            gram,
            positive_roots,
            positive_coroots,
            marks,
            fundamental_coweights,
            ct_inverse,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// `C[i][j] = α_j(α_i∨)` as machine integers.
    pub fn cartan_entries(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Positive roots in simple-root coordinates, simple roots first.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Coroot of each positive root, in simple-coroot coordinates.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// Coefficients `a_1, ..., a_n` of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.marks
    }

    pub fn highest_coroot(&self) -> Vec<i64> {
        coroot_of(&self.gram, &self.marks)
    }

    pub fn fundamental_coweights(&self) -> &[Vec<Rational>] {
        &self.fundamental_coweights
    }

    /// Coefficients `φ` with `α(x) = Σ_i φ_i x_i` for the root `α` given in
    /// simple-root coordinates.
    pub fn root_functional(&self, root: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| root.iter().enumerate().map(|(j, r)| r * self.c[i][j]).sum())
            .collect()
    }

    pub fn eval_root(&self, root: &[i64], x: &[Rational]) -> Rational {
        self.root_functional(root)
            .iter()
            .zip(x)
            .filter(|(f, _)| **f != 0)
            .fold(Rational::zero(), |acc, (f, xi)| acc + xi * BigInt::from(*f))
    }

    /// `α_j(x)` for the simple root `α_j`.
    pub fn eval_simple(&self, j: usize, x: &[Rational]) -> Rational {
        (0..self.rank())
            .filter(|&i| self.c[i][j] != 0)
            .fold(Rational::zero(), |acc, i| acc + &x[i] * BigInt::from(self.c[i][j]))
    }

    pub fn eval_highest(&self, x: &[Rational]) -> Rational {
        self.eval_root(&self.marks, x)
    }

    /// Coweight coordinates `(α_1(x), ..., α_n(x))`, i.e. `C^T x`.
    pub fn to_coweight_coords(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.rank()).map(|j| self.eval_simple(j, x)).collect()
    }

    pub fn from_coweight_coords(&self, y: &[Rational]) -> Vec<Rational> {
        self.ct_inverse
            .iter()
            .map(|row| row.iter().zip(y).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn in_coweight_lattice(&self, x: &[Rational]) -> bool {
        (0..self.rank()).all(|j| self.eval_simple(j, x).is_integer())
    }

    pub fn in_coroot_lattice(&self, x: &[Rational]) -> bool {
        x.iter().all(|q| q.is_integer())
    }

    pub fn coroot_lattice(&self) -> Lattice {
        let n = self.rank();
        let basis = (0..n)
            .map(|i| (0..n).map(|j| Rational::from_integer(BigInt::from((i == j) as i64))).collect())
            .collect();
        Lattice { name: LatticeName::Coroot, basis }
    }

    pub fn coweight_lattice(&self) -> Lattice {
        Lattice { name: LatticeName::Coweight, basis: self.fundamental_coweights.clone() }
    }

    /// `f = |det C| = |P∨/Q∨|`.
    pub fn connection_index(&self) -> u64 {
        self.cartan.det().expect("square").abs().to_u64().expect("small")
    }

    /// `P∨/Q∨ = coker(C^T)`: in coweight coordinates `α_i∨` is the `i`-th row of `C`.
    pub fn fundamental_group(&self) -> FiniteAbelianGroup {
        let f = smith_normal_form(&self.cartan.transpose());
        FiniteAbelianGroup::try_from(&f).expect("Cartan matrix is nonsingular")
    }

    /// Every positive root and its negative, as a set.
    pub fn all_roots(&self) -> HashSet<Vec<i64>> {
        self.positive_roots
            .iter()
            .flat_map(|r| [r.clone(), r.iter().map(|x| -x).collect()])
            .collect()
    }
}

impl Lattice {
    /// Index of `self` inside `other`, both full rank.
    pub fn index_in(&self, other: &Lattice) -> Rational {
        let n = self.basis.len();
        // coordinates of self's basis in other's basis
        let other_cols: Vec<Vec<Rational>> = (0..n)
            .map(|i| other.basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        let coords: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|v| solve_rational_rows(&other_cols, v))
            .collect();
        rational_det(coords).abs()
    }
}

fn solve_rational_rows(m: &[Vec<Rational>], b: &[Rational]) -> Vec<Rational> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !aug[r][col].is_zero()).expect("full rank lattice");
        aug.swap(col, p);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let pivot = aug[col].clone();
                for (x, y) in aug[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    aug.into_iter().map(|r| r[n].clone()).collect()
}

fn rational_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::from_integer(BigInt::from(1));
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            let f = &m[r][col] / &m[col][col];
            let pivot = m[col].clone();
            for (x, y) in m[r].iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Coroot of `root` (simple-root coordinates) in simple-coroot coordinates:
/// `β∨ = Σ_j r_j (|α_j|² / |β|²) α_j∨`.
pub(crate) fn coroot_of(gram: &[Vec<i64>], root: &[i64]) -> Vec<i64> {
    let n = root.len();
    let norm: i64 = (0..n).map(|i| (0..n).map(|j| root[i] * gram[i][j] * root[j]).sum::<i64>()).sum();
    root.iter()
        .enumerate()
        .map(|(j, r)| {
            let num = r * gram[j][j];
            assert!(num % norm == 0, "non-integral coroot");
            num / norm
        })
        .collect()
}

/// Positive roots by closure of the simple roots under simple reflections
/// `s_i(β) = β - ⟨β, α_i∨⟩ α_i`, keeping only positive images.
fn close_positive_roots(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    let simple: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut out = simple.clone();
    let mut queue: VecDeque<Vec<i64>> = simple.into();
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * c[i][j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().all(|&x| x >= 0) && seen.insert(image.clone()) {
                out.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    // Stable order: by height, then lexicographic.
    out.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| b.cmp(a)));
    out
}

/// The classical table of fundamental groups of the adjoint groups.
pub fn tabulated_fundamental_group(t: CartanType) -> Vec<u64> {
    let n = t.rank() as u64;
    match t.series() {
        Series::A => vec![n + 1],
        Series::B | Series::C => vec![2],
        Series::D if n % 2 == 1 => vec![4],
        Series::D => vec![2, 2],
        Series::E => match n {
            6 => vec![3],
            7 => vec![2],
            _ => vec![],
        },
        Series::F | Series::G => vec![],
    }
}
