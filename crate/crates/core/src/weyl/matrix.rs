use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::{IntMatrix, Rational};

/// Integer matrix of a Weyl group element acting on coroot coordinates.
///
/// Entries are bounded by the largest coroot coefficient (at most 6), so a
/// byte per entry is enough.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylMatrix {
    n: usize,
    entries: Box<[i8]>,
}

impl WeylMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0i8; n * n].into_boxed_slice();
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { n, entries }
    }

    pub fn from_entries(n: usize, entries: &[i8]) -> Self {
        assert_eq!(entries.len(), n * n);
        Self { n, entries: entries.into() }
    }

    pub fn from_i64(n: usize, entries: &[i64]) -> Self {
        let entries = entries
            .iter()
            .map(|&x| i8::try_from(x).expect("Weyl matrix entry out of range"))
            .collect();
        Self { n, entries }
    }

    /// The simple reflection `s_i: x ↦ x - α_i(x) α_i∨`; only row `i` differs
    /// from the identity.
    pub fn simple_reflection(cartan: &[Vec<i64>], i: usize) -> Self {
        let n = cartan.len();
        let mut m = Self::identity(n);
        for k in 0..n {
            let v = (i == k) as i64 - cartan[k][i];
            m.entries[i * n + k] = v as i8;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.n + c] as i64
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| self.get(r, c) == (r == c) as i64))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = vec![0i8; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0i32;
                for k in 0..n {
                    acc += self.entries[r * n + k] as i32 * other.entries[k * n + c] as i32;
                }
                out[r * n + c] = i8::try_from(acc).expect("Weyl matrix entry out of range");
            }
        }
        Self { n, entries: out.into_boxed_slice() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = vec![0i8; n * n];
        for r in 0..n {
            for c in 0..n {
                out[c * n + r] = self.entries[r * n + c];
            }
        }
        Self { n, entries: out.into_boxed_slice() }
    }

    /// Inverse by repeated multiplication; Weyl elements have finite order.
    pub fn inverse(&self) -> Self {
        let mut prev = Self::identity(self.n);
        let mut cur = self.clone();
        while !cur.is_identity() {
            prev = cur.clone();
            cur = cur.mul(self);
        }
        prev
    }

    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.mul(self);
            k += 1;
        }
        k
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|r| {
                (0..self.n)
                    .filter(|&c| self.get(r, c) != 0)
                    .fold(Rational::zero(), |acc, c| acc + &x[c] * BigInt::from(self.get(r, c)))
            })
            .collect()
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.get(r, c) * x[c]).sum()).collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let data = self.entries.iter().map(|&x| BigInt::from(x)).collect();
        IntMatrix::new(self.n, self.n, data).expect("nonempty")
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.get(r, c)).collect()).collect()
    }
}

/// `m ← s_i · m` on a raw row-major slice: row `i` becomes
/// `row_i - Σ_k C[k][i] row_k`.
pub(crate) fn left_mul_simple_raw(m: &mut [i8], n: usize, cartan: &[Vec<i64>], i: usize) {
    for c in 0..n {
        let mut acc = m[i * n + c] as i32;
        for k in 0..n {
            let coeff = cartan[k][i];
            if coeff != 0 {
                acc -= coeff as i32 * m[k * n + c] as i32;
            }
        }
        m[i * n + c] = acc as i8;
    }
}

/// `m ← m · s_i` on a raw row-major slice.
pub(crate) fn right_mul_simple_raw(m: &mut [i8], n: usize, cartan: &[Vec<i64>], i: usize) {
    for r in 0..n {
        let mi = m[r * n + i] as i32;
        if mi == 0 {
            continue;
        }
        for j in 0..n {
            if j == i {
                m[r * n + j] = (-mi) as i8;
            } else if cartan[j][i] != 0 {
                m[r * n + j] = (m[r * n + j] as i32 - mi * cartan[j][i] as i32) as i8;
            }
        }
    }
}

impl fmt::Debug for WeylMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// A Weyl group element: its matrix (the identity) plus a generating word
/// kept for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: WeylMatrix,
    pub word: Vec<u8>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, RootSystem};

    #[test]
    fn raw_products_match_general_product() {
        let r = RootSystem::build("B3".parse::<CartanType>().unwrap());
        let c = r.cartan_entries();
        let gens: Vec<WeylMatrix> = (0..3).map(|i| WeylMatrix::simple_reflection(c, i)).collect();
        let m = gens[0].mul(&gens[2]).mul(&gens[1]).mul(&gens[2]);
        for i in 0..3 {
            let mut left = m.entries().to_vec();
            left_mul_simple_raw(&mut left, 3, c, i);
            assert_eq!(WeylMatrix::from_entries(3, &left), gens[i].mul(&m));
            let mut right = m.entries().to_vec();
            right_mul_simple_raw(&mut right, 3, c, i);
            assert_eq!(WeylMatrix::from_entries(3, &right), m.mul(&gens[i]));
        }
        assert_eq!(m.mul(&m.inverse()), WeylMatrix::identity(3));
    }

    #[test]
    fn simple_reflection_negates_its_coroot() {
        let r = RootSystem::build("G2".parse::<CartanType>().unwrap());
        for i in 0..2 {
            let s = WeylMatrix::simple_reflection(r.cartan_entries(), i);
            let mut e = vec![0i64; 2];
            e[i] = 1;
            let img = s.apply_int(&e);
            assert_eq!(img, e.iter().map(|x| -x).collect::<Vec<_>>());
            assert_eq!(s.order(), 2);
        }
    }
}
