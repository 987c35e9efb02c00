//! Smith normal form over the integers.
//!
//! For an integer matrix `M` we find unimodular `U`, `V` with `U * M * V = D`
//! diagonal and `d_1 | d_2 | ...`. The cokernel of `M: Z^cols -> Z^rows` is
//! then `Z^rows / D Z^cols`, and `U^{-1}` carries its standard generators back
//! to the original coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Cokernel structure: torsion invariant factors (all > 1, each dividing the
/// next) and the free rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    pub factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl InvariantFactors {
    pub fn torsion_order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_chain(&self) -> bool {
        self.factors.iter().all(|d| d > &BigInt::one())
            && self.factors.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

/// Full decomposition, keeping the transforms.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    /// Diagonal of `D`, length `min(rows, cols)`, nonnegative.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub left_inverse: IntMatrix,
    pub right: IntMatrix,
    rows: usize,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn invariant_factors(&self) -> InvariantFactors {
        InvariantFactors {
            factors: self.diagonal.iter().filter(|d| d > &&BigInt::one()).cloned().collect(),
            free_rank: self.rows - self.rank(),
        }
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> InvariantFactors {
    smith_decomposition(m).invariant_factors()
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in &mut self.u_inv {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.a[0].len() {
            let t = &self.a[j][c] * q;
            self.a[i][c] -= t;
        }
        for c in 0..self.u[0].len() {
            let t = &self.u[j][c] * q;
            self.u[i][c] -= t;
        }
        // U^{-1} picks up the inverse operation on the right: col_j += q * col_i.
        for row in &mut self.u_inv {
            let t = &row[i] * q;
            row[j] += t;
        }
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let t = &row[j] * q;
            row[i] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        for x in &mut self.u[i] {
            *x = -&*x;
        }
        for row in &mut self.u_inv {
            row[i] = -&row[i];
        }
    }
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn to_matrix(rows: Vec<Vec<BigInt>>) -> IntMatrix {
    let r = rows.len();
    let c = rows[0].len();
    IntMatrix::new(r, c, rows.into_iter().flatten().collect()).expect("nonempty")
}

pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut w = Work {
        a: (0..rows).map(|r| m.row(r).to_vec()).collect(),
        u: identity_rows(rows),
        u_inv: identity_rows(rows),
        v: identity_rows(cols),
    };
    let size = rows.min(cols);
    for k in 0..size {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        let pivot = (k..rows)
            .flat_map(|r| (k..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !w.a[r][c].is_zero())
            .min_by(|&(r1, c1), &(r2, c2)| w.a[r1][c1].abs().cmp(&w.a[r2][c2].abs()));
        let Some((pr, pc)) = pivot else { break };
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);
        loop {
            let mut done = true;
            for r in k + 1..rows {
                if w.a[r][k].is_zero() {
                    continue;
                }
                let q = w.a[r][k].div_floor(&w.a[k][k]);
                w.row_sub(r, k, &q);
                if !w.a[r][k].is_zero() {
                    w.swap_rows(k, r);
                    done = false;
                }
            }
            for c in k + 1..cols {
                if w.a[k][c].is_zero() {
                    continue;
                }
                let q = w.a[k][c].div_floor(&w.a[k][k]);
                w.col_sub(c, k, &q);
                if !w.a[k][c].is_zero() {
                    w.swap_cols(k, c);
                    done = false;
                }
            }
            if !done {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row and retry.
            let offender = (k + 1..rows)
                .flat_map(|r| (k + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !w.a[r][c].is_multiple_of(&w.a[k][k]));
            match offender {
                Some((r, _)) => w.row_sub(k, r, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.a[k][k].is_negative() {
            w.negate_row(k);
        }
    }
    let diagonal = (0..size).map(|i| w.a[i][i].clone()).collect();
    SmithDecomposition {
        diagonal,
        left: to_matrix(w.u),
        left_inverse: to_matrix(w.u_inv),
        right: to_matrix(w.v),
        rows,
    }
}
