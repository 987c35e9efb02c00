use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major, arbitrary precision entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::BadDimensions);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::BadDimensions);
        }
        let data = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::new(rows.len(), cols, data)
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        Self { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                data.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::BadDimensions);
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, x)| acc + x * a)
            })
            .collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        Ok(sign * &a[n * n - 1])
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.to_rational_rows();
        row_reduce(&mut m)
    }

    pub fn to_rational_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect()
    }

    /// Exact solution of `self * x = b`.
    pub fn solve_rational(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rational>> = self
            .to_rational_rows()
            .into_iter()
            .zip(b)
            .map(|(mut row, bi)| {
                row.push(bi.clone());
                row
            })
            .collect();
        let rank = row_reduce_columns(&mut aug, n);
        if rank < n {
            return Err(Error::Singular);
        }
        Ok(aug.into_iter().map(|row| row[n].clone()).collect())
    }

    /// Rational inverse, rows of the result.
    pub fn inverse_rational(&self) -> Result<Vec<Vec<Rational>>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rational>> = self
            .to_rational_rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        if row_reduce_columns(&mut aug, n) < n {
            return Err(Error::Singular);
        }
        Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn row_reduce(m: &mut [Vec<Rational>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    row_reduce_columns(m, cols)
}

/// Gauss-Jordan on the first `pivot_cols` columns; returns the rank found.
fn row_reduce_columns(m: &mut [Vec<Rational>], pivot_cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    for c in 0..pivot_cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                let (pivot_row, other) = if r < rank {
                    let (lo, hi) = m.split_at_mut(rank);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = m.split_at_mut(r);
                    (&lo[rank], &mut hi[0])
                };
                for (x, y) in other.iter_mut().zip(pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    fn cartan_a(n: usize) -> IntMatrix {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(IntMatrix::identity(3).det().unwrap(), BigInt::from(1));
        for n in 1..=8 {
            assert_eq!(cartan_a(n).det().unwrap(), BigInt::from(n as i64 + 1));
        }
        let needs_swap = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(needs_swap.det().unwrap(), BigInt::from(-1));
        let singular = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(singular.det().unwrap(), BigInt::from(0));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::from_rows(&[[1, 2, 3]]).unwrap();
        assert_eq!(m.det(), Err(Error::NotSquare { rows: 1, cols: 3 }));
    }

    #[test]
    fn empty_matrix_rejected() {
        assert_eq!(IntMatrix::new(0, 0, vec![]), Err(Error::BadDimensions));
    }

    #[test]
    fn solve_examples() {
        let b = vec![rat(3, 7), int(-2)];
        assert_eq!(IntMatrix::identity(2).solve_rational(&b).unwrap(), b);
        let a1 = IntMatrix::from_rows(&[[2]]).unwrap();
        assert_eq!(a1.solve_rational(&[int(1)]).unwrap(), vec![rat(1, 2)]);
        assert_eq!(
            cartan_a(2).solve_rational(&[int(1), int(0)]).unwrap(),
            vec![rat(2, 3), rat(1, 3)]
        );
        let singular = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(singular.solve_rational(&[int(1), int(0)]), Err(Error::Singular));
    }

    #[test]
    fn inverse_and_rank() {
        let inv = cartan_a(2).inverse_rational().unwrap();
        assert_eq!(inv, vec![vec![rat(2, 3), rat(1, 3)], vec![rat(1, 3), rat(2, 3)]]);
        assert_eq!(IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap().rank(), 1);
        assert_eq!(cartan_a(5).rank(), 5);
    }
}
