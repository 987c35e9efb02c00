use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactmath::rational::{common_denominator, frac};
use crate::exactmath::Rational;
use crate::rootsys::RootSystem;
use crate::weyl::WeylMatrix;

/// A point of `T = t/P∨`, kept as the canonical representative whose
/// coweight coordinates `α_j(x)` all lie in `[0, 1)`.
#[derive(Clone, Debug)]
pub struct TorusPoint {
    coroot: Vec<Rational>,
    coweight: Vec<Rational>,
}

impl TorusPoint {
    /// `exp(x)` for `x` in coroot coordinates.
    pub fn from_coroot(rs: &RootSystem, x: &[Rational]) -> Self {
        let coweight: Vec<Rational> = rs.to_coweight_coords(x).iter().map(frac).collect();
        let coroot = rs.from_coweight_coords(&coweight);
        Self { coroot, coweight }
    }

    pub fn identity(rs: &RootSystem) -> Self {
        Self::from_coroot(rs, &vec![Rational::from_integer(BigInt::from(0)); rs.rank()])
    }

    /// Canonical representative in coroot coordinates.
    pub fn coords(&self) -> &[Rational] {
        &self.coroot
    }

    /// Coweight coordinates, each in `[0, 1)`.
    pub fn coweight_coords(&self) -> &[Rational] {
        &self.coweight
    }

    pub fn act(&self, rs: &RootSystem, w: &WeylMatrix) -> Self {
        Self::from_coroot(rs, &w.apply(&self.coroot))
    }

    pub fn is_fixed_by(&self, rs: &RootSystem, w: &WeylMatrix) -> bool {
        self.act(rs, w) == *self
    }

    pub fn denominator(&self) -> BigInt {
        common_denominator(&self.coweight)
    }
}

impl PartialEq for TorusPoint {
    fn eq(&self, other: &Self) -> bool {
        self.coweight == other.coweight
    }
}

impl Eq for TorusPoint {}

impl Hash for TorusPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coweight.hash(state);
    }
}

/// Integer type used for residue arithmetic in the hot loops: the narrowest
/// of `i64`, `i128`, `BigInt` that holds the numerators with headroom.
pub(crate) trait Residue: Integer + Clone + Hash + From<i64> {
    fn from_big(x: &BigInt) -> Option<Self>;
}

impl Residue for i64 {
    fn from_big(x: &BigInt) -> Option<Self> {
        // headroom for n * 6 * D in matrix products
        x.to_i64().filter(|v| v.unsigned_abs() < (1u64 << 40))
    }
}

impl Residue for i128 {
    fn from_big(x: &BigInt) -> Option<Self> {
        // headroom for n * 6 * D in matrix products
        x.to_i128().filter(|v| v.unsigned_abs() < (1u128 << 100))
    }
}

impl Residue for BigInt {
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
}

/// Vector `num / den` with integer numerators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Scaled<T> {
    pub den: T,
    pub num: Vec<T>,
}

impl<T: Residue> Scaled<T> {
    pub fn from_rationals(v: &[Rational]) -> Option<Self> {
        let den = common_denominator(v);
        let num = v
            .iter()
            .map(|q| T::from_big(&(q.numer() * (&den / q.denom()))))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { den: T::from_big(&den)?, num })
    }
}

/// Coweight numerators modulo the denominator; the orbit walk works here.
pub(crate) fn coweight_residues<T: Residue>(p: &TorusPoint) -> Option<Scaled<T>> {
    Scaled::from_rationals(p.coweight_coords())
}

/// `y ↦ y - y_i · C[i][·]  (mod den)`: the simple reflection `s_i` on coweight
/// coordinates.
pub(crate) fn reflect_residues<T: Residue>(p: &Scaled<T>, cartan: &[Vec<i64>], i: usize) -> Scaled<T> {
    let yi = p.num[i].clone();
    let num = p
        .num
        .iter()
        .zip(&cartan[i])
        .map(|(y, &c)| {
            if c == 0 {
                y.clone()
            } else {
                (y.clone() - yi.clone() * T::from(c)).mod_floor(&p.den)
            }
        })
        .collect();
    Scaled { den: p.den.clone(), num }
}

/// Whether `w x - x ∈ P∨`, with `x = a / e` in coroot coordinates:
/// tests `C^T (M a - a) ≡ 0 (mod e)` one coweight coordinate at a time.
pub(crate) fn fixes_scaled<T: Residue>(m: &[i8], n: usize, cartan: &[Vec<i64>], x: &Scaled<T>, diff: &mut [T]) -> bool {
    for r in 0..n {
        let mut acc = T::zero();
        for c in 0..n {
            let e = m[r * n + c];
            if e != 0 {
                acc = acc + T::from(e as i64) * x.num[c].clone();
            }
        }
        diff[r] = acc - x.num[r].clone();
    }
    for j in 0..n {
        let mut acc = T::zero();
        for i in 0..n {
            let c = cartan[i][j];
            if c != 0 {
                acc = acc + T::from(c) * diff[i].clone();
            }
        }
        if !acc.is_multiple_of(&x.den) {
            return false;
        }
    }
    true
}
