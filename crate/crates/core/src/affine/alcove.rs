use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::map::AffineMap;
use crate::error::{Error, Result};
use crate::exactmath::rational::{in_unit_interval, zero_vec};
use crate::exactmath::Rational;
use crate::rootsys::RootSystem;

/// Reflections past this count mean the walk is not converging, which can
/// only come from a sign or convention error.
pub const WALK_LIMIT: usize = 1_000_000;

/// The fundamental alcove `{x : α_i(x) > 0, θ(x) < 1}` as its vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove {
    /// `v_0 = 0`, `v_i = ω_i∨ / a_i`.
    pub vertices: Vec<Vec<Rational>>,
    pub barycenter: Vec<Rational>,
}

pub fn fundamental_alcove(rs: &RootSystem) -> Alcove {
    let n = rs.rank();
    let mut vertices = vec![zero_vec(n)];
    for (w, &a) in rs.fundamental_coweights().iter().zip(rs.marks()) {
        let a = Rational::from_integer(BigInt::from(a));
        vertices.push(w.iter().map(|x| x / &a).collect());
    }
    let count = Rational::from_integer(BigInt::from(n as i64 + 1));
    let barycenter = (0..n)
        .map(|i| vertices.iter().fold(Rational::zero(), |acc, v| acc + &v[i]) / &count)
        .collect();
    Alcove { vertices, barycenter }
}

impl Alcove {
    pub fn dim(&self) -> usize {
        self.barycenter.len()
    }

    /// Barycentric coordinates `(t_0, ..., t_n)` with `x = Σ t_i v_i`, `Σ t_i = 1`.
    pub fn barycentric(&self, x: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        // Solve Σ_{i≥1} t_i v_i = x (v_0 = 0), then t_0 = 1 - Σ t_i.
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (1..=n).map(|i| self.vertices[i][r].clone()).collect();
                row.push(x[r].clone());
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !aug[r][col].is_zero()).expect("simplex is nondegenerate");
            aug.swap(col, p);
            let inv = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    let pivot = aug[col].clone();
                    for (a, b) in aug[r].iter_mut().zip(&pivot) {
                        *a -= &f * b;
                    }
                }
            }
        }
        let rest: Vec<Rational> = aug.into_iter().map(|r| r[n].clone()).collect();
        let t0 = Rational::one() - rest.iter().fold(Rational::zero(), |a, b| a + b);
        std::iter::once(t0).chain(rest).collect()
    }

    /// Point with the given barycentric coordinates.
    pub fn from_barycentric(&self, t: &[Rational]) -> Vec<Rational> {
        (0..self.dim())
            .map(|r| self.vertices.iter().zip(t).fold(Rational::zero(), |acc, (v, ti)| acc + &v[r] * ti))
            .collect()
    }

    pub fn contains_closed(&self, x: &[Rational]) -> bool {
        self.barycentric(x).iter().all(|t| !t.is_negative())
    }

    pub fn contains_open(&self, x: &[Rational]) -> bool {
        self.barycentric(x).iter().all(|t| t.is_positive())
    }

    /// `r_s(x) = s x₀ + (1 - s) x` for `x` in the closed alcove and `0 ≤ s ≤ 1`.
    pub fn retract(&self, x: &[Rational], s: &Rational) -> Result<Vec<Rational>> {
        if !in_unit_interval(s) {
            return Err(Error::ParameterOutOfRange(s.to_string()));
        }
        if !self.contains_closed(x) {
            return Err(Error::NotInAlcove);
        }
        let rest = Rational::one() - s;
        Ok(self.barycenter.iter().zip(x).map(|(b, xi)| b * s + xi * &rest).collect())
    }
}

/// Which wall of the fundamental alcove: simple wall `α_i = 0` or the affine
/// wall `θ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wall {
    Simple(usize),
    Affine,
}

impl Wall {
    pub fn reflection(&self, rs: &RootSystem) -> AffineMap {
        match *self {
            Wall::Simple(i) => {
                let mut e = vec![0i64; rs.rank()];
                e[i] = 1;
                AffineMap::reflection(rs, &e, 0)
            }
            Wall::Affine => AffineMap::reflection(rs, rs.highest_root(), 1),
        }
    }

    /// Signed slack: positive inside, zero on the wall, negative when violated.
    pub fn slack(&self, rs: &RootSystem, x: &[Rational]) -> Rational {
        match *self {
            Wall::Simple(i) => rs.eval_simple(i, x),
            Wall::Affine => Rational::one() - rs.eval_highest(x),
        }
    }

    /// Walls in scan order: simple walls ascending, then the affine wall.
    pub fn all(rs: &RootSystem) -> Vec<Wall> {
        (0..rs.rank()).map(Wall::Simple).chain(std::iter::once(Wall::Affine)).collect()
    }
}

/// Walks `x` into the closed fundamental alcove. Returns `(x′, u)` with
/// `u ∈ W_a` and `u(x) = x′`.
pub fn reduce_to_alcove(rs: &RootSystem, x: &[Rational]) -> (Vec<Rational>, AffineMap) {
    let (x_out, _, u) = walk(rs, x, x);
    (x_out, u)
}

/// Walks `x` alongside an interior certificate point: each step reflects
/// through the first wall strictly violated by the certificate, so boundary
/// points of `x` are resolved by which alcove the certificate names.
pub fn reduce_with_certificate(
    rs: &RootSystem,
    x: &[Rational],
    certificate: &[Rational],
) -> (Vec<Rational>, AffineMap) {
    let (x_out, _, u) = walk(rs, x, certificate);
    (x_out, u)
}

fn walk(rs: &RootSystem, x: &[Rational], certificate: &[Rational]) -> (Vec<Rational>, Vec<Rational>, AffineMap) {
    let walls = Wall::all(rs);
    let reflections: Vec<AffineMap> = walls.iter().map(|w| w.reflection(rs)).collect();
    let mut x = x.to_vec();
    let mut cert = certificate.to_vec();
    let mut u = AffineMap::identity(rs.rank());
    for _ in 0..WALK_LIMIT {
        let violated = walls.iter().position(|w| w.slack(rs, &cert).is_negative());
        let Some(k) = violated else {
            return (x, cert, u);
        };
        x = reflections[k].apply(&x);
        cert = reflections[k].apply(&cert);
        u = reflections[k].compose(&u);
    }
    panic!("alcove walk exceeded {WALK_LIMIT} reflections: sign convention bug");
}
