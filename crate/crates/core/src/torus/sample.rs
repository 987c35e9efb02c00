use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::TorusPoint;
use crate::affine::Alcove;
use crate::exactmath::Rational;
use crate::rootsys::RootSystem;

/// Largest denominator of a uniformly drawn coweight coordinate.
pub const MAX_DENOMINATOR: i64 = 60;

/// Deterministic source of torus points. Even draws are uniform over the
/// coweight coordinates; odd draws lie on a random face of the alcove, where
/// stabilizers are larger.
pub struct PointSampler {
    rng: ChaCha8Rng,
    count: u64,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed), count: 0 }
    }

    pub fn next_point(&mut self, rs: &RootSystem, alcove: &Alcove) -> TorusPoint {
        self.count += 1;
        if self.count % 2 == 1 {
            self.uniform_point(rs)
        } else {
            self.face_point(rs, alcove)
        }
    }

    /// A point of the open alcove with pairwise distinct barycentric
    /// coordinates, so no wall and no nontrivial element of `H_A` fixes it.
    pub fn generic_point(&mut self, rs: &RootSystem, alcove: &Alcove) -> TorusPoint {
        let m = alcove.vertices.len();
        let mut weights: Vec<i64> = Vec::with_capacity(m);
        while weights.len() < m {
            let w = self.rng.gen_range(1..=MAX_DENOMINATOR);
            if !weights.contains(&w) {
                weights.push(w);
            }
        }
        let total: i64 = weights.iter().sum();
        let t: Vec<Rational> = weights.iter().map(|&w| Rational::new(w.into(), total.into())).collect();
        TorusPoint::from_coroot(rs, &alcove.from_barycentric(&t))
    }

    /// Coweight coordinates drawn independently with denominators at most
    /// [`MAX_DENOMINATOR`].
    pub fn uniform_point(&mut self, rs: &RootSystem) -> TorusPoint {
        let y: Vec<Rational> = (0..rs.rank())
            .map(|_| {
                let d = self.rng.gen_range(1..=MAX_DENOMINATOR);
                Rational::new(BigInt::from(self.rng.gen_range(0..d)), BigInt::from(d))
            })
            .collect();
        TorusPoint::from_coroot(rs, &rs.from_coweight_coords(&y))
    }

    /// A point of the closed alcove on a random face.
    pub fn face_point(&mut self, rs: &RootSystem, alcove: &Alcove) -> TorusPoint {
        let m = alcove.vertices.len();
        let mut weights: Vec<i64> = (0..m)
            .map(|_| if self.rng.gen_bool(0.5) { 0 } else { self.rng.gen_range(1..=12) })
            .collect();
        if weights.iter().all(|&w| w == 0) {
            let k = self.rng.gen_range(0..m);
            weights[k] = 1;
        }
        let total: i64 = weights.iter().sum();
        let t: Vec<Rational> = weights.iter().map(|&w| Rational::new(w.into(), total.into())).collect();
        TorusPoint::from_coroot(rs, &alcove.from_barycentric(&t))
    }
}

pub fn sample_points(rs: &RootSystem, alcove: &Alcove, seed: u64, count: usize) -> Vec<TorusPoint> {
    let mut s = PointSampler::new(seed);
    (0..count).map(|_| s.next_point(rs, alcove)).collect()
}
