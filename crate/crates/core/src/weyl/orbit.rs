use std::hash::BuildHasher;

use hashbrown::DefaultHashBuilder;

use hashbrown::HashTable;
use num_bigint::BigInt;

use super::matrix::{left_mul_simple_raw, WeylMatrix};
use super::subgroup::MatrixSubgroup;
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::torus::point::{coweight_residues, Residue, Scaled};
use crate::torus::TorusPoint;

/// Orbit of a torus point under the simple reflections, with Schreier
/// generators for its stabilizer.
#[derive(Clone, Debug)]
pub struct OrbitStabilizer {
    pub orbit_size: u64,
    pub stabilizer_order: u64,
    /// Irredundant: each one enlarges the group generated by the previous ones.
    pub stabilizer_generators: Vec<WeylMatrix>,
}

/// Breadth-first orbit of `t` under `W`, fails if the orbit exceeds `cap`.
///
/// The stabilizer is assembled from Schreier generators `u_q^{-1} s u_p`
/// (one per edge `p → q = s p`), stopping once `|orbit| · |stabilizer| = |W|`.
pub fn orbit_stabilizer(rs: &RootSystem, t: &TorusPoint, cap: u64) -> Result<OrbitStabilizer> {
    if let Some(start) = coweight_residues::<i64>(t) {
        return Orbit::explore(rs, start, cap)?.stabilizer(rs, cap);
    }
    if let Some(start) = coweight_residues::<i128>(t) {
        return Orbit::explore(rs, start, cap)?.stabilizer(rs, cap);
    }
    Orbit::explore(rs, coweight_residues::<BigInt>(t).expect("BigInt always fits"), cap)?.stabilizer(rs, cap)
}

/// Orbit points as coweight numerators over a shared denominator, stored
/// flat; `parent`/`via` record the BFS tree (`p = s_via[p] · parent[p]`).
struct Orbit<T> {
    n: usize,
    den: T,
    arena: Vec<T>,
    parent: Vec<u32>,
    via: Vec<u8>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
}

impl<T: Residue> Orbit<T> {
    fn explore(rs: &RootSystem, start: Scaled<T>, cap: u64) -> Result<Self> {
        let n = rs.rank();
        let cartan = rs.cartan_entries();
        let mut orbit = Self {
            n,
            den: start.den,
            arena: Vec::new(),
            parent: Vec::new(),
            via: Vec::new(),
            table: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
        };
        orbit.push(&start.num, 0, u8::MAX);
        let mut scratch = vec![T::zero(); n];
        let mut k = 0;
        while k < orbit.len() {
            for i in 0..n {
                orbit.reflect_into(k, cartan, i, &mut scratch);
                if orbit.find(&scratch).is_none() {
                    if orbit.len() as u64 >= cap {
                        return Err(Error::CapExceeded { cap, needed: cap + 1 });
                    }
                    orbit.push(&scratch, k as u32, i as u8);
                }
            }
            k += 1;
        }
        Ok(orbit)
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn point(&self, k: usize) -> &[T] {
        &self.arena[k * self.n..(k + 1) * self.n]
    }

    fn push(&mut self, y: &[T], parent: u32, via: u8) {
        let idx = self.len() as u32;
        self.arena.extend_from_slice(y);
        self.parent.push(parent);
        self.via.push(via);
        let h = self.hasher.hash_one(y);
        let (arena, n, hasher) = (&self.arena, self.n, &self.hasher);
        self.table.insert_unique(h, idx, |&j| hasher.hash_one(&arena[j as usize * n..(j as usize + 1) * n]));
    }

    fn find(&self, y: &[T]) -> Option<usize> {
        let h = self.hasher.hash_one(y);
        self.table.find(h, |&j| self.point(j as usize) == y).map(|&j| j as usize)
    }

    /// `y ↦ y - y_i · C[i][·] (mod den)`.
    fn reflect_into(&self, k: usize, cartan: &[Vec<i64>], i: usize, out: &mut [T]) {
        let y = self.point(k);
        for (j, o) in out.iter_mut().enumerate() {
            let c = cartan[i][j];
            *o = if c == 0 { y[j].clone() } else { (y[j].clone() - y[i].clone() * T::from(c)).mod_floor(&self.den) };
        }
    }

    /// Generator indices along the tree path, from `p` up to the root.
    fn path(&self, mut p: usize) -> Vec<u8> {
        let mut out = Vec::new();
        while p != 0 {
            out.push(self.via[p]);
            p = self.parent[p] as usize;
        }
        out
    }

    /// `u_q^{-1} s_i u_p`, where `u_p = s_{a_d} ⋯ s_{a_1}` is the tree word.
    fn schreier(&self, cartan: &[Vec<i64>], p: usize, i: usize, q: usize) -> WeylMatrix {
        let mut raw = WeylMatrix::identity(self.n).entries().to_vec();
        for &a in self.path(p).iter().rev() {
            left_mul_simple_raw(&mut raw, self.n, cartan, a as usize);
        }
        left_mul_simple_raw(&mut raw, self.n, cartan, i);
        for &b in &self.path(q) {
            left_mul_simple_raw(&mut raw, self.n, cartan, b as usize);
        }
        WeylMatrix::from_entries(self.n, &raw)
    }

    fn stabilizer(&self, rs: &RootSystem, cap: u64) -> Result<OrbitStabilizer> {
        let n = self.n;
        let cartan = rs.cartan_entries();
        let orbit_size = self.len() as u64;
        let group_order = rs.cartan_type().weyl_order();
        let mut stab = MatrixSubgroup::trivial(n, cap);
        let mut scratch = vec![T::zero(); n];
        'edges: for p in 0..self.len() {
            for i in 0..n {
                if orbit_size as u128 * stab.len() as u128 == group_order {
                    break 'edges;
                }
                self.reflect_into(p, cartan, i, &mut scratch);
                let q = self.find(&scratch).expect("orbit is closed");
                // tree edges give the identity
                if self.parent[q] as usize == p && self.via[q] as usize == i {
                    continue;
                }
                let g = self.schreier(cartan, p, i, q);
                if !g.is_identity() {
                    stab.add_generator(&g)?;
                }
            }
        }
        let stabilizer_order = stab.len() as u64;
        if orbit_size as u128 * stabilizer_order as u128 != group_order {
            return Err(Error::Consistency(format!(
                "orbit {orbit_size} times stabilizer {stabilizer_order} differs from |W| = {group_order}"
            )));
        }
        Ok(OrbitStabilizer { orbit_size, stabilizer_order, stabilizer_generators: stab.generators().to_vec() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use crate::rootsys::CartanType;

    fn rs(name: &str) -> RootSystem {
        RootSystem::build(name.parse::<CartanType>().unwrap())
    }

    #[test]
    fn identity_point_is_fixed_by_everything() {
        let g2 = rs("G2");
        let r = orbit_stabilizer(&g2, &TorusPoint::identity(&g2), 1000).unwrap();
        assert_eq!((r.orbit_size, r.stabilizer_order), (1, 12));
    }

    #[test]
    fn a2_special_point() {
        let a2 = rs("A2");
        let t0 = TorusPoint::from_coroot(&a2, &[rat(1, 3), rat(1, 3)]);
        let r = orbit_stabilizer(&a2, &t0, 1000).unwrap();
        assert_eq!((r.orbit_size, r.stabilizer_order), (2, 3));
        assert_eq!(r.stabilizer_generators.len(), 1);
        assert_eq!(r.stabilizer_generators[0].order(), 3);
    }

    #[test]
    fn a1_points() {
        let a1 = rs("A1");
        let r = orbit_stabilizer(&a1, &TorusPoint::from_coroot(&a1, &[rat(1, 5)]), 10).unwrap();
        assert_eq!((r.orbit_size, r.stabilizer_order), (2, 1));
        assert!(r.stabilizer_generators.is_empty());
        let r = orbit_stabilizer(&a1, &TorusPoint::from_coroot(&a1, &[int(0)]), 10).unwrap();
        assert_eq!((r.orbit_size, r.stabilizer_order), (1, 2));
    }

    #[test]
    fn schreier_generators_fix_the_point() {
        let b3 = rs("B3");
        let t = TorusPoint::from_coroot(&b3, &[rat(1, 2), int(0), rat(1, 4)]);
        let r = orbit_stabilizer(&b3, &t, 100).unwrap();
        assert!(r.stabilizer_order > 1);
        assert!(r.stabilizer_generators.iter().all(|g| t.is_fixed_by(&b3, g)));
    }

    #[test]
    fn orbit_cap() {
        let b3 = rs("B3");
        let generic = TorusPoint::from_coroot(&b3, &[rat(1, 7), rat(2, 11), rat(3, 13)]);
        assert!(matches!(orbit_stabilizer(&b3, &generic, 10), Err(Error::CapExceeded { .. })));
        assert_eq!(orbit_stabilizer(&b3, &generic, 100).unwrap().orbit_size, 48);
    }
}
