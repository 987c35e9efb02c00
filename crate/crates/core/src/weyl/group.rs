use std::hash::BuildHasher;

use hashbrown::DefaultHashBuilder;

use hashbrown::HashTable;

use super::matrix::{left_mul_simple_raw, right_mul_simple_raw, WeylElement, WeylMatrix};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

pub const DEFAULT_CAP: u64 = 1_000_000;

/// Finite Weyl group, fully enumerated by breadth-first closure.
///
/// Elements live in one flat arena (`n²` bytes each) in BFS order; element 0
/// is the identity. Each element records the generator that reached it from its
/// BFS parent, which gives a shortest word on demand.
pub struct WeylGroup {
    n: usize,
    cartan: Vec<Vec<i64>>,
    generators: Vec<WeylMatrix>,
    arena: Vec<i8>,
    parent: Vec<u32>,
    via: Vec<u8>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
}

impl WeylGroup {
    /// Enumerates `W`, failing with `CapExceeded` if `|W| > cap`.
    pub fn generate(rs: &RootSystem, cap: u64) -> Result<Self> {
        let expected = rs.cartan_type().weyl_order();
        if expected > cap as u128 {
            return Err(Error::CapExceeded { cap, needed: expected.min(u64::MAX as u128) as u64 });
        }
        let n = rs.rank();
        let cartan = rs.cartan_entries().to_vec();
        let generators = (0..n).map(|i| WeylMatrix::simple_reflection(&cartan, i)).collect();
        let mut g = Self {
            n,
            cartan,
            generators,
            arena: Vec::with_capacity(expected as usize * n * n),
            parent: Vec::with_capacity(expected as usize),
            via: Vec::with_capacity(expected as usize),
            table: HashTable::with_capacity(expected as usize),
            hasher: DefaultHashBuilder::default(),
        };
        g.push(WeylMatrix::identity(n).entries(), 0, u8::MAX);
        let mut scratch = vec![0i8; n * n];
        let mut next = 0usize;
        while next < g.len() {
            for i in 0..n {
                scratch.copy_from_slice(g.raw(next));
                left_mul_simple_raw(&mut scratch, n, &g.cartan, i);
                if g.index_of_raw(&scratch).is_none() {
                    if g.len() as u64 >= cap {
                        return Err(Error::CapExceeded { cap, needed: cap + 1 });
                    }
                    g.push(&scratch, next as u32, i as u8);
                }
            }
            next += 1;
        }
        Ok(g)
    }

    fn push(&mut self, m: &[i8], parent: u32, via: u8) {
        let idx = self.parent.len() as u32;
        self.arena.extend_from_slice(m);
        self.parent.push(parent);
        self.via.push(via);
        let h = self.hasher.hash_one(m);
        let (arena, n2) = (&self.arena, self.n * self.n);
        let hasher = &self.hasher;
        self.table.insert_unique(h, idx, |&j| {
            hasher.hash_one(&arena[j as usize * n2..(j as usize + 1) * n2])
        });
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.len() as u64
    }

    pub fn generators(&self) -> &[WeylMatrix] {
        &self.generators
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn raw(&self, idx: usize) -> &[i8] {
        let n2 = self.n * self.n;
        &self.arena[idx * n2..(idx + 1) * n2]
    }

    pub fn matrix(&self, idx: usize) -> WeylMatrix {
        WeylMatrix::from_entries(self.n, self.raw(idx))
    }

    /// Shortest word `s_{i_1} ... s_{i_k}` (leftmost letter first).
    pub fn word(&self, mut idx: usize) -> Vec<u8> {
        let mut w = Vec::new();
        while idx != 0 {
            w.push(self.via[idx]);
            idx = self.parent[idx] as usize;
        }
        w
    }

    pub fn element(&self, idx: usize) -> WeylElement {
        WeylElement { matrix: self.matrix(idx), word: self.word(idx) }
    }

    pub fn index_of_raw(&self, m: &[i8]) -> Option<usize> {
        let h = self.hasher.hash_one(m);
        self.table.find(h, |&j| self.raw(j as usize) == m).map(|&j| j as usize)
    }

    pub fn index_of(&self, m: &WeylMatrix) -> Option<usize> {
        self.index_of_raw(m.entries())
    }

    /// Index of `s_i · g · s_i`.
    pub fn conjugate_by_simple(&self, idx: usize, i: usize, scratch: &mut [i8]) -> usize {
        scratch.copy_from_slice(self.raw(idx));
        left_mul_simple_raw(scratch, self.n, &self.cartan, i);
        right_mul_simple_raw(scratch, self.n, &self.cartan, i);
        self.index_of_raw(scratch).expect("closed under conjugation")
    }

    pub fn iter(&self) -> impl Iterator<Item = &[i8]> + '_ {
        self.arena.chunks_exact(self.n * self.n)
    }
}

/// A conjugacy class, members listed by element index.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<u32>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partition of `W` into conjugacy classes, ordered by the BFS index of their
/// first element (so the identity class comes first).
pub fn conjugacy_classes(group: &WeylGroup) -> Vec<ConjugacyClass> {
    let n = group.rank();
    let mut class_of = vec![u32::MAX; group.len()];
    let mut scratch = vec![0i8; n * n];
    let mut out = Vec::new();
    for start in 0..group.len() {
        if class_of[start] != u32::MAX {
            continue;
        }
        let id = out.len() as u32;
        class_of[start] = id;
        let mut members = vec![start as u32];
        let mut k = 0;
        while k < members.len() {
            let g = members[k] as usize;
            for i in 0..n {
                let h = group.conjugate_by_simple(g, i, &mut scratch);
                if class_of[h] == u32::MAX {
                    class_of[h] = id;
                    members.push(h as u32);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        out.push(ConjugacyClass { representative: start, members });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn group(name: &str) -> WeylGroup {
        let rs = RootSystem::build(name.parse::<CartanType>().unwrap());
        WeylGroup::generate(&rs, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(group("A1").order(), 2);
        assert_eq!(group("A2").order(), 6);
        assert_eq!(group("G2").order(), 12);
        assert_eq!(group("B3").order(), 48);
        assert_eq!(group("F4").order(), 1152);
    }

    #[test]
    fn class_counts() {
        assert_eq!(conjugacy_classes(&group("A1")).len(), 2);
        assert_eq!(conjugacy_classes(&group("A2")).len(), 3);
        assert_eq!(conjugacy_classes(&group("G2")).len(), 6);
        // S5 has 7 classes (partitions of 5); W(B3) has 10 (bipartitions of 3).
        assert_eq!(conjugacy_classes(&group("A4")).len(), 7);
        assert_eq!(conjugacy_classes(&group("B3")).len(), 10);
        assert_eq!(conjugacy_classes(&group("F4")).len(), 25);
    }

    #[test]
    fn cap_is_enforced() {
        let e8 = RootSystem::build("E8".parse::<CartanType>().unwrap());
        assert!(matches!(WeylGroup::generate(&e8, DEFAULT_CAP), Err(Error::CapExceeded { .. })));
        let a3 = RootSystem::build("A3".parse::<CartanType>().unwrap());
        assert!(matches!(WeylGroup::generate(&a3, 23), Err(Error::CapExceeded { .. })));
        assert!(WeylGroup::generate(&a3, 24).is_ok());
    }

    #[test]
    fn words_reproduce_matrices() {
        let g = group("B3");
        for idx in [0, 5, 17, 47] {
            let m = g.word(idx).iter().fold(WeylMatrix::identity(3), |m, &i| m.mul(&g.generators()[i as usize]));
            assert_eq!(m, g.matrix(idx));
        }
        assert_eq!(g.word(47).len(), 9, "longest element of B3 has length 9");
    }
}
