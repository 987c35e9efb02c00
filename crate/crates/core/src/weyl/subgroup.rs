use std::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};

use super::matrix::WeylMatrix;
use crate::error::{Error, Result};
use crate::exactmath::FiniteAbelianGroup;
use crate::finite::GroupShape;

/// Subgroup of `GL_n(Z)` generated by Weyl matrices, enumerated into a flat
/// byte arena. Element 0 is the identity.
pub struct MatrixSubgroup {
    n: usize,
    arena: Vec<i8>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
    generators: Vec<WeylMatrix>,
    sparse: Vec<Sparse>,
    cap: u64,
}

/// Nonzero entries `(row, col, value)` of `g - I`.
#[derive(Clone, Debug)]
struct Sparse(Vec<(usize, usize, i32)>);

impl Sparse {
    fn of(g: &WeylMatrix) -> Self {
        let n = g.dim();
        let mut nz = Vec::new();
        for r in 0..n {
            for c in 0..n {
                let v = g.get(r, c) as i32 - i32::from(r == c);
                if v != 0 {
                    nz.push((r, c, v));
                }
            }
        }
        Sparse(nz)
    }

    /// `out ← a · (I + self)`.
    fn right(&self, a: &[i8], n: usize, out: &mut [i8]) {
        out.copy_from_slice(a);
        for &(k, c, v) in &self.0 {
            for r in 0..n {
                out[r * n + c] = (out[r * n + c] as i32 + a[r * n + k] as i32 * v) as i8;
            }
        }
    }

    /// `out ← (I + self) · a`.
    fn left(&self, a: &[i8], n: usize, out: &mut [i8]) {
        out.copy_from_slice(a);
        for &(r, k, v) in &self.0 {
            for c in 0..n {
                out[r * n + c] = (out[r * n + c] as i32 + v * a[k * n + c] as i32) as i8;
            }
        }
    }
}

impl MatrixSubgroup {
    pub fn trivial(n: usize, cap: u64) -> Self {
        let mut g = Self {
            n,
            arena: Vec::new(),
            table: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
            generators: Vec::new(),
            sparse: Vec::new(),
            cap,
        };
        g.push(WeylMatrix::identity(n).entries());
        g
    }

    pub fn generated(n: usize, generators: &[WeylMatrix], cap: u64) -> Result<Self> {
        let mut g = Self::trivial(n, cap);
        for x in generators {
            g.add_generator(x)?;
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.arena.len() / (self.n * self.n)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[WeylMatrix] {
        &self.generators
    }

    pub fn raw(&self, k: usize) -> &[i8] {
        let n2 = self.n * self.n;
        &self.arena[k * n2..(k + 1) * n2]
    }

    pub fn index_of(&self, m: &[i8]) -> Option<usize> {
        let h = self.hasher.hash_one(m);
        self.table.find(h, |&j| self.raw(j as usize) == m).map(|&j| j as usize)
    }

    pub fn contains(&self, m: &[i8]) -> bool {
        self.index_of(m).is_some()
    }

    fn push(&mut self, m: &[i8]) {
        let idx = self.len() as u32;
        self.arena.extend_from_slice(m);
        let h = self.hasher.hash_one(m);
        let (arena, n2, hasher) = (&self.arena, self.n * self.n, &self.hasher);
        self.table.insert_unique(h, idx, |&j| hasher.hash_one(&arena[j as usize * n2..(j as usize + 1) * n2]));
    }

    /// Adds `g` unless already present; returns whether the group grew.
    pub fn add_generator(&mut self, g: &WeylMatrix) -> Result<bool> {
        if self.contains(g.entries()) {
            return Ok(false);
        }
        self.generators.push(g.clone());
        self.sparse.push(Sparse::of(g));
        let mut scratch = vec![0i8; self.n * self.n];
        let mut k = 0;
        while k < self.len() {
            for gi in 0..self.sparse.len() {
                self.sparse[gi].right(self.raw(k), self.n, &mut scratch);
                if !self.contains(&scratch) {
                    if self.len() as u64 >= self.cap {
                        return Err(Error::CapExceeded { cap: self.cap, needed: self.cap + 1 });
                    }
                    self.push(&scratch);
                }
            }
            k += 1;
        }
        Ok(true)
    }

    /// Abelian structure when the generators commute, class count otherwise.
    pub fn shape(&self) -> Result<GroupShape> {
        let gens = &self.generators;
        let commute = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)));
        let size = self.len();
        let mut scratch = vec![0i8; self.n * self.n];
        if commute {
            let mut table = vec![0usize; size * size];
            for a in 0..size {
                for b in 0..size {
                    mul_raw(self.raw(a), self.raw(b), self.n, &mut scratch);
                    table[a * size + b] = self.lookup(&scratch)?;
                }
            }
            let g = FiniteAbelianGroup::from_operation(size, 0, |a, b| table[a * size + b])?;
            return Ok(GroupShape::Abelian(g));
        }
        let inverses: Vec<Sparse> = gens.iter().map(|g| Sparse::of(&g.inverse())).collect();
        let mut tmp = vec![0i8; self.n * self.n];
        let mut class_of = vec![u32::MAX; size];
        let mut classes = 0u32;
        for start in 0..size {
            if class_of[start] != u32::MAX {
                continue;
            }
            class_of[start] = classes;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for (g, gi) in self.sparse.iter().zip(&inverses) {
                    g.left(self.raw(x), self.n, &mut tmp);
                    gi.right(&tmp, self.n, &mut scratch);
                    let y = self.lookup(&scratch)?;
                    if class_of[y] == u32::MAX {
                        class_of[y] = classes;
                        stack.push(y);
                    }
                }
            }
            classes += 1;
        }
        Ok(GroupShape::NonAbelian { order: size as u64, class_count: Some(classes as u64) })
    }

    fn lookup(&self, m: &[i8]) -> Result<usize> {
        self.index_of(m).ok_or_else(|| Error::Consistency("subgroup is not closed".into()))
    }
}

/// `out ← a · b` on row-major `n × n` byte matrices.
fn mul_raw(a: &[i8], b: &[i8], n: usize, out: &mut [i8]) {
    for r in 0..n {
        for c in 0..n {
            let mut acc = 0i32;
            for k in 0..n {
                acc += a[r * n + k] as i32 * b[k * n + c] as i32;
            }
            out[r * n + c] = acc as i8;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, RootSystem};
    use crate::weyl::simple_reflections;

    #[test]
    fn whole_groups() {
        for (name, order, classes) in [("A2", 6, 3), ("B3", 48, 10), ("G2", 12, 6), ("A1", 2, 2)] {
            let rs = RootSystem::build(name.parse::<CartanType>().unwrap());
            let g = MatrixSubgroup::generated(rs.rank(), &simple_reflections(&rs), 1000).unwrap();
            assert_eq!(g.len(), order);
            assert_eq!(g.shape().unwrap().class_count(), Some(classes));
        }
    }

    #[test]
    fn cyclic_subgroup() {
        let rs = RootSystem::build("A3".parse::<CartanType>().unwrap());
        let s = simple_reflections(&rs);
        let c = s[0].mul(&s[1]).mul(&s[2]);
        let g = MatrixSubgroup::generated(3, &[c], 100).unwrap();
        assert_eq!(g.shape().unwrap().abelian().unwrap().factors(), &[4]);
        assert!(matches!(MatrixSubgroup::generated(3, &s, 5), Err(Error::CapExceeded { .. })));
    }
}
