//! Small finite-group utilities shared by the Weyl-side and alcove-side
//! stabilizer computations: closure from generators, greedy generating sets,
//! commutativity, invariant factors and class counts.

use hashbrown::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::exactmath::FiniteAbelianGroup;

pub trait GroupElement: Clone + Eq + Hash {
    fn compose(&self, other: &Self) -> Self;
    fn identity_like(&self) -> Self;
}

/// Subgroup grown one generator at a time; elements kept in discovery order.
#[derive(Clone, Debug)]
pub struct SubgroupBuilder<E: GroupElement> {
    generators: Vec<E>,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    cap: u64,
}

impl<E: GroupElement> SubgroupBuilder<E> {
    pub fn new(identity: E, cap: u64) -> Self {
        let mut index = HashMap::new();
        index.insert(identity.clone(), 0);
        Self { generators: Vec::new(), elements: vec![identity], index, cap }
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }

    /// Adds `g` unless already present; returns whether the group grew.
    pub fn add_generator(&mut self, g: E) -> Result<bool> {
        if self.contains(&g) {
            return Ok(false);
        }
        self.generators.push(g);
        let mut k = 0;
        while k < self.elements.len() {
            for gi in 0..self.generators.len() {
                let p = self.elements[k].compose(&self.generators[gi]);
                if !self.index.contains_key(&p) {
                    if self.elements.len() as u64 >= self.cap {
                        return Err(Error::CapExceeded { cap: self.cap, needed: self.cap + 1 });
                    }
                    self.index.insert(p.clone(), self.elements.len());
                    self.elements.push(p);
                }
            }
            k += 1;
        }
        Ok(true)
    }
}

pub fn closure<E: GroupElement>(identity: E, generators: &[E], cap: u64) -> Result<SubgroupBuilder<E>> {
    let mut b = SubgroupBuilder::new(identity, cap);
    for g in generators {
        b.add_generator(g.clone())?;
    }
    Ok(b)
}

/// Order, commutativity and either the invariant factors or the class count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupShape {
    Abelian(FiniteAbelianGroup),
    NonAbelian { order: u64, class_count: Option<u64> },
}

impl GroupShape {
    pub fn order(&self) -> u64 {
        match self {
            GroupShape::Abelian(g) => g.order(),
            GroupShape::NonAbelian { order, .. } => *order,
        }
    }

    pub fn class_count(&self) -> Option<u64> {
        match self {
            GroupShape::Abelian(g) => Some(g.order()),
            GroupShape::NonAbelian { class_count, .. } => *class_count,
        }
    }

    pub fn abelian(&self) -> Option<&FiniteAbelianGroup> {
        match self {
            GroupShape::Abelian(g) => Some(g),
            GroupShape::NonAbelian { .. } => None,
        }
    }
}

/// Shape of the group whose full element list is `elements` (identity
/// included) and which is generated by `generators`.
pub fn shape_of<E: GroupElement>(elements: &[E], generators: &[E]) -> Result<GroupShape> {
    let index: HashMap<&E, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let lookup = |e: &E| {
        index
            .get(e)
            .copied()
            .ok_or_else(|| Error::Consistency("element list is not closed".into()))
    };
    let commute = generators
        .iter()
        .enumerate()
        .all(|(i, a)| generators[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)));
    if commute {
        let identity = elements
            .iter()
            .position(|e| *e == e.identity_like())
            .ok_or_else(|| Error::Consistency("identity missing".into()))?;
        let mut table = vec![0usize; elements.len() * elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * elements.len() + j] = lookup(&a.compose(b))?;
            }
        }
        let n = elements.len();
        let g = FiniteAbelianGroup::from_operation(n, identity, |a, b| table[a * n + b])?;
        return Ok(GroupShape::Abelian(g));
    }
    let mut class_of = vec![usize::MAX; elements.len()];
    let inverses: Vec<E> = generators.iter().map(inverse_of).collect();
    let mut classes = 0u64;
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        class_of[start] = start;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for (g, gi) in generators.iter().zip(&inverses) {
                let y = lookup(&g.compose(&elements[x]).compose(gi))?;
                if class_of[y] == usize::MAX {
                    class_of[y] = start;
                    stack.push(y);
                }
            }
        }
        classes += 1;
    }
    Ok(GroupShape::NonAbelian { order: elements.len() as u64, class_count: Some(classes) })
}

/// Greedy generating set drawn from `elements` in order.
pub fn greedy_generators<E: GroupElement>(elements: &[E], cap: u64) -> Result<Vec<E>> {
    let Some(first) = elements.first() else {
        return Ok(vec![]);
    };
    let mut b = SubgroupBuilder::new(first.identity_like(), cap);
    for e in elements {
        if b.order() == elements.len() {
            break;
        }
        b.add_generator(e.clone())?;
    }
    if b.order() != elements.len() {
        return Err(Error::Consistency(format!(
            "elements generate a group of order {} but {} were given",
            b.order(),
            elements.len()
        )));
    }
    Ok(b.generators().to_vec())
}

fn inverse_of<E: GroupElement>(g: &E) -> E {
    let id = g.identity_like();
    let mut prev = id.clone();
    let mut cur = g.clone();
    while cur != id {
        prev = cur.clone();
        cur = cur.compose(g);
    }
    prev
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, PartialEq, Eq, Hash, Debug)]
    struct Perm(Vec<usize>);

    impl GroupElement for Perm {
        fn compose(&self, other: &Self) -> Self {
            Perm(other.0.iter().map(|&i| self.0[i]).collect())
        }
        fn identity_like(&self) -> Self {
            Perm((0..self.0.len()).collect())
        }
    }

    #[test]
    fn symmetric_group_shape() {
        let id = Perm(vec![0, 1, 2, 3]);
        let gens = [Perm(vec![1, 0, 2, 3]), Perm(vec![1, 2, 3, 0])];
        let g = closure(id, &gens, 100).unwrap();
        assert_eq!(g.order(), 24);
        let shape = shape_of(g.elements(), g.generators()).unwrap();
        assert_eq!(shape, GroupShape::NonAbelian { order: 24, class_count: Some(5) });
        let greedy = greedy_generators(g.elements(), 100).unwrap();
        assert!(greedy.len() <= 4);
    }

    #[test]
    fn klein_four_shape() {
        let id = Perm(vec![0, 1, 2, 3]);
        let gens = [Perm(vec![1, 0, 3, 2]), Perm(vec![2, 3, 0, 1])];
        let g = closure(id, &gens, 100).unwrap();
        let shape = shape_of(g.elements(), g.generators()).unwrap();
        assert_eq!(shape.abelian().unwrap().factors(), &[2, 2]);
        assert_eq!(shape.class_count(), Some(4));
    }

    #[test]
    fn cap_applies() {
        let id = Perm(vec![0, 1, 2, 3]);
        let gens = [Perm(vec![1, 0, 2, 3]), Perm(vec![1, 2, 3, 0])];
        assert!(matches!(closure(id, &gens, 10), Err(Error::CapExceeded { .. })));
    }
}
