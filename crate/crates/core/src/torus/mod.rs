//! The maximal torus `T = t/P∨`, stabilizers `W(t)` of its points, and the
//! special point `t₀ = exp(x₀)` at the alcove barycenter.

pub(crate) mod point;
mod sample;

use num_bigint::BigInt;

pub use point::TorusPoint;
pub use sample::{sample_points, PointSampler};

use crate::affine::{extended_cartan, fundamental_alcove, reduce_to_alcove, Alcove, AffineMap, AlcoveStabilizer, Wall};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::finite::{greedy_generators, shape_of, GroupShape};
use crate::rootsys::classify::weyl_order_of;
use crate::rootsys::{LatticeName, RootSystem};
use crate::weyl::{conjugacy_classes, simple_reflections, MatrixSubgroup, WeylGroup, WeylMatrix};
use point::{fixes_scaled, Residue, Scaled};

/// `t₀ = exp(x₀)`, `x₀` the barycenter of the fundamental alcove.
pub fn special_point(rs: &RootSystem) -> TorusPoint {
    TorusPoint::from_coroot(rs, &fundamental_alcove(rs).barycenter)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerMethod {
    /// Scan of the enumerated Weyl group.
    Direct,
    /// Walls of the alcove through the point plus the fixed part of `H_A`.
    Alcove,
}

impl StabilizerMethod {
    pub fn name(&self) -> &'static str {
        match self {
            StabilizerMethod::Direct => "direct",
            StabilizerMethod::Alcove => "alcove",
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerReport {
    pub point: TorusPoint,
    pub order: u64,
    pub shape: GroupShape,
    pub method: StabilizerMethod,
}

/// Indices of the elements of `group` fixing `t`.
pub fn fixing_elements(rs: &RootSystem, group: &WeylGroup, t: &TorusPoint) -> Vec<usize> {
    if let Some(x) = Scaled::<i64>::from_rationals(t.coords()) {
        return scan(rs, group, &x);
    }
    if let Some(x) = Scaled::<i128>::from_rationals(t.coords()) {
        return scan(rs, group, &x);
    }
    scan(rs, group, &Scaled::<BigInt>::from_rationals(t.coords()).expect("BigInt always fits"))
}

fn scan<T: Residue>(rs: &RootSystem, group: &WeylGroup, x: &Scaled<T>) -> Vec<usize> {
    let n = rs.rank();
    let mut diff = vec![T::from(0); n];
    group
        .iter()
        .enumerate()
        .filter(|(_, m)| fixes_scaled(m, n, rs.cartan_entries(), x, &mut diff))
        .map(|(i, _)| i)
        .collect()
}

/// `W(t)` by scanning every element of `W`.
pub fn stabilizer_direct(rs: &RootSystem, group: &WeylGroup, t: &TorusPoint, cap: u64) -> Result<StabilizerReport> {
    let idx = fixing_elements(rs, group, t);
    let elements: Vec<WeylMatrix> = idx.iter().map(|&i| group.matrix(i)).collect();
    let shape = if elements.len() == group.len() {
        let gens = simple_reflections(rs);
        let commute = gens.iter().all(|a| gens.iter().all(|b| a.mul(b) == b.mul(a)));
        if commute {
            shape_of(&elements, &gens)?
        } else {
            GroupShape::NonAbelian {
                order: elements.len() as u64,
                class_count: Some(conjugacy_classes(group).len() as u64),
            }
        }
    } else {
        let mut sub = MatrixSubgroup::trivial(rs.rank(), cap);
        for e in &elements {
            if sub.len() == elements.len() {
                break;
            }
            sub.add_generator(e)?;
        }
        if sub.len() != elements.len() {
            return Err(Error::Consistency("direct stabilizer is not a subgroup".into()));
        }
        sub.shape()?
    };
    Ok(StabilizerReport { point: t.clone(), order: elements.len() as u64, shape, method: StabilizerMethod::Direct })
}

/// Walls of the closed fundamental alcove through `x`, in extended indexing
/// (`0` is the affine wall, `i ≥ 1` the simple wall `α_i = 0`).
pub fn walls_through(alcove: &Alcove, x: &[Rational]) -> Vec<usize> {
    alcove
        .barycentric(x)
        .iter()
        .enumerate()
        .filter(|(_, t)| **t == Rational::from_integer(0.into()))
        .map(|(i, _)| i)
        .collect()
}

fn wall_of(index: usize) -> Wall {
    if index == 0 {
        Wall::Affine
    } else {
        Wall::Simple(index - 1)
    }
}

/// `W(t)` via `(W′_a)_x = (W_a)_x ⋊ (H_A)_x` for `x` the alcove representative
/// of `t`. The order comes from the type of the wall sub-diagram, so it never
/// needs enumeration; elements are enumerated (as linear parts) only when the
/// group is abelian or its order is within `cap`.
pub fn stabilizer_alcove(
    rs: &RootSystem,
    alcove: &Alcove,
    h: &AlcoveStabilizer,
    t: &TorusPoint,
    cap: u64,
) -> Result<StabilizerReport> {
    let (x, _) = reduce_to_alcove(rs, t.coords());
    let walls = walls_through(alcove, &x);
    let ext = extended_cartan(rs);
    let sub: Vec<Vec<i64>> = walls.iter().map(|&i| walls.iter().map(|&j| ext[i][j]).collect()).collect();
    let reflection_order = if sub.is_empty() {
        1
    } else {
        weyl_order_of(&sub).ok_or_else(|| Error::Consistency(format!("walls {walls:?} are not of finite type")))?
    };
    let fixed: Vec<AffineMap> = h.fixing(&x).into_iter().map(|k| h.elements[k].clone()).collect();
    let order = u64::try_from(reflection_order * fixed.len() as u128)
        .map_err(|_| Error::Consistency("stabilizer order overflows".into()))?;
    let mut gens: Vec<WeylMatrix> = walls.iter().map(|&i| wall_of(i).reflection(rs).linear).collect();
    gens.extend(greedy_generators(&fixed, cap)?.into_iter().map(|g| g.linear));
    let commute = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)));
    let shape = if commute || order <= cap {
        let group = MatrixSubgroup::generated(rs.rank(), &gens, cap)?;
        if group.len() as u64 != order {
            return Err(Error::Consistency(format!(
                "alcove stabilizer enumerates to {} elements, expected {order}",
                group.len()
            )));
        }
        group.shape()?
    } else {
        GroupShape::NonAbelian { order, class_count: None }
    };
    Ok(StabilizerReport { point: t.clone(), order, shape, method: StabilizerMethod::Alcove })
}

/// Outcome of checking that `w ↦ γ_w w` (`γ_w = x₀ - w x₀`) is an
/// isomorphism `W(t₀) → H_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// Every element of `H_A` has linear part fixing `t₀`.
    pub linear_parts_fix_t0: bool,
    /// No two elements of `H_A` share a linear part.
    pub linear_parts_distinct: bool,
    /// Direct side: `W(t₀)` enumerated, each `γ_w w` lies in `H_A`, the map is
    /// bijective and multiplicative. `None` if `W` was not enumerated.
    pub direct: Option<bool>,
    pub h_order: u64,
    pub w_t0_order: Option<u64>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.linear_parts_fix_t0 && self.linear_parts_distinct && self.direct != Some(false)
    }
}

pub fn verify_lemma(rs: &RootSystem, alcove: &Alcove, h: &AlcoveStabilizer, group: Option<&WeylGroup>) -> LemmaReport {
    let t0 = TorusPoint::from_coroot(rs, &alcove.barycenter);
    let linear_parts_fix_t0 = h.elements.iter().all(|e| t0.is_fixed_by(rs, &e.linear));
    let linear_parts_distinct = h
        .elements
        .iter()
        .map(|e| &e.linear)
        .collect::<std::collections::HashSet<_>>()
        .len()
        == h.order();
    let (direct, w_t0_order) = match group {
        None => (None, None),
        Some(g) => {
            let stab: Vec<WeylMatrix> = fixing_elements(rs, g, &t0).into_iter().map(|i| g.matrix(i)).collect();
            (Some(lemma_direct(rs, alcove, h, &stab)), Some(stab.len() as u64))
        }
    };
    LemmaReport { linear_parts_fix_t0, linear_parts_distinct, direct, h_order: h.order() as u64, w_t0_order }
}

fn lemma_direct(rs: &RootSystem, alcove: &Alcove, h: &AlcoveStabilizer, stab: &[WeylMatrix]) -> bool {
    let x0 = &alcove.barycenter;
    let image = |w: &WeylMatrix| -> Option<usize> {
        let gamma: Vec<Rational> = x0.iter().zip(w.apply(x0)).map(|(a, b)| a - b).collect();
        if !rs.in_coweight_lattice(&gamma) {
            return None;
        }
        h.index_of(&AffineMap { linear: w.clone(), translation: gamma, lattice: LatticeName::Coweight })
    };
    let Some(images) = stab.iter().map(image).collect::<Option<Vec<usize>>>() else {
        return false;
    };
    let mut hit = vec![false; h.order()];
    for &k in &images {
        if hit[k] {
            return false;
        }
        hit[k] = true;
    }
    if images.len() != h.order() {
        return false;
    }
    stab.iter().enumerate().all(|(a, wa)| {
        stab.iter()
            .enumerate()
            .all(|(b, wb)| image(&wa.mul(wb)) == Some(h.product(images[a], images[b])))
    })
}
