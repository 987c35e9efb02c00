//! The extended quotient `T//W = T̃/W`, `T̃ = {(w, t) : w t = t}`.
//!
//! Over a single orbit `W t` the fiber is the set of conjugacy classes of
//! `W(t)`. Globally `T̃/W` splits over conjugacy classes `[w]` into pieces
//! `T^w / Z_W(w)`; each piece is summarized by `dim T^w`, `|π₀(T^w)|` and
//! `|Z_W(w)|`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::affine::{Alcove, AlcoveStabilizer};
use crate::error::{Error, Result};
use crate::exactmath::{smith_normal_form, IntMatrix, Rational};
use crate::rootsys::RootSystem;
use crate::torus::point::{coweight_residues, reflect_residues, Scaled};
use crate::torus::{fixing_elements, stabilizer_alcove, TorusPoint};
use crate::weyl::{conjugacy_classes, WeylGroup, WeylMatrix};

#[derive(Clone, Debug)]
pub struct ExtQuotFiber {
    pub orbit_representative: TorusPoint,
    pub stabilizer_order: u64,
    /// `|c(W(t))|`.
    pub class_count: u64,
}

/// Fiber of `T//W → T/W` over the orbit of `t`, from the alcove-method
/// stabilizer. Fails with `CapExceeded` only for a nonabelian stabilizer
/// larger than `cap`, whose classes would need enumeration.
pub fn fiber(rs: &RootSystem, alcove: &Alcove, h: &AlcoveStabilizer, t: &TorusPoint, cap: u64) -> Result<ExtQuotFiber> {
    let report = stabilizer_alcove(rs, alcove, h, t, cap)?;
    let class_count = report
        .shape
        .class_count()
        .ok_or(Error::CapExceeded { cap, needed: report.order })?;
    Ok(ExtQuotFiber { orbit_representative: t.clone(), stabilizer_order: report.order, class_count })
}

#[derive(Clone, Debug)]
pub struct ExtQuotComponent {
    pub class_rep: WeylMatrix,
    pub word: Vec<u8>,
    pub class_size: u64,
    /// `dim ker(w - 1)` on `t`.
    pub fixed_dim: usize,
    /// Torsion order of `coker(I - w)` on `P∨`.
    pub fixed_pi0: u64,
    pub centralizer_order: u64,
    pub element_order: u64,
}

/// Matrix of `w` on coweight coordinates: `N_w = C^T M_w C^{-T}`, integral
/// because `W` preserves `P∨`.
pub fn coweight_action(rs: &RootSystem, w: &WeylMatrix) -> IntMatrix {
    let n = rs.rank();
    let columns: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            let e: Vec<Rational> = (0..n).map(|j| Rational::from_integer(BigInt::from((j == k) as i64))).collect();
            rs.to_coweight_coords(&w.apply(&rs.from_coweight_coords(&e)))
        })
        .collect();
    let data = (0..n)
        .flat_map(|r| {
            columns.iter().map(move |col| {
                assert!(col[r].is_integer(), "Weyl group element does not preserve the coweight lattice");
                col[r].to_integer()
            })
        })
        .collect::<Vec<_>>();
    IntMatrix::new(n, n, data).expect("square")
}

/// `(fixed_dim, fixed_pi0)` of `T^w`.
pub fn fixed_subtorus(rs: &RootSystem, w: &WeylMatrix) -> (usize, u64) {
    let n = rs.rank();
    let m = IntMatrix::identity(n).sub(&w.to_int_matrix()).expect("same shape");
    let fixed_dim = n - m.rank();
    let nw = coweight_action(rs, w);
    let cok = smith_normal_form(&IntMatrix::identity(n).sub(&nw).expect("same shape"));
    debug_assert_eq!(cok.free_rank, fixed_dim);
    (fixed_dim, cok.torsion_order().to_u64().expect("small"))
}

/// One entry per conjugacy class of `W`, in class order.
pub fn components(rs: &RootSystem, group: &WeylGroup) -> Vec<ExtQuotComponent> {
    conjugacy_classes(group)
        .into_iter()
        .map(|class| {
            let w = group.matrix(class.representative);
            let (fixed_dim, fixed_pi0) = fixed_subtorus(rs, &w);
            ExtQuotComponent {
                word: group.word(class.representative),
                class_size: class.size() as u64,
                fixed_dim,
                fixed_pi0,
                centralizer_order: group.len() as u64 / class.size() as u64,
                element_order: w.order(),
                class_rep: w,
            }
        })
        .collect()
}

/// Number of `W`-orbits on `{(w, t′) : t′ ∈ W t, w t′ = t′}`, by explicit
/// enumeration of the pairs. Fails if the pair set exceeds `cap`.
pub fn point_count_over_orbit(rs: &RootSystem, group: &WeylGroup, t: &TorusPoint, cap: u64) -> Result<u64> {
    if group.order() > cap {
        return Err(Error::CapExceeded { cap, needed: group.order() });
    }
    let n = rs.rank();
    let cartan = rs.cartan_entries();
    let start: Scaled<BigInt> = coweight_residues(t).expect("BigInt always fits");
    // orbit with transversal u_p (group indices), u_p t = p
    let mut index: HashMap<Scaled<BigInt>, u32> = HashMap::new();
    let mut points = vec![start.clone()];
    let mut transversal = vec![0usize];
    index.insert(start, 0);
    let gens: Vec<usize> = (0..n)
        .map(|i| group.index_of(&group.generators()[i]).expect("generators are elements"))
        .collect();
    let mut k = 0;
    while k < points.len() {
        for (i, &g) in gens.iter().enumerate() {
            let q = reflect_residues(&points[k], cartan, i);
            if !index.contains_key(&q) {
                index.insert(q.clone(), points.len() as u32);
                points.push(q);
                transversal.push(product(group, g, transversal[k]));
            }
        }
        k += 1;
    }
    let stabilizer = fixing_elements(rs, group, t);
    let mut pairs: HashSet<(u32, u32)> = HashSet::with_capacity(points.len() * stabilizer.len());
    for (p, &u) in transversal.iter().enumerate() {
        let u_inv = group.index_of(&group.matrix(u).inverse()).expect("closed");
        for &s in &stabilizer {
            let w = product(group, product(group, u, s), u_inv);
            pairs.insert((p as u32, w as u32));
        }
    }
    if pairs.len() as u64 != group.order() {
        return Err(Error::Consistency(format!(
            "{} pairs over the orbit, expected |W| = {}",
            pairs.len(),
            group.order()
        )));
    }
    let mut seen: HashSet<(u32, u32)> = HashSet::with_capacity(pairs.len());
    let mut scratch = vec![0i8; n * n];
    let mut orbits = 0u64;
    for &start in &pairs {
        if !seen.insert(start) {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        while let Some((p, w)) = stack.pop() {
            for i in 0..n {
                let q = index[&reflect_residues(&points[p as usize], cartan, i)];
                let v = group.conjugate_by_simple(w as usize, i, &mut scratch) as u32;
                if !pairs.contains(&(q, v)) {
                    return Err(Error::Consistency("pair set is not W-stable".into()));
                }
                if seen.insert((q, v)) {
                    stack.push((q, v));
                }
            }
        }
    }
    Ok(orbits)
}

fn product(group: &WeylGroup, a: usize, b: usize) -> usize {
    group.index_of(&group.matrix(a).mul(&group.matrix(b))).expect("closed")
}

/// Fixed points of `w` on the finite subgroup `(1/N)P∨/P∨`, by enumeration.
pub fn grid_fixed_points(rs: &RootSystem, w: &WeylMatrix, modulus: u64) -> u64 {
    let n = rs.rank();
    let nw = coweight_action(rs, w);
    let big_n = BigInt::from(modulus);
    let total = (modulus as u128).pow(n as u32);
    let mut count = 0;
    let mut y = vec![0u64; n];
    for _ in 0..total {
        let fixed = (0..n).all(|r| {
            let mut acc = -BigInt::from(y[r]);
            for c in 0..n {
                acc += nw.get(r, c) * BigInt::from(y[c]);
            }
            (acc % &big_n).is_zero()
        });
        if fixed {
            count += 1;
        }
        for v in y.iter_mut() {
            *v += 1;
            if *v < modulus {
                break;
            }
            *v = 0;
        }
    }
    count
}

/// Grid count predicted from the lattice invariants: `N^dim · Π gcd(N, d_i)`
/// over the invariant factors `d_i` of `coker(I - N_w)`.
pub fn grid_prediction(rs: &RootSystem, w: &WeylMatrix, modulus: u64) -> u64 {
    use num_integer::Integer;
    let n = rs.rank();
    let nw = coweight_action(rs, w);
    let cok = smith_normal_form(&IntMatrix::identity(n).sub(&nw).expect("same shape"));
    let torsion: u64 = cok
        .factors
        .iter()
        .map(|d| d.to_u64().expect("small").gcd(&modulus))
        .product();
    modulus.pow(cok.free_rank as u32) * torsion
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::fundamental_alcove;
    use crate::exactmath::rational::rat;
    use crate::rootsys::CartanType;
    use crate::torus::special_point;
    use crate::weyl::DEFAULT_CAP;

    fn setup(name: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build(name.parse::<CartanType>().unwrap());
        let g = WeylGroup::generate(&rs, DEFAULT_CAP).unwrap();
        (rs, g)
    }

    #[test]
    fn a1_components() {
        let (rs, g) = setup("A1");
        let c = components(&rs, &g);
        let summary: Vec<(usize, u64)> = c.iter().map(|x| (x.fixed_dim, x.fixed_pi0)).collect();
        assert_eq!(summary, vec![(1, 1), (0, 2)]);
    }

    #[test]
    fn a2_components() {
        let (rs, g) = setup("A2");
        let mut c: Vec<(u64, usize)> = components(&rs, &g).iter().map(|x| (x.class_size, x.fixed_dim)).collect();
        c.sort();
        assert_eq!(c, vec![(1, 2), (2, 0), (3, 1)]);
    }

    #[test]
    fn point_counts() {
        let (rs, g) = setup("A2");
        assert_eq!(point_count_over_orbit(&rs, &g, &special_point(&rs), DEFAULT_CAP).unwrap(), 3);
        assert_eq!(point_count_over_orbit(&rs, &g, &TorusPoint::identity(&rs), DEFAULT_CAP).unwrap(), 3);
        let generic = TorusPoint::from_coroot(&rs, &[rat(1, 7), rat(2, 11)]);
        assert_eq!(point_count_over_orbit(&rs, &g, &generic, DEFAULT_CAP).unwrap(), 1);
        let (a1, g1) = setup("A1");
        assert_eq!(point_count_over_orbit(&a1, &g1, &special_point(&a1), DEFAULT_CAP).unwrap(), 2);
    }

    #[test]
    fn fibers() {
        let rs = RootSystem::build("A2".parse::<CartanType>().unwrap());
        let a = fundamental_alcove(&rs);
        let h = AlcoveStabilizer::build(&rs, &a).unwrap();
        assert_eq!(fiber(&rs, &a, &h, &special_point(&rs), DEFAULT_CAP).unwrap().class_count, 3);
        assert_eq!(fiber(&rs, &a, &h, &TorusPoint::identity(&rs), DEFAULT_CAP).unwrap().class_count, 3);
    }

    #[test]
    fn grid_matches_prediction() {
        for name in ["A1", "A2", "G2"] {
            let (rs, g) = setup(name);
            for c in components(&rs, &g) {
                for modulus in [12, 60] {
                    assert_eq!(grid_fixed_points(&rs, &c.class_rep, modulus), grid_prediction(&rs, &c.class_rep, modulus));
                }
            }
        }
    }
}
