use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::affine::AlcoveStabilizer;
use crate::error::{Error, Result};
use crate::exactmath::rational::frac;
use crate::exactmath::{FiniteAbelianGroup, Rational};
use crate::finite::GroupShape;

/// A character `ρ` of a finite abelian group, `ρ(g) = exp(2πi · values[g])`,
/// with `values[g] ∈ [0, 1)` and elements indexed as in
/// [`FiniteAbelianGroup::elements`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    /// Dual coordinates `c` with `ρ(g) = Σ_j c_j g_j / d_j`.
    pub dual: Vec<u64>,
    pub values: Vec<Rational>,
}

/// All `|H|` characters, trivial character first.
pub fn character_table(h: &FiniteAbelianGroup) -> Vec<Character> {
    let elements = h.elements();
    elements
        .iter()
        .map(|c| Character { dual: c.clone(), values: elements.iter().map(|g| evaluate(h, c, g)).collect() })
        .collect()
}

/// Character table for a group given only by shape; nonabelian input fails.
pub fn character_table_of(shape: &GroupShape) -> Result<Vec<Character>> {
    shape.abelian().map(character_table).ok_or(Error::NonAbelian)
}

fn evaluate(h: &FiniteAbelianGroup, dual: &[u64], g: &[u64]) -> Rational {
    let sum = h
        .factors()
        .iter()
        .zip(dual.iter().zip(g))
        .fold(Rational::zero(), |acc, (&d, (&c, &x))| {
            acc + Rational::new(BigInt::from(c * x), BigInt::from(d))
        });
    frac(&sum)
}

/// `ρ(a + b) = ρ(a) + ρ(b)` for all pairs, with `+` read off `op` on indices.
pub fn is_multiplicative(chi: &Character, op: impl Fn(usize, usize) -> usize) -> bool {
    let n = chi.values.len();
    (0..n).all(|a| (0..n).all(|b| chi.values[op(a, b)] == frac(&(&chi.values[a] + &chi.values[b]))))
}

/// `Σ_g ρ_i(g) ρ_j(g)^{-1}` decided exactly: returns `|H|` when all phases
/// vanish, `0` when the sum is a vanishing sum of roots of unity, and `None`
/// otherwise.
pub fn inner_product(a: &Character, b: &Character) -> Option<u64> {
    let phases: Vec<Rational> = a.values.iter().zip(&b.values).map(|(x, y)| frac(&(x - y))).collect();
    if phases.iter().all(Zero::is_zero) {
        return Some(phases.len() as u64);
    }
    let m = phases
        .iter()
        .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()))
        .to_usize()
        .expect("small");
    // P(x) = Σ x^{k_g}; the sum is P(ζ_m), which vanishes iff Φ_m | P.
    let mut poly = vec![0i64; m];
    for q in &phases {
        let k = (q.numer() * BigInt::from(m) / q.denom()).to_usize().expect("in range");
        poly[k] += 1;
    }
    if divides(&cyclotomic(m), &poly) {
        Some(0)
    } else {
        None
    }
}

/// `Φ_m` as coefficients, lowest degree first.
pub fn cyclotomic(m: usize) -> Vec<i64> {
    // x^m - 1 divided by every Φ_d, d | m, d < m
    let mut p = vec![0i64; m + 1];
    p[0] = -1;
    p[m] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        p = quotient(&p, &cyclotomic(d)).expect("Φ_d divides x^m - 1");
    }
    p
}

/// Exact quotient of monic-divisor long division, `None` if the remainder is nonzero.
fn quotient(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let mut r = trim(num.to_vec());
    let den = trim(den.to_vec());
    let dd = den.len() - 1;
    assert_eq!(den[dd].abs(), 1, "divisor must be monic up to sign");
    if r.len() < den.len() {
        return if r.iter().all(|&c| c == 0) { Some(vec![0]) } else { None };
    }
    let mut q = vec![0i64; r.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd] * den[dd];
        q[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            r[k + j] -= c * dj;
        }
    }
    r.iter().all(|&c| c == 0).then_some(q)
}

fn divides(den: &[i64], num: &[i64]) -> bool {
    quotient(num, den).is_some()
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Characters of the concrete group `H_A`, evaluated at `h_k` through its
/// coset label and checked against the composition table of the affine maps.
pub fn alcove_characters(h: &AlcoveStabilizer) -> Result<Vec<Character>> {
    let table = character_table(&h.fundamental);
    let group_elements = h.fundamental.elements();
    let position = |label: &Vec<u64>| group_elements.iter().position(|g| g == label).expect("label in group");
    let order: Vec<usize> = h.labels.iter().map(position).collect();
    let mut out = Vec::with_capacity(table.len());
    for chi in table {
        let values: Vec<Rational> = order.iter().map(|&i| chi.values[i].clone()).collect();
        let concrete = Character { dual: chi.dual, values };
        if !is_multiplicative(&concrete, |a, b| h.product(a, b)) {
            return Err(Error::Consistency(format!("character {:?} is not multiplicative on H_A", concrete.dual)));
        }
        out.push(concrete);
    }
    Ok(out)
}
