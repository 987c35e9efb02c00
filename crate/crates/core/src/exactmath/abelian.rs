use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::matrix::IntMatrix;
use super::snf::{smith_normal_form, InvariantFactors};
use crate::error::{Error, Result};

/// Finite abelian group `Z/d_1 x ... x Z/d_r` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        let chain = factors.iter().all(|&d| d > 1) && factors.windows(2).all(|w| w[1] % w[0] == 0);
        if !chain {
            return Err(Error::BadInvariantFactors(factors));
        }
        Ok(Self { factors })
    }

    pub fn trivial() -> Self {
        Self { factors: vec![] }
    }

    /// Normalizes an arbitrary product of cyclic groups.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        if orders.is_empty() {
            return Self::trivial();
        }
        let n = orders.len();
        let mut data = vec![BigInt::from(0); n * n];
        for (i, &d) in orders.iter().enumerate() {
            data[i * n + i] = BigInt::from(d);
        }
        let m = IntMatrix::new(n, n, data).expect("square");
        Self::try_from(&smith_normal_form(&m)).expect("finite")
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// All elements as coordinate tuples, lexicographic order, identity first.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |k| {
                        let mut e = prefix.clone();
                        e.push(k);
                        e
                    })
                })
                .collect();
        }
        out
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.factors.iter().zip(a.iter().zip(b)).map(|(&d, (x, y))| (x + y) % d).collect()
    }

    /// Structure of a finite group given by its multiplication on indices
    /// `0..size`. Fails with `NonAbelian` if the operation does not commute.
    ///
    /// The invariant factors are recovered from the counts
    /// `#{g : g^(p^k) = 1}`, one prime at a time.
    pub fn from_operation(size: usize, identity: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        for a in 0..size {
            for b in a + 1..size {
                if op(a, b) != op(b, a) {
                    return Err(Error::NonAbelian);
                }
            }
        }
        let power = |g: usize, mut e: u64| {
            let mut acc = identity;
            let mut base = g;
            while e > 0 {
                if e & 1 == 1 {
                    acc = op(acc, base);
                }
                base = op(base, base);
                e >>= 1;
            }
            acc
        };
        let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for p in prime_factors(size as u64) {
            let mut counts = vec![1u64];
            let mut pk = 1u64;
            loop {
                pk *= p;
                let c = (0..size).filter(|&g| power(g, pk) == identity).count() as u64;
                counts.push(c);
                if c == counts[counts.len() - 2] {
                    break;
                }
            }
            // counts[k] = p^(sum_i min(k, e_i)); successive ratios give #{i : e_i >= k}.
            let at_least: Vec<u32> = counts.windows(2).map(|w| ilog(w[1] / w[0], p)).collect();
            let mut es = Vec::new();
            for k in 0..at_least.len() {
                let next = at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(at_least[k] - next) {
                    es.push(k as u32 + 1);
                }
            }
            es.sort_unstable_by(|a, b| b.cmp(a));
            exponents.insert(p, es);
        }
        let width = exponents.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; width];
        for (p, es) in &exponents {
            for (j, e) in es.iter().enumerate() {
                factors[j] *= p.pow(*e);
            }
        }
        factors.reverse();
        let group = Self::new(factors)?;
        if group.order() != size as u64 {
            return Err(Error::Consistency(format!(
                "structure {group} has order {} but the operation has {size} elements",
                group.order()
            )));
        }
        Ok(group)
    }
}

fn ilog(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl TryFrom<&InvariantFactors> for FiniteAbelianGroup {
    type Error = Error;

    fn try_from(f: &InvariantFactors) -> Result<Self> {
        if f.free_rank != 0 {
            return Err(Error::Consistency(format!("cokernel has free rank {}", f.free_rank)));
        }
        let factors = f
            .factors
            .iter()
            .map(|d| d.to_u64().ok_or_else(|| Error::Consistency(format!("factor {d} too large"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        f.write_str(&parts.join(" × "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_broken_chain() {
        assert!(FiniteAbelianGroup::new(vec![2, 3]).is_err());
        assert!(FiniteAbelianGroup::new(vec![1]).is_err());
        assert!(FiniteAbelianGroup::new(vec![2, 4]).is_ok());
    }

    #[test]
    fn cyclic_normalization() {
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(&[2, 3]).factors(), &[6]);
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(&[2, 2, 1]).factors(), &[2, 2]);
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(&[4, 6]).factors(), &[2, 12]);
        assert!(FiniteAbelianGroup::from_cyclic_orders(&[]).is_trivial());
    }

    #[test]
    fn structure_from_operation() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let elems = g.elements();
        assert_eq!(elems.len(), 8);
        let index = |e: &Vec<u64>| elems.iter().position(|x| x == e).unwrap();
        let recovered =
            FiniteAbelianGroup::from_operation(8, 0, |a, b| index(&g.add(&elems[a], &elems[b]))).unwrap();
        assert_eq!(recovered, g);

        let z12 = FiniteAbelianGroup::from_operation(12, 0, |a, b| (a + b) % 12).unwrap();
        assert_eq!(z12.factors(), &[12]);
        let trivial = FiniteAbelianGroup::from_operation(1, 0, |_, _| 0).unwrap();
        assert!(trivial.is_trivial());
    }

    #[test]
    fn detects_nonabelian() {
        // S3 as permutations of {0,1,2}.
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let op = |a: usize, b: usize| {
            let c = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
            perms.iter().position(|p| *p == c).unwrap()
        };
        assert_eq!(FiniteAbelianGroup::from_operation(6, 0, op), Err(Error::NonAbelian));
    }

    #[test]
    fn display() {
        assert_eq!(FiniteAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FiniteAbelianGroup::new(vec![2, 2]).unwrap().to_string(), "Z/2 × Z/2");
    }
}
