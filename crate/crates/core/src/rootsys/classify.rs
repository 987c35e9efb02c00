//! Recognizes the finite type of a (possibly disconnected) Cartan matrix.
//!
//! Used for the reflection subgroups generated by walls of the alcove, whose
//! Cartan matrices are principal submatrices of the extended Cartan matrix.

use super::{CartanType, Series};

/// Splits the index set into connected components of the Dynkin diagram.
pub fn components(c: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && c[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Finite types of the components, or `None` if some component is not of
/// finite type (or is not recognized).
pub fn classify(c: &[Vec<i64>]) -> Option<Vec<CartanType>> {
    components(c).iter().map(|comp| classify_connected(c, comp)).collect()
}

/// Product of the Weyl group orders of the components.
pub fn weyl_order_of(c: &[Vec<i64>]) -> Option<u128> {
    Some(classify(c)?.iter().map(CartanType::weyl_order).product())
}

fn classify_connected(c: &[Vec<i64>], comp: &[usize]) -> Option<CartanType> {
    let r = comp.len();
    if r == 1 {
        return CartanType::new(Series::A, 1).ok();
    }
    let mut degree = vec![0usize; r];
    let mut edges = 0;
    let mut multi: Vec<(usize, usize, i64)> = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let (i, j) = (comp[a], comp[b]);
            let bond = c[i][j] * c[j][i];
            if bond == 0 {
                continue;
            }
            edges += 1;
            degree[a] += 1;
            degree[b] += 1;
            if bond > 1 {
                multi.push((a, b, bond));
            }
        }
    }
    // connected and a tree
    if edges != r - 1 {
        return None;
    }
    match multi.as_slice() {
        [] => {}
        [(_, _, 3)] if r == 2 => return CartanType::new(Series::G, 2).ok(),
        [(a, b, 2)] => {
            if degree.iter().any(|&d| d > 2) {
                return None;
            }
            let ends = degree[*a] == 1 || degree[*b] == 1;
            if r == 4 && !ends {
                return CartanType::new(Series::F, 4).ok();
            }
            return if ends || r == 2 { CartanType::new(Series::B, r).ok() } else { None };
        }
        _ => return None,
    }
    let branch: Vec<usize> = (0..r).filter(|&a| degree[a] >= 3).collect();
    match branch.as_slice() {
        [] => CartanType::new(Series::A, r).ok(),
        [center] if degree[*center] == 3 => {
            // arm lengths from the branch node
            let mut arms = Vec::new();
            for start in (0..r).filter(|&b| c[comp[*center]][comp[b]] != 0 && b != *center) {
                let mut len = 1;
                let (mut prev, mut cur) = (*center, start);
                loop {
                    let next = (0..r).find(|&b| b != prev && b != cur && c[comp[cur]][comp[b]] != 0);
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => CartanType::new(Series::D, k + 3).ok(),
                [1, 2, 2] => CartanType::new(Series::E, 6).ok(),
                [1, 2, 3] => CartanType::new(Series::E, 7).ok(),
                [1, 2, 4] => CartanType::new(Series::E, 8).ok(),
                _ => None,
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    #[test]
    fn recognizes_every_type() {
        for t in CartanType::all_up_to(8) {
            let r = RootSystem::build(t);
            let found = classify(r.cartan_entries()).unwrap();
            assert_eq!(found.len(), 1);
            let got = found[0];
            // B/C share a diagram up to arrow direction; the Weyl group is the same.
            let expected = match t.series() {
                Series::C => CartanType::new(Series::B, t.rank()).unwrap(),
                Series::D if t.rank() == 3 => CartanType::new(Series::A, 3).unwrap(),
                _ => t,
            };
            assert_eq!(got, expected, "{t}");
            assert_eq!(weyl_order_of(r.cartan_entries()), Some(t.weyl_order()));
        }
    }

    #[test]
    fn disconnected_and_affine() {
        let two_a1 = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(weyl_order_of(&two_a1), Some(4));
        // affine A2: a triangle, not of finite type
        let tri = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(classify(&tri), None);
    }
}
