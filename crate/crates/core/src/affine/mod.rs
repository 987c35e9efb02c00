//! The affine Weyl group `W_a = Q∨ ⋊ W`, its extension `W′_a = P∨ ⋊ W`, the
//! fundamental alcove and its stabilizer `H_A`.

mod alcove;
mod map;
mod stabilizer;

pub use alcove::{fundamental_alcove, reduce_to_alcove, reduce_with_certificate, Alcove, Wall, WALK_LIMIT};
pub use map::AffineMap;
pub use stabilizer::AlcoveStabilizer;

use crate::rootsys::RootSystem;

/// Extended Cartan matrix indexed `0..=n`, with `α_0 = -θ` in position 0.
pub fn extended_cartan(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let b = rs.gram();
    let theta = rs.highest_root();
    // Gram matrix in the extended basis (α_0, α_1, ..., α_n).
    let mut g = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            g[i + 1][j + 1] = b[i][j];
        }
        let pair: i64 = (0..n).map(|k| theta[k] * b[k][i]).sum();
        g[0][i + 1] = -pair;
        g[i + 1][0] = -pair;
    }
    g[0][0] = (0..n).map(|i| (0..n).map(|j| theta[i] * b[i][j] * theta[j]).sum::<i64>()).sum();
    (0..=n).map(|i| (0..=n).map(|j| 2 * g[i][j] / g[i][i]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    #[test]
    fn extended_cartan_a2_is_a_triangle() {
        let rs = RootSystem::build("A2".parse::<CartanType>().unwrap());
        assert_eq!(extended_cartan(&rs), vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    }

    #[test]
    fn extended_cartan_null_vector() {
        // (1, a_1, ..., a_n) is a right null vector
        for t in CartanType::all_up_to(8) {
            let rs = RootSystem::build(t);
            let c = extended_cartan(&rs);
            let marks: Vec<i64> = std::iter::once(1).chain(rs.marks().iter().copied()).collect();
            for row in &c {
                assert_eq!(row.iter().zip(&marks).map(|(a, m)| a * m).sum::<i64>(), 0, "{t}");
            }
        }
    }
}
