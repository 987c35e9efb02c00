use connidx::affine::{fundamental_alcove, reduce_to_alcove, AffineMap, AlcoveStabilizer, Wall};
use connidx::exactmath::{smith_decomposition, IntMatrix, Rational};
use connidx::rootsys::{CartanType, RootSystem};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-9i64..=9, r * c)))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-120i64..=120, 1i64..=60).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn root_system() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(vec!["A1", "A3", "B2", "C3", "D4", "G2", "F4", "E6"])
        .prop_map(|name| RootSystem::build(name.parse::<CartanType>().unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_divisibility_chain_and_factors_the_matrix((r, c, data) in small_matrix()) {
        let m = IntMatrix::new(r, c, data.into_iter().map(BigInt::from).collect()).unwrap();
        let s = smith_decomposition(&m);
        let nonzero: Vec<&BigInt> = s.diagonal.iter().filter(|d| !d.is_zero()).collect();
        for w in nonzero.windows(2) {
            prop_assert!((w[1] % w[0]).is_zero());
        }
        let d = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        for i in 0..r {
            for j in 0..c {
                let expected = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j), &expected);
            }
        }
        let id = s.left.mul(&s.left_inverse).unwrap();
        prop_assert_eq!(id, IntMatrix::identity(r));
    }

    #[test]
    fn cartan_solve_round_trips(rs in root_system(), seed in prop::collection::vec(rational(), 8)) {
        let b: Vec<Rational> = seed.into_iter().take(rs.rank()).collect();
        let x = rs.cartan().solve_rational(&b).unwrap();
        prop_assert_eq!(rs.cartan().apply(&x).unwrap(), b);
    }

    #[test]
    fn retraction_commutes_with_h_a(rs in root_system(), weights in prop::collection::vec(0i64..=20, 9), k in 0usize..8, s in 0i64..=60) {
        let a = fundamental_alcove(&rs);
        let h = AlcoveStabilizer::build(&rs, &a).unwrap();
        let w: Vec<i64> = weights.into_iter().take(a.vertices.len()).collect();
        let total: i64 = w.iter().sum::<i64>().max(1);
        let mut t: Vec<Rational> = w.iter().map(|&x| Rational::new(x.into(), total.into())).collect();
        if w.iter().all(|&x| x == 0) {
            t[0] = Rational::one();
        }
        let x = a.from_barycentric(&t);
        let hk = &h.elements[k % h.order()];
        let s = Rational::new(s.into(), 60.into());
        let lhs = a.retract(&hk.apply(&x), &s).unwrap();
        let rhs = hk.apply(&a.retract(&x, &s).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_is_affine_weyl_invariant(rs in root_system(), coords in prop::collection::vec(rational(), 8), word in prop::collection::vec(0usize..9, 0..16)) {
        let x: Vec<Rational> = coords.into_iter().take(rs.rank()).collect();
        let walls: Vec<AffineMap> = Wall::all(&rs).iter().map(|w| w.reflection(&rs)).collect();
        let w = word.iter().fold(AffineMap::identity(rs.rank()), |acc, &i| walls[i % walls.len()].compose(&acc));
        let (y, cert) = reduce_to_alcove(&rs, &x);
        prop_assert!(fundamental_alcove(&rs).contains_closed(&y));
        prop_assert_eq!(cert.apply(&x), y.clone());
        prop_assert_eq!(reduce_to_alcove(&rs, &w.apply(&x)).0, y);
    }
}
