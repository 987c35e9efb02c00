//! End-to-end runs through the public API on small types.

use connidx::affine::{fundamental_alcove, AlcoveStabilizer};
use connidx::exactmath::rational::rat;
use connidx::extquot::{components, fiber};
use connidx::ktheory::k_groups_spherical;
use connidx::rootsys::{CartanType, RootSystem};
use connidx::suite::{run_type, Status, SuiteConfig};
use connidx::torus::{special_point, stabilizer_alcove, stabilizer_direct, TorusPoint};
use connidx::weyl::{WeylGroup, DEFAULT_CAP};
use connidx::Error;

fn rs(name: &str) -> RootSystem {
    RootSystem::build(name.parse::<CartanType>().unwrap())
}

#[test]
fn sl3_walkthrough() {
    let a2 = rs("A2");
    let alcove = fundamental_alcove(&a2);
    let h = AlcoveStabilizer::build(&a2, &alcove).unwrap();
    assert_eq!(h.fundamental.factors(), &[3]);
    let t0 = special_point(&a2);
    assert_eq!(t0.coords(), &[rat(1, 3), rat(1, 3)]);
    let g = WeylGroup::generate(&a2, DEFAULT_CAP).unwrap();
    let direct = stabilizer_direct(&a2, &g, &t0, DEFAULT_CAP).unwrap();
    let via_alcove = stabilizer_alcove(&a2, &alcove, &h, &t0, DEFAULT_CAP).unwrap();
    assert_eq!(direct.order, 3);
    assert_eq!(direct.shape, via_alcove.shape);
    assert_eq!(fiber(&a2, &alcove, &h, &t0, DEFAULT_CAP).unwrap().class_count, 3);
    assert_eq!(components(&a2, &g).len(), 3);
    assert_eq!(k_groups_spherical(&a2).unwrap().k0_rank, 3);
}

#[test]
fn identity_has_full_stabilizer() {
    let b3 = rs("B3");
    let alcove = fundamental_alcove(&b3);
    let h = AlcoveStabilizer::build(&b3, &alcove).unwrap();
    let s = stabilizer_alcove(&b3, &alcove, &h, &TorusPoint::identity(&b3), DEFAULT_CAP).unwrap();
    assert_eq!(s.order, 48);
    assert_eq!(s.shape.class_count(), Some(10));
}

#[test]
fn aliases_and_invalid_ranks() {
    assert_eq!("C2".parse::<CartanType>().unwrap().canonical().to_string(), "B2");
    assert_eq!("D3".parse::<CartanType>().unwrap().canonical().to_string(), "A3");
    assert!(matches!("A0".parse::<CartanType>(), Err(Error::InvalidRank { .. })));
    assert!(matches!("E9".parse::<CartanType>(), Err(Error::InvalidRank { .. })));
    assert!(matches!("X2".parse::<CartanType>(), Err(Error::UnknownSeries(_))));
}

#[test]
fn suite_on_small_types_is_green() {
    let config = SuiteConfig::default();
    for name in ["A1", "G2", "D4"] {
        let suite = run_type(name.parse().unwrap(), &config);
        assert!(suite.passed(), "{name}: {:?}", suite.checks.iter().find(|c| c.failed()));
        assert!(suite.checks.iter().all(|c| c.status == Status::Pass));
    }
}

#[test]
fn e8_direct_method_is_out_of_cap() {
    let e8 = rs("E8");
    assert!(matches!(WeylGroup::generate(&e8, DEFAULT_CAP), Err(Error::CapExceeded { .. })));
    let suite = run_type("E8".parse().unwrap(), &SuiteConfig::default());
    assert!(suite.passed());
    assert!(suite.checks.iter().any(|c| c.status == Status::Skipped));
}
