//! Invariant suites run per Cartan type. Each check records which invariant
//! it covers, the method that produced the value, and a witness on failure.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::{fundamental_alcove, reduce_to_alcove, Alcove, AffineMap, AlcoveStabilizer, Wall};
use crate::error::{Error, Result};
use crate::exactmath::rational::vec_to_strings;
use crate::exactmath::Rational;
use crate::extquot::{components, fiber, grid_fixed_points, grid_prediction, point_count_over_orbit};
use crate::ktheory::{alcove_characters, inner_product, k_groups_spherical};
use crate::rootsys::{tabulated_fundamental_group, CartanType, RootSystem};
use crate::torus::{
    special_point, stabilizer_alcove, stabilizer_direct, verify_lemma, PointSampler, TorusPoint,
};
use crate::weyl::{conjugacy_classes, coxeter_relations_hold, orbit_stabilizer, permutes_roots, WeylGroup, DEFAULT_CAP};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_rank: usize,
    /// Largest Weyl group enumerated, and largest nonabelian stabilizer whose
    /// classes are counted.
    pub cap: u64,
    pub seed: u64,
    /// Random torus points per type.
    pub samples: usize,
    /// Random triples per property check.
    pub property_trials: usize,
    /// Largest `|W|` for the explicit pair count over orbits.
    pub pair_cap: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { max_rank: 8, cap: DEFAULT_CAP, seed: 0, samples: 20, property_trials: 100, pair_cap: 100_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped (cap)",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    /// Invariant family, e.g. `"lemma"` or `"two-method"`.
    pub group: &'static str,
    pub name: String,
    pub method: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(group: &'static str, name: impl Into<String>, method: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Self { group, name: name.into(), method, status, detail: detail.into() }
    }

    fn skipped(group: &'static str, name: impl Into<String>, method: &'static str, detail: impl Into<String>) -> Self {
        Self { group, name: name.into(), method, status: Status::Skipped, detail: detail.into() }
    }

    fn from_result(group: &'static str, name: impl Into<String>, method: &'static str, r: Result<String>) -> Self {
        match r {
            Ok(detail) => Self::new(group, name, method, true, detail),
            Err(e) => Self::new(group, name, method, false, e.to_string()),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug)]
pub struct TypeSuite {
    pub cartan_type: CartanType,
    pub checks: Vec<Check>,
}

impl TypeSuite {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn in_group<'a>(&'a self, group: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.group == group)
    }
}

/// Everything needed for one type, built once.
pub struct Context {
    pub rs: RootSystem,
    pub alcove: Alcove,
    pub h: AlcoveStabilizer,
    pub group: Option<WeylGroup>,
    pub config: SuiteConfig,
}

impl Context {
    pub fn new(t: CartanType, config: &SuiteConfig) -> Result<Self> {
        let rs = RootSystem::build(t);
        let alcove = fundamental_alcove(&rs);
        let h = AlcoveStabilizer::build(&rs, &alcove)?;
        let group = match WeylGroup::generate(&rs, config.cap) {
            Ok(g) => Some(g),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(Self { rs, alcove, h, group, config: config.clone() })
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.config.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// `samples` uniform points, then half as many face points.
    pub fn samples(&self) -> Vec<TorusPoint> {
        let mut s = PointSampler::new(self.config.seed);
        let mut out: Vec<TorusPoint> = (0..self.config.samples).map(|_| s.uniform_point(&self.rs)).collect();
        out.extend((0..self.config.samples / 2).map(|_| s.face_point(&self.rs, &self.alcove)));
        out
    }

    pub fn generic_samples(&self) -> Vec<TorusPoint> {
        let mut s = PointSampler::new(self.config.seed);
        (0..self.config.samples).map(|_| s.generic_point(&self.rs, &self.alcove)).collect()
    }
}

pub fn run_type(t: CartanType, config: &SuiteConfig) -> TypeSuite {
    let ctx = match Context::new(t, config) {
        Ok(c) => c,
        Err(e) => {
            return TypeSuite { cartan_type: t, checks: vec![Check::new("setup", "build", "alcove", false, e.to_string())] }
        }
    };
    let mut checks = Vec::new();
    checks.extend(rootsys_checks(&ctx));
    checks.extend(weyl_checks(&ctx));
    checks.extend(alcove_checks(&ctx));
    checks.extend(lemma_checks(&ctx));
    checks.extend(two_method_checks(&ctx));
    checks.extend(extquot_checks(&ctx));
    checks.extend(ktheory_checks(&ctx));
    checks.extend(character_checks(&ctx));
    checks.extend(property_checks(&ctx));
    TypeSuite { cartan_type: t, checks }
}

pub fn run_all(config: &SuiteConfig) -> Vec<TypeSuite> {
    CartanType::all_up_to(config.max_rank).into_iter().map(|t| run_type(t, config)).collect()
}

pub fn rootsys_checks(ctx: &Context) -> Vec<Check> {
    let rs = &ctx.rs;
    let t = rs.cartan_type();
    let n = t.rank();
    let mut out = Vec::new();
    let expected: u64 = tabulated_fundamental_group(t).iter().product();
    let f = rs.connection_index();
    out.push(Check::new("connection-index", "f = |det C|", "determinant", f == expected, format!("f = {f}, table {expected}")));
    let pi1 = rs.fundamental_group();
    out.push(Check::new(
        "fundamental-group",
        "invariant factors of P∨/Q∨",
        "smith",
        pi1.factors() == tabulated_fundamental_group(t).as_slice() && pi1.order() == f,
        format!("{pi1}"),
    ));
    out.push(Check::new(
        "rootsys",
        "positive root count",
        "closure",
        rs.positive_roots().len() == t.positive_root_count(),
        format!("{}", rs.positive_roots().len()),
    ));
    let dual = (0..n).all(|i| {
        (0..n).all(|j| rs.eval_simple(j, &rs.fundamental_coweights()[i]) == Rational::from_integer(((i == j) as i64).into()))
    });
    out.push(Check::new("rootsys", "α_j(ω_i∨) = δ_ij", "inverse", dual, ""));
    let height = |r: &[i64]| r.iter().sum::<i64>();
    let top = rs.positive_roots().iter().map(|r| height(r)).max().unwrap_or(0);
    out.push(Check::new(
        "rootsys",
        "highest root has maximal height",
        "closure",
        height(rs.highest_root()) == top && rs.positive_roots().iter().filter(|r| height(r) == top).count() == 1,
        format!("{:?}", rs.marks()),
    ));
    out
}

pub fn weyl_checks(ctx: &Context) -> Vec<Check> {
    let rs = &ctx.rs;
    let mut out = vec![Check::new("weyl", "Coxeter relations", "matrix", coxeter_relations_hold(rs), "")];
    match &ctx.group {
        None => out.push(Check::skipped("weyl", "group order", "bfs", format!("|W| = {}", rs.cartan_type().weyl_order()))),
        Some(g) => {
            out.push(Check::new(
                "weyl",
                "group order",
                "bfs",
                g.order() as u128 == rs.cartan_type().weyl_order(),
                format!("{}", g.order()),
            ));
            let mut rng = ctx.rng(1);
            let ok = (0..20).all(|_| permutes_roots(rs, &g.matrix(rng.gen_range(0..g.len()))));
            out.push(Check::new("weyl", "elements permute roots", "bfs", ok, "20 random elements"));
        }
    }
    out
}

pub fn alcove_checks(ctx: &Context) -> Vec<Check> {
    let (rs, a, h) = (&ctx.rs, &ctx.alcove, &ctx.h);
    let f = rs.connection_index();
    let mut out = Vec::new();
    out.push(Check::new("alcove-stabilizer", "|H_A| = f", "alcove", h.order() as u64 == f, format!("{}", h.order())));
    out.push(Check::new(
        "alcove-stabilizer",
        "H_A ≅ P∨/Q∨",
        "cayley-table",
        h.structure == rs.fundamental_group(),
        format!("{}", h.structure),
    ));
    let fixes = h.elements.iter().all(|e| e.apply(&a.barycenter) == a.barycenter);
    out.push(Check::new("alcove-stabilizer", "H_A fixes x₀", "alcove", fixes, vec_to_strings(&a.barycenter).join(", ")));
    let perms: HashSet<&Vec<usize>> = h.vertex_permutations.iter().collect();
    out.push(Check::new(
        "alcove-stabilizer",
        "H_A acts faithfully on vertices",
        "alcove",
        perms.len() == h.order(),
        format!("{:?}", h.vertex_permutations),
    ));
    let interior = a.contains_open(&a.barycenter);
    out.push(Check::new("alcove-stabilizer", "barycenter interior", "barycentric", interior, ""));
    out
}

pub fn lemma_checks(ctx: &Context) -> Vec<Check> {
    let (rs, a, h) = (&ctx.rs, &ctx.alcove, &ctx.h);
    let t0 = special_point(rs);
    let mut out = Vec::new();
    out.push(Check::from_result(
        "lemma",
        "|W(t₀)| = f",
        "alcove",
        stabilizer_alcove(rs, a, h, &t0, ctx.config.cap).and_then(|s| {
            if s.order == rs.connection_index() && s.shape.abelian() == Some(&h.structure) {
                Ok(format!("{}", h.structure))
            } else {
                Err(Error::Consistency(format!("order {} shape {:?}", s.order, s.shape)))
            }
        }),
    ));
    let report = verify_lemma(rs, a, h, ctx.group.as_ref());
    out.push(Check::new(
        "lemma",
        "linear parts of H_A fix t₀ and are distinct",
        "alcove",
        report.linear_parts_fix_t0 && report.linear_parts_distinct,
        "",
    ));
    match &ctx.group {
        None => {
            out.push(Check::skipped("lemma", "w ↦ γw is an isomorphism W(t₀) → H_A", "direct", ""));
        }
        Some(g) => {
            out.push(Check::new(
                "lemma",
                "w ↦ γw is an isomorphism W(t₀) → H_A",
                "direct",
                report.direct == Some(true),
                format!("|W(t₀)| = {:?}", report.w_t0_order),
            ));
            out.push(Check::from_result(
                "lemma",
                "W(t₀) ≅ H_A",
                "direct",
                stabilizer_direct(rs, g, &t0, ctx.config.cap).and_then(|s| {
                    if s.shape.abelian() == Some(&h.structure) {
                        Ok(format!("{}", h.structure))
                    } else {
                        Err(Error::Consistency(format!("{:?}", s.shape)))
                    }
                }),
            ));
        }
    }
    out
}

pub fn two_method_checks(ctx: &Context) -> Vec<Check> {
    let (rs, a, h) = (&ctx.rs, &ctx.alcove, &ctx.h);
    let Some(g) = &ctx.group else {
        return vec![Check::skipped("two-method", "direct and alcove stabilizers agree", "direct", "")];
    };
    let mut out = Vec::new();
    let mut points = vec![special_point(rs), TorusPoint::identity(rs)];
    points.extend(ctx.samples());
    let shift = &rs.fundamental_coweights()[rs.rank() - 1];
    for p in points {
        let name = format!("at {}", vec_to_strings(p.coords()).join(","));
        let r = (|| {
            let d = stabilizer_direct(rs, g, &p, ctx.config.cap)?;
            let s = stabilizer_alcove(rs, a, h, &p, ctx.config.cap)?;
            let shifted: Vec<Rational> = p.coords().iter().zip(shift).map(|(x, y)| x + y).collect();
            let s2 = stabilizer_alcove(rs, a, h, &TorusPoint::from_coroot(rs, &shifted), ctx.config.cap)?;
            if d.order == s.order && d.shape == s.shape && s2.shape == s.shape {
                Ok(format!("order {}", d.order))
            } else {
                Err(Error::Consistency(format!("direct {:?} vs alcove {:?}", d.shape, s.shape)))
            }
        })();
        out.push(Check::from_result("two-method", name, "direct+alcove", r));
    }
    out
}

pub fn extquot_checks(ctx: &Context) -> Vec<Check> {
    let (rs, a, h) = (&ctx.rs, &ctx.alcove, &ctx.h);
    let cap = ctx.config.cap;
    let f = rs.connection_index();
    let t0 = special_point(rs);
    let mut out = Vec::new();
    out.push(Check::from_result(
        "extquot",
        "fiber over t₀ has f points",
        "alcove",
        fiber(rs, a, h, &t0, cap).and_then(|x| {
            if x.class_count == f {
                Ok(format!("{}", x.class_count))
            } else {
                Err(Error::Consistency(format!("{} classes", x.class_count)))
            }
        }),
    ));
    let generic = ctx.generic_samples();
    let generic_ok = generic.iter().all(|p| matches!(fiber(rs, a, h, p, cap), Ok(x) if x.class_count == 1));
    out.push(Check::new("extquot", "generic fibers have one point", "alcove", generic_ok, format!("{} points", generic.len())));
    let Some(g) = &ctx.group else {
        out.push(Check::skipped("extquot", "components", "direct", ""));
        return out;
    };
    let generic_direct = generic.iter().all(|p| crate::torus::fixing_elements(rs, g, p).len() == 1);
    out.push(Check::new("extquot", "generic points have trivial stabilizer", "direct", generic_direct, ""));
    let comps = components(rs, g);
    let n = rs.rank();
    let classes = conjugacy_classes(g).len();
    let shape_ok = comps.len() == classes
        && comps.iter().all(|c| (c.fixed_dim == n) == c.class_rep.is_identity())
        && comps.iter().all(|c| c.fixed_pi0 >= 1 && c.element_order.pow(n as u32) % c.fixed_pi0 == 0)
        && comps.iter().all(|c| c.centralizer_order * c.class_size == g.order());
    out.push(Check::new("extquot", "component invariants", "smith", shape_ok, format!("{} components", comps.len())));
    if g.order() <= ctx.config.pair_cap {
        let mut pts = vec![t0.clone(), TorusPoint::identity(rs)];
        pts.extend(ctx.samples().into_iter().take(5));
        for p in pts {
            let r = (|| {
                let pairs = point_count_over_orbit(rs, g, &p, ctx.config.pair_cap)?;
                let x = fiber(rs, a, h, &p, cap)?;
                if pairs == x.class_count {
                    Ok(format!("{pairs}"))
                } else {
                    Err(Error::Consistency(format!("pairs {pairs} vs fiber {}", x.class_count)))
                }
            })();
            out.push(Check::from_result(
                "extquot",
                format!("pair count over orbit of {}", vec_to_strings(p.coords()).join(",")),
                "pairs+alcove",
                r,
            ));
        }
    } else {
        out.push(Check::skipped("extquot", "pair count over orbits", "pairs", format!("|W| > {}", ctx.config.pair_cap)));
    }
    if n <= 2 {
        for modulus in [12u64, 60] {
            let ok = comps.iter().all(|c| {
                let predicted = modulus.pow(c.fixed_dim as u32) * c.fixed_pi0;
                modulus % c.fixed_pi0 == 0
                    && grid_fixed_points(rs, &c.class_rep, modulus) == predicted
                    && grid_prediction(rs, &c.class_rep, modulus) == predicted
            });
            out.push(Check::new("extquot", format!("fixed points on (1/{modulus})P∨/P∨"), "grid", ok, ""));
        }
    }
    out
}

pub fn ktheory_checks(ctx: &Context) -> Vec<Check> {
    let rs = &ctx.rs;
    let r = k_groups_spherical(rs).and_then(|k| {
        let detail = format!(
            "f {} k0 {} k1 {} packet {} generators {} |H_A| {}",
            k.f, k.k0_rank, k.k1_rank, k.l_packet_size, k.generator_count, k.h_order
        );
        if k.consistent() && k.is_point() == (k.f == 1) {
            Ok(detail)
        } else {
            Err(Error::Consistency(detail))
        }
    });
    vec![Check::from_result("ktheory", "k0 = packet = generators = |H_A| = f, k1 = 0", "characters+alcove+marks", r)]
}

pub fn character_checks(ctx: &Context) -> Vec<Check> {
    let h = &ctx.h;
    let r = alcove_characters(h).and_then(|chars| {
        let distinct: HashSet<&Vec<Rational>> = chars.iter().map(|c| &c.values).collect();
        if chars.len() != h.order() || distinct.len() != chars.len() {
            return Err(Error::Consistency(format!("{} characters", chars.len())));
        }
        for (i, x) in chars.iter().enumerate() {
            for (j, y) in chars.iter().enumerate() {
                let expected = if i == j { h.order() as u64 } else { 0 };
                if inner_product(x, y) != Some(expected) {
                    return Err(Error::Consistency(format!("⟨ρ_{i}, ρ_{j}⟩ ≠ {expected}")));
                }
            }
        }
        Ok(format!("{} characters", chars.len()))
    });
    vec![Check::from_result("characters", "multiplicative, distinct, orthogonal", "cyclotomic", r)]
}

pub fn property_checks(ctx: &Context) -> Vec<Check> {
    let (rs, a, h) = (&ctx.rs, &ctx.alcove, &ctx.h);
    let trials = ctx.config.property_trials;
    let mut out = Vec::new();

    let mut rng = ctx.rng(2);
    let mut retract_ok = true;
    let mut witness = String::new();
    for _ in 0..trials {
        let hk = &h.elements[rng.gen_range(0..h.order())];
        let x = random_alcove_point(&mut rng, a);
        let d = rng.gen_range(1..=60i64);
        let s = Rational::new(rng.gen_range(0..=d).into(), d.into());
        let lhs = a.retract(&hk.apply(&x), &s);
        let rhs = a.retract(&x, &s).map(|y| hk.apply(&y));
        if lhs.is_err() || lhs != rhs {
            retract_ok = false;
            witness = format!("x = {:?}, s = {s}", vec_to_strings(&x));
            break;
        }
    }
    out.push(Check::new("properties", "retraction is H_A-equivariant", "exact", retract_ok, witness));

    let mut rng = ctx.rng(3);
    let walls: Vec<AffineMap> = Wall::all(rs).iter().map(|w| w.reflection(rs)).collect();
    let mut reduce_ok = true;
    let mut witness = String::new();
    for _ in 0..trials {
        let len = rng.gen_range(1..=12);
        let w = (0..len).fold(AffineMap::identity(rs.rank()), |acc, _| walls[rng.gen_range(0..walls.len())].compose(&acc));
        let x: Vec<Rational> = (0..rs.rank())
            .map(|_| {
                let d = rng.gen_range(1..=60i64);
                Rational::new(rng.gen_range(-3 * d..=3 * d).into(), d.into())
            })
            .collect();
        let (y1, _) = reduce_to_alcove(rs, &x);
        let (y2, _) = reduce_to_alcove(rs, &w.apply(&x));
        if y1 != y2 || !a.contains_closed(&y1) {
            reduce_ok = false;
            witness = format!("x = {:?}", vec_to_strings(&x));
            break;
        }
    }
    out.push(Check::new("properties", "reduce_to_alcove is W_a-invariant", "exact", reduce_ok, witness));

    if ctx.group.is_some() {
        let order = rs.cartan_type().weyl_order();
        let mut pts = vec![special_point(rs)];
        pts.extend(ctx.samples());
        let r = pts.iter().try_for_each(|p| {
            let o = orbit_stabilizer(rs, p, ctx.config.cap)?;
            let s = stabilizer_alcove(rs, a, h, p, ctx.config.cap)?;
            if o.orbit_size as u128 * o.stabilizer_order as u128 == order && o.stabilizer_order == s.order {
                Ok(())
            } else {
                Err(Error::Consistency(format!("orbit {} stabilizer {}", o.orbit_size, o.stabilizer_order)))
            }
        });
        out.push(Check::from_result(
            "properties",
            "|orbit| · |stabilizer| = |W|",
            "orbit-bfs",
            r.map(|_| format!("{} points", pts.len())),
        ));
    } else {
        out.push(Check::skipped("properties", "|orbit| · |stabilizer| = |W|", "orbit-bfs", ""));
    }
    out
}

fn random_alcove_point(rng: &mut ChaCha8Rng, a: &Alcove) -> Vec<Rational> {
    let m = a.vertices.len();
    let mut w: Vec<i64> = (0..m).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(1..=20) }).collect();
    if w.iter().all(|&x| x == 0) {
        w[0] = 1;
    }
    let total: i64 = w.iter().sum();
    let t: Vec<Rational> = w.iter().map(|&x| Rational::new(x.into(), total.into())).collect();
    a.from_barycentric(&t)
}
