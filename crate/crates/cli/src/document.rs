//! Serializable documents. Rationals are `"p/q"` strings (`"p"` when
//! integral); no field is a float.

use connidx::affine::AlcoveStabilizer;
use connidx::exactmath::rational::vec_to_strings;
use connidx::exactmath::FiniteAbelianGroup;
use connidx::extquot::{components, fiber, ExtQuotComponent};
use connidx::finite::GroupShape;
use connidx::ktheory::{k_groups_spherical, R_GROUP_SOURCE};
use connidx::rootsys::CartanType;
use connidx::suite::{self, Check, Context, SuiteConfig, TypeSuite};
use connidx::torus::{special_point, stabilizer_alcove, stabilizer_direct, PointSampler, StabilizerReport, TorusPoint};
use connidx::{Error, Result};
use serde::{Deserialize, Serialize};

/// Bumped on any change to the fields below.
pub const SCHEMA_VERSION: &str = "1";

const SKIPPED: &str = "skipped (cap)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub requested_type: String,
    pub cartan_type: String,
    pub series: String,
    pub rank: usize,
    pub seed: u64,
    pub cap: u64,
    pub weyl_order: String,
    pub connection_index: u64,
    pub fundamental_group: String,
    pub invariant_factors: Vec<u64>,
    pub k_theory: KTheory,
    pub alcove: AlcoveEntry,
    pub h_a: Vec<HElement>,
    pub special_point: Vec<String>,
    pub stabilizer_t0: Vec<StabilizerEntry>,
    pub fibers: Vec<FiberEntry>,
    pub components: ComponentTable,
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTheory {
    pub f: u64,
    pub k0_rank: u64,
    pub k1_rank: u64,
    pub l_packet_size: u64,
    pub generator_count: u64,
    pub h_order: u64,
    pub is_point: bool,
    pub consistent: bool,
    pub k1_source: String,
    pub r_group_source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcoveEntry {
    /// Coroot coordinates of `v_0, ..., v_n`.
    pub vertices: Vec<Vec<String>>,
    pub barycenter: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HElement {
    pub label: Vec<u64>,
    pub translation: Vec<String>,
    pub vertex_permutation: Vec<usize>,
    pub cycles: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerEntry {
    pub method: String,
    pub status: String,
    pub order: Option<u64>,
    pub shape: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub point: Vec<String>,
    pub status: String,
    pub stabilizer_order: Option<u64>,
    pub class_count: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentTable {
    pub status: String,
    pub rows: Vec<ComponentRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRow {
    /// Reduced word of the class representative in the simple reflections, 1-based.
    pub word: Vec<u8>,
    pub class_size: u64,
    pub element_order: u64,
    pub fixed_dim: usize,
    pub fixed_pi0: u64,
    pub centralizer_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub group: String,
    pub name: String,
    pub method: String,
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtQuotDocument {
    pub schema_version: String,
    pub requested_type: String,
    pub cartan_type: String,
    pub seed: u64,
    pub cap: u64,
    pub samples: usize,
    pub t0_fiber: FiberEntry,
    pub sampled_fibers: Vec<FiberEntry>,
    pub components: ComponentTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub schema_version: String,
    pub seed: u64,
    pub cap: u64,
    pub max_rank: usize,
    pub samples: usize,
    pub passed: bool,
    pub totals: Counts,
    pub types: Vec<TypeResult>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeResult {
    pub cartan_type: String,
    pub counts: Counts,
    pub checks: Vec<CheckEntry>,
}

pub fn group_name(g: &FiniteAbelianGroup) -> String {
    if g.is_trivial() {
        "trivial".into()
    } else {
        g.to_string()
    }
}

fn shape_name(shape: &GroupShape) -> String {
    match shape {
        GroupShape::Abelian(g) => group_name(g),
        GroupShape::NonAbelian { order, class_count: Some(k) } => format!("nonabelian, order {order}, {k} classes"),
        GroupShape::NonAbelian { order, class_count: None } => format!("nonabelian, order {order}"),
    }
}

/// Cycle notation on vertex indices, `id` for the identity.
pub fn cycles(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(format!("v{i}"));
            i = perm[i];
        }
        out.push(format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "id".into()
    } else {
        out.join("")
    }
}

fn check_entry(c: &Check) -> CheckEntry {
    CheckEntry {
        group: c.group.into(),
        name: c.name.clone(),
        method: c.method.into(),
        status: c.status.name().into(),
        detail: c.detail.clone(),
    }
}

fn stabilizer_entry(r: Result<StabilizerReport>, method: &str) -> Result<StabilizerEntry> {
    match r {
        Ok(s) => Ok(StabilizerEntry {
            method: method.into(),
            status: "ok".into(),
            order: Some(s.order),
            shape: Some(shape_name(&s.shape)),
        }),
        Err(Error::CapExceeded { .. }) => Ok(StabilizerEntry { method: method.into(), status: SKIPPED.into(), order: None, shape: None }),
        Err(e) => Err(e),
    }
}

fn fiber_entry(ctx: &Context, t: &TorusPoint) -> Result<FiberEntry> {
    let point = vec_to_strings(t.coords());
    match fiber(&ctx.rs, &ctx.alcove, &ctx.h, t, ctx.config.cap) {
        Ok(x) => Ok(FiberEntry {
            point,
            status: "ok".into(),
            stabilizer_order: Some(x.stabilizer_order),
            class_count: Some(x.class_count),
        }),
        Err(Error::CapExceeded { .. }) => Ok(FiberEntry { point, status: SKIPPED.into(), stabilizer_order: None, class_count: None }),
        Err(e) => Err(e),
    }
}

fn component_table(ctx: &Context) -> ComponentTable {
    match &ctx.group {
        None => ComponentTable { status: SKIPPED.into(), rows: Vec::new() },
        Some(g) => ComponentTable {
            status: "ok".into(),
            rows: components(&ctx.rs, g).iter().map(component_row).collect(),
        },
    }
}

fn component_row(c: &ExtQuotComponent) -> ComponentRow {
    ComponentRow {
        word: c.word.iter().map(|&i| i + 1).collect(),
        class_size: c.class_size,
        element_order: c.element_order,
        fixed_dim: c.fixed_dim,
        fixed_pi0: c.fixed_pi0,
        centralizer_order: c.centralizer_order,
    }
}

fn h_elements(h: &AlcoveStabilizer) -> Vec<HElement> {
    (0..h.order())
        .map(|k| HElement {
            label: h.labels[k].clone(),
            translation: vec_to_strings(&h.translations[k]),
            vertex_permutation: h.vertex_permutations[k].clone(),
            cycles: cycles(&h.vertex_permutations[k]),
        })
        .collect()
}

pub fn report(requested: CartanType, config: &SuiteConfig) -> Result<ReportDocument> {
    let t = requested.canonical();
    let ctx = Context::new(t, config)?;
    let rs = &ctx.rs;
    let k = k_groups_spherical(rs)?;
    let pi1 = rs.fundamental_group();
    let t0 = special_point(rs);
    let direct = match &ctx.group {
        Some(g) => stabilizer_entry(stabilizer_direct(rs, g, &t0, config.cap), "direct")?,
        None => StabilizerEntry { method: "direct".into(), status: SKIPPED.into(), order: None, shape: None },
    };
    let alcove = stabilizer_entry(stabilizer_alcove(rs, &ctx.alcove, &ctx.h, &t0, config.cap), "alcove")?;
    let mut sampler = PointSampler::new(config.seed);
    let mut fibers = vec![fiber_entry(&ctx, &t0)?];
    for _ in 0..config.samples {
        fibers.push(fiber_entry(&ctx, &sampler.next_point(rs, &ctx.alcove))?);
    }
    let mut checks = Vec::new();
    checks.extend(suite::rootsys_checks(&ctx));
    checks.extend(suite::weyl_checks(&ctx));
    checks.extend(suite::alcove_checks(&ctx));
    checks.extend(suite::lemma_checks(&ctx));
    checks.extend(suite::ktheory_checks(&ctx));
    checks.extend(suite::character_checks(&ctx));
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.into(),
        requested_type: requested.to_string(),
        cartan_type: t.to_string(),
        series: t.series().to_string(),
        rank: t.rank(),
        seed: config.seed,
        cap: config.cap,
        weyl_order: t.weyl_order().to_string(),
        connection_index: rs.connection_index(),
        fundamental_group: group_name(&pi1),
        invariant_factors: pi1.factors().to_vec(),
        k_theory: KTheory {
            f: k.f,
            k0_rank: k.k0_rank,
            k1_rank: k.k1_rank,
            l_packet_size: k.l_packet_size,
            generator_count: k.generator_count,
            h_order: k.h_order,
            is_point: k.is_point(),
            consistent: k.consistent(),
            k1_source: k.k1_source.into(),
            r_group_source: R_GROUP_SOURCE.into(),
        },
        alcove: AlcoveEntry {
            vertices: ctx.alcove.vertices.iter().map(|v| vec_to_strings(v)).collect(),
            barycenter: vec_to_strings(&ctx.alcove.barycenter),
        },
        h_a: h_elements(&ctx.h),
        special_point: vec_to_strings(t0.coords()),
        stabilizer_t0: vec![direct, alcove],
        fibers,
        components: component_table(&ctx),
        checks: checks.iter().map(check_entry).collect(),
    })
}

pub fn extquot(requested: CartanType, config: &SuiteConfig) -> Result<ExtQuotDocument> {
    let t = requested.canonical();
    let ctx = Context::new(t, config)?;
    let mut sampler = PointSampler::new(config.seed);
    let sampled_fibers = (0..config.samples)
        .map(|_| fiber_entry(&ctx, &sampler.generic_point(&ctx.rs, &ctx.alcove)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtQuotDocument {
        schema_version: SCHEMA_VERSION.into(),
        requested_type: requested.to_string(),
        cartan_type: t.to_string(),
        seed: config.seed,
        cap: config.cap,
        samples: config.samples,
        t0_fiber: fiber_entry(&ctx, &special_point(&ctx.rs))?,
        sampled_fibers,
        components: component_table(&ctx),
    })
}

fn counts(checks: &[CheckEntry]) -> Counts {
    let mut c = Counts::default();
    for x in checks {
        match x.status.as_str() {
            "pass" => c.pass += 1,
            "fail" => c.fail += 1,
            _ => c.skipped += 1,
        }
    }
    c
}

pub fn verify(suites: &[TypeSuite], config: &SuiteConfig) -> VerifyDocument {
    let types: Vec<TypeResult> = suites
        .iter()
        .map(|s| {
            let checks: Vec<CheckEntry> = s.checks.iter().map(check_entry).collect();
            TypeResult { cartan_type: s.cartan_type.to_string(), counts: counts(&checks), checks }
        })
        .collect();
    let totals = types.iter().fold(Counts::default(), |acc, t| Counts {
        pass: acc.pass + t.counts.pass,
        fail: acc.fail + t.counts.fail,
        skipped: acc.skipped + t.counts.skipped,
    });
    VerifyDocument {
        schema_version: SCHEMA_VERSION.into(),
        seed: config.seed,
        cap: config.cap,
        max_rank: config.max_rank,
        samples: config.samples,
        passed: totals.fail == 0,
        totals,
        types,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        assert_eq!(cycles(&[0, 1, 2]), "id");
        assert_eq!(cycles(&[1, 2, 0]), "(v0 v1 v2)");
        assert_eq!(cycles(&[1, 0, 3, 2]), "(v0 v1)(v2 v3)");
    }

    #[test]
    fn trivial_group_is_named() {
        assert_eq!(group_name(&FiniteAbelianGroup::trivial()), "trivial");
        assert_eq!(group_name(&FiniteAbelianGroup::new(vec![4]).unwrap()), "Z/4");
    }
}
