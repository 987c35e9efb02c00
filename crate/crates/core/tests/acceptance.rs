//! Acceptance criteria 1 to 9. Each criterion prints one PASS/FAIL line with
//! its elapsed time against a pinned budget; the test fails if any line fails.
//! Run with `--nocapture` to see the lines on success.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use connidx::affine::AlcoveStabilizer;
use connidx::exactmath::rational::vec_to_strings;
use connidx::extquot::{components, fiber, grid_fixed_points, grid_prediction};
use connidx::ktheory::{alcove_characters, inner_product, k_groups_spherical};
use connidx::rootsys::{CartanType, RootSystem, Series};
use connidx::suite::{property_checks, two_method_checks, Context, SuiteConfig};
use connidx::torus::{special_point, stabilizer_alcove, stabilizer_direct, verify_lemma};
use connidx::weyl::{WeylGroup, DEFAULT_CAP};

const BUDGET_1: Duration = Duration::from_secs(1);
const BUDGET_2: Duration = Duration::from_secs(1);
const BUDGET_3: Duration = Duration::from_secs(10);
const BUDGET_4: Duration = Duration::from_secs(30);
const BUDGET_4_WITH_E7: Duration = Duration::from_secs(300);
/// No budget is prescribed for criterion 5; this one is ours.
const BUDGET_5: Duration = Duration::from_secs(300);
const BUDGET_6: Duration = Duration::from_secs(60);
const BUDGET_7: Duration = Duration::from_secs(10);
const BUDGET_8: Duration = Duration::from_secs(1);
const BUDGET_9: Duration = Duration::from_secs(120);
/// Cap large enough for `|W(E7)| = 2 903 040`.
const E7_CAP: u64 = 3_000_000;

fn all_types() -> Vec<CartanType> {
    CartanType::all_up_to(8)
}

/// Connection index by family, written out independently of the library.
fn f_oracle(t: CartanType) -> u64 {
    match (t.series(), t.rank()) {
        (Series::A, n) => n as u64 + 1,
        (Series::B | Series::C, _) => 2,
        (Series::D, _) => 4,
        (Series::E, 6) => 3,
        (Series::E, 7) => 2,
        _ => 1,
    }
}

/// Invariant factors of `π₁` of the adjoint group.
fn factors_oracle(t: CartanType) -> Vec<u64> {
    match (t.series(), t.rank()) {
        (Series::A, n) => vec![n as u64 + 1],
        (Series::B | Series::C, _) => vec![2],
        (Series::D, n) if n % 2 == 1 => vec![4],
        (Series::D, _) => vec![2, 2],
        (Series::E, 6) => vec![3],
        (Series::E, 7) => vec![2],
        _ => vec![],
    }
}

struct Outcome {
    number: u32,
    title: &'static str,
    ok: bool,
    elapsed: Duration,
    budget: Duration,
    detail: String,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.ok && self.elapsed <= self.budget
    }

    fn line(&self) -> String {
        format!(
            "criterion {} ({}): {} [{:.3}s / budget {}s]{}",
            self.number,
            self.title,
            if self.passed() { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            if self.detail.is_empty() { String::new() } else { format!(" {}", self.detail) }
        )
    }
}

fn fail(detail: &mut String, msg: String) {
    if detail.is_empty() {
        *detail = msg;
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for t in all_types() {
        let got = RootSystem::build(t).connection_index();
        if got != f_oracle(t) {
            fail(&mut detail, format!("{t}: got {got}, expected {}", f_oracle(t)));
        }
    }
    Outcome { number: 1, title: "connection-index table", ok: detail.is_empty(), elapsed: start.elapsed(), budget: BUDGET_1, detail }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for t in all_types() {
        let g = RootSystem::build(t).fundamental_group();
        if g.factors() != factors_oracle(t).as_slice() {
            fail(&mut detail, format!("{t}: got {:?}", g.factors()));
        }
    }
    Outcome { number: 2, title: "fundamental-group structure", ok: detail.is_empty(), elapsed: start.elapsed(), budget: BUDGET_2, detail }
}

fn criterion_3(stabilizers: &mut BTreeMap<String, AlcoveStabilizer>) -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for t in all_types() {
        let rs = RootSystem::build(t);
        let alcove = connidx::affine::fundamental_alcove(&rs);
        let h = match AlcoveStabilizer::build(&rs, &alcove) {
            Ok(h) => h,
            Err(e) => {
                fail(&mut detail, format!("{t}: {e}"));
                continue;
            }
        };
        let n = h.order();
        if n as u64 != f_oracle(t) {
            fail(&mut detail, format!("{t}: |H_A| = {n}"));
        }
        if (0..n).any(|a| (0..n).any(|b| h.product(a, b) != h.product(b, a))) {
            fail(&mut detail, format!("{t}: H_A not abelian"));
        }
        if h.structure.factors() != factors_oracle(t).as_slice() {
            fail(&mut detail, format!("{t}: H_A factors {:?}", h.structure.factors()));
        }
        let mut perms = HashSet::new();
        for e in &h.elements {
            if e.apply(&alcove.barycenter) != alcove.barycenter {
                fail(&mut detail, format!("{t}: barycenter moved"));
            }
            let perm: Vec<usize> = alcove
                .vertices
                .iter()
                .map(|v| {
                    let image = e.apply(v);
                    alcove.vertices.iter().position(|u| *u == image).unwrap_or(usize::MAX)
                })
                .collect();
            let distinct: HashSet<usize> = perm.iter().copied().collect();
            if perm.contains(&usize::MAX) || distinct.len() != perm.len() {
                fail(&mut detail, format!("{t}: vertices not permuted"));
            }
            perms.insert(perm);
        }
        if perms.len() != n {
            fail(&mut detail, format!("{t}: vertex action not faithful"));
        }
        if t.to_string() == "A2" {
            // Both nontrivial elements are 3-cycles of {v0, v1, v2}.
            let cycles = h
                .vertex_permutations
                .iter()
                .filter(|p| (0..3).all(|i| p[i] != i && p[p[p[i]]] == i))
                .count();
            if cycles != 2 {
                fail(&mut detail, "A2: vertex action is not the 3-cycle".into());
            }
        }
        stabilizers.insert(t.to_string(), h);
    }
    Outcome { number: 3, title: "H_A realization", ok: detail.is_empty(), elapsed: start.elapsed(), budget: BUDGET_3, detail }
}

fn lemma_for(rs: &RootSystem, h: &AlcoveStabilizer, g: &WeylGroup, cap: u64) -> Result<(), String> {
    let alcove = connidx::affine::fundamental_alcove(rs);
    let t0 = special_point(rs);
    let d = stabilizer_direct(rs, g, &t0, cap).map_err(|e| e.to_string())?;
    let factors = d.shape.abelian().map(|a| a.factors().to_vec());
    if d.order != h.order() as u64 || factors.as_deref() != Some(h.fundamental.factors()) {
        return Err(format!("W(t0) = {:?} vs H_A = {}", d.shape, h.fundamental));
    }
    let report = verify_lemma(rs, &alcove, h, Some(g));
    if !report.passed() || report.direct != Some(true) {
        return Err(format!("lemma map: {report:?}"));
    }
    Ok(())
}

fn criterion_4(contexts: &mut BTreeMap<String, Context>, config: &SuiteConfig) -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for t in all_types() {
        let ctx = match Context::new(t, config) {
            Ok(c) => c,
            Err(e) => {
                fail(&mut detail, format!("{t}: {e}"));
                continue;
            }
        };
        match &ctx.group {
            Some(g) => {
                if let Err(e) = lemma_for(&ctx.rs, &ctx.h, g, config.cap) {
                    fail(&mut detail, format!("{t}: {e}"));
                }
            }
            None if t.to_string() == "E8" => {
                let r = stabilizer_alcove(&ctx.rs, &ctx.alcove, &ctx.h, &special_point(&ctx.rs), config.cap);
                if !matches!(r, Ok(ref s) if s.order == 1) {
                    fail(&mut detail, "E8: W(t0) is not trivial".into());
                }
            }
            None => {}
        }
        contexts.insert(t.to_string(), ctx);
    }
    let ok = detail.is_empty();
    if ok {
        detail = "(E7 opt-in: run with --ignored)".into();
    }
    Outcome { number: 4, title: "W(t0) ≅ H_A", ok, elapsed: start.elapsed(), budget: BUDGET_4, detail }
}

fn criterion_5(contexts: &BTreeMap<String, Context>) -> Outcome {
    let mut elapsed = Duration::ZERO;
    let mut detail = String::new();
    let mut checked = 0;
    for (name, ctx) in contexts {
        if ctx.group.is_none() {
            continue;
        }
        let uniform = ctx.samples().iter().filter(|p| {
            ctx.rs.to_coweight_coords(p.coords()).iter().all(|q| *q.denom() <= 60.into())
        }).count();
        if uniform < 20 {
            fail(&mut detail, format!("{name}: only {uniform} points with denominator ≤ 60"));
        }
        let start = Instant::now();
        let checks = two_method_checks(ctx);
        elapsed += start.elapsed();
        checked += checks.len();
        if let Some(c) = checks.iter().find(|c| c.failed()) {
            fail(&mut detail, format!("{name} {}: {}", c.name, c.detail));
        }
    }
    let ok = detail.is_empty();
    if ok {
        detail = format!("{checked} points");
    }
    Outcome { number: 5, title: "two-method stabilizer agreement", ok, elapsed, budget: BUDGET_5, detail }
}

/// Brute-force count of the fixed points of every element of `W` on the grid
/// `(1/N)P∨/P∨`, with `W` generated as permutations of the grid from
/// `s_i(y)_k = y_k - y_i C_ik` in coweight coordinates.
fn grid_oracle(rs: &RootSystem, modulus: i64) -> Vec<u64> {
    let n = rs.rank();
    let c = rs.cartan_entries();
    let size = (modulus as usize).pow(n as u32);
    let decode = |mut k: usize| -> Vec<i64> {
        (0..n)
            .map(|_| {
                let d = (k % modulus as usize) as i64;
                k /= modulus as usize;
                d
            })
            .collect()
    };
    let encode = |y: &[i64]| -> usize { y.iter().rev().fold(0, |acc, &d| acc * modulus as usize + d.rem_euclid(modulus) as usize) };
    let reflections: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..size)
                .map(|k| {
                    let y = decode(k);
                    let z: Vec<i64> = (0..n).map(|j| y[j] - y[i] * c[i][j]).collect();
                    encode(&z)
                })
                .collect()
        })
        .collect();
    let identity: Vec<usize> = (0..size).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut queue = vec![identity];
    let mut k = 0;
    while k < queue.len() {
        for s in &reflections {
            let p: Vec<usize> = queue[k].iter().map(|&x| s[x]).collect();
            if seen.insert(p.clone()) {
                queue.push(p);
            }
        }
        k += 1;
    }
    let mut counts: Vec<u64> = queue.iter().map(|p| p.iter().enumerate().filter(|(i, x)| i == *x).count() as u64).collect();
    counts.sort_unstable();
    counts
}

fn criterion_6(contexts: &BTreeMap<String, Context>, config: &SuiteConfig) -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for (name, ctx) in contexts {
        let t = ctx.rs.cartan_type();
        match fiber(&ctx.rs, &ctx.alcove, &ctx.h, &special_point(&ctx.rs), config.cap) {
            Ok(x) if x.class_count == f_oracle(t) => {}
            other => fail(&mut detail, format!("{name}: t0 fiber {:?}", other.map(|x| x.class_count))),
        }
        for p in ctx.generic_samples() {
            match fiber(&ctx.rs, &ctx.alcove, &ctx.h, &p, config.cap) {
                Ok(x) if x.class_count == 1 => {}
                _ => fail(&mut detail, format!("{name}: generic fiber at {:?}", vec_to_strings(p.coords()))),
            }
        }
    }
    let a1 = &contexts["A1"];
    let comps = components(&a1.rs, a1.group.as_ref().expect("A1 within cap"));
    let mut table: Vec<(bool, usize, u64)> = comps.iter().map(|c| (c.class_rep.is_identity(), c.fixed_dim, c.fixed_pi0)).collect();
    table.sort();
    if table != vec![(false, 0, 2), (true, 1, 1)] {
        fail(&mut detail, format!("A1 components {table:?}"));
    }
    for name in ["A1", "A2"] {
        let ctx = &contexts[name];
        let g = ctx.group.as_ref().expect("within cap");
        for modulus in [12u64, 60] {
            let oracle = grid_oracle(&ctx.rs, modulus as i64);
            let mut counted: Vec<u64> = (0..g.len()).map(|k| grid_fixed_points(&ctx.rs, &g.matrix(k), modulus)).collect();
            let mut predicted: Vec<u64> = (0..g.len()).map(|k| grid_prediction(&ctx.rs, &g.matrix(k), modulus)).collect();
            counted.sort_unstable();
            predicted.sort_unstable();
            if counted != oracle || predicted != oracle {
                fail(&mut detail, format!("{name} N={modulus}: oracle {oracle:?} counted {counted:?} predicted {predicted:?}"));
            }
        }
    }
    Outcome { number: 6, title: "extended-quotient fibers", ok: detail.is_empty(), elapsed: start.elapsed(), budget: BUDGET_6, detail }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for t in all_types() {
        match k_groups_spherical(&RootSystem::build(t)) {
            Ok(k) => {
                let f = f_oracle(t);
                let same = [k.f, k.k0_rank, k.l_packet_size, k.generator_count, k.h_order].iter().all(|&x| x == f);
                let point = matches!(t.to_string().as_str(), "E8" | "F4" | "G2");
                if !same || k.k1_rank != 0 || k.k1_source.is_empty() || (point && !k.is_point()) || k.is_point() != (f == 1) {
                    fail(&mut detail, format!("{t}: {k:?}"));
                }
            }
            Err(e) => fail(&mut detail, format!("{t}: {e}")),
        }
    }
    Outcome { number: 7, title: "K-theory five-way equality", ok: detail.is_empty(), elapsed: start.elapsed(), budget: BUDGET_7, detail }
}

fn criterion_8(stabilizers: &BTreeMap<String, AlcoveStabilizer>) -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for (name, h) in stabilizers {
        let chars = match alcove_characters(h) {
            Ok(c) => c,
            Err(e) => {
                fail(&mut detail, format!("{name}: {e}"));
                continue;
            }
        };
        let distinct: HashSet<_> = chars.iter().map(|c| c.values.clone()).collect();
        if chars.len() != h.order() || distinct.len() != chars.len() {
            fail(&mut detail, format!("{name}: {} characters", chars.len()));
        }
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let expected = if i == j { h.order() as u64 } else { 0 };
                if inner_product(a, b) != Some(expected) {
                    fail(&mut detail, format!("{name}: <{i},{j}>"));
                }
            }
        }
    }
    Outcome { number: 8, title: "character tables", ok: detail.is_empty(), elapsed: start.elapsed(), budget: BUDGET_8, detail }
}

fn criterion_9(contexts: &BTreeMap<String, Context>) -> Outcome {
    let start = Instant::now();
    let mut detail = String::new();
    for (name, ctx) in contexts {
        for c in property_checks(ctx) {
            if c.failed() {
                fail(&mut detail, format!("{name} {}: {}", c.name, c.detail));
            }
        }
    }
    Outcome { number: 9, title: "property suites", ok: detail.is_empty(), elapsed: start.elapsed(), budget: BUDGET_9, detail }
}

#[test]
fn acceptance_criteria() {
    let config = SuiteConfig::default();
    assert_eq!(config.cap, DEFAULT_CAP);
    assert!(config.samples >= 20 && config.property_trials >= 100);
    let mut stabilizers = BTreeMap::new();
    let mut contexts = BTreeMap::new();
    let outcomes = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(&mut stabilizers),
        criterion_4(&mut contexts, &config),
        criterion_5(&contexts),
        criterion_6(&contexts, &config),
        criterion_7(),
        criterion_8(&stabilizers),
        criterion_9(&contexts),
    ];
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed()).map(Outcome::line).collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}

/// Criterion 4 for E7, which needs a cap above the default.
#[test]
#[ignore = "enumerates the 2.9 million elements of W(E7)"]
fn acceptance_criterion_4_e7() {
    let start = Instant::now();
    let rs = RootSystem::build("E7".parse().unwrap());
    let alcove = connidx::affine::fundamental_alcove(&rs);
    let h = AlcoveStabilizer::build(&rs, &alcove).unwrap();
    let g = WeylGroup::generate(&rs, E7_CAP).unwrap();
    let r = lemma_for(&rs, &h, &g, E7_CAP);
    let o = Outcome {
        number: 4,
        title: "W(t0) ≅ H_A for E7",
        ok: r.is_ok(),
        elapsed: start.elapsed(),
        budget: BUDGET_4_WITH_E7,
        detail: r.err().unwrap_or_default(),
    };
    println!("{}", o.line());
    assert!(o.passed(), "{}", o.line());
}
