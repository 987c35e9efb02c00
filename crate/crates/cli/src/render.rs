use std::fmt::Write;

use crate::document::{ComponentTable, ExtQuotDocument, FiberEntry, ReportDocument, VerifyDocument};

fn point(p: &[String]) -> String {
    format!("({})", p.join(", "))
}

fn fiber_line(out: &mut String, f: &FiberEntry) {
    let body = match (f.stabilizer_order, f.class_count) {
        (Some(s), Some(c)) => format!("|W(t)| = {s}, fiber = {c}"),
        _ => f.status.clone(),
    };
    let _ = writeln!(out, "  {:<40} {body}", point(&f.point));
}

fn components(out: &mut String, c: &ComponentTable) {
    if c.status != "ok" {
        let _ = writeln!(out, "components: {}", c.status);
        return;
    }
    let words: Vec<String> = c
        .rows
        .iter()
        .map(|r| {
            if r.word.is_empty() {
                "1".to_string()
            } else {
                r.word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
            }
        })
        .collect();
    let w = words.iter().map(String::len).max().unwrap_or(0).max(5);
    let _ = writeln!(out, "components ({}):", c.rows.len());
    let _ = writeln!(out, "  {:<w$} {:>10} {:>6} {:>4} {:>8}", "class", "size", "order", "dim", "pi0");
    for (r, word) in c.rows.iter().zip(&words) {
        let _ = writeln!(
            out,
            "  {:<w$} {:>10} {:>6} {:>4} {:>8}",
            word, r.class_size, r.element_order, r.fixed_dim, r.fixed_pi0
        );
    }
}

pub fn report(d: &ReportDocument) -> String {
    let mut out = String::new();
    let alias = if d.requested_type != d.cartan_type { format!(" (requested {})", d.requested_type) } else { String::new() };
    let _ = writeln!(out, "type {}{alias}, |W| = {}, seed {}", d.cartan_type, d.weyl_order, d.seed);
    let _ = writeln!(out, "f = {}", d.connection_index);
    let _ = writeln!(out, "fundamental group = {}", d.fundamental_group);
    let _ = writeln!(out, "H_A = {} (order {})", d.fundamental_group, d.h_a.len());
    let k = &d.k_theory;
    let _ = writeln!(
        out,
        "K_0 = Z^{}, K_1 = {}, L-packet {}, generators {}, |H_A| {}{}",
        k.k0_rank,
        k.k1_rank,
        k.l_packet_size,
        k.generator_count,
        k.h_order,
        if k.is_point { ", the K-theory of a point" } else { "" }
    );
    let _ = writeln!(out, "  {}", k.k1_source);
    let _ = writeln!(out, "  {}", k.r_group_source);
    let _ = writeln!(out, "alcove vertices:");
    for (i, v) in d.alcove.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{i} = {}", point(v));
    }
    let _ = writeln!(out, "  barycenter x0 = {}", point(&d.alcove.barycenter));
    let _ = writeln!(out, "H_A elements:");
    for h in &d.h_a {
        let _ = writeln!(out, "  label {:?} translation {} vertices {}", h.label, point(&h.translation), h.cycles);
    }
    let _ = writeln!(out, "t0 = {}", point(&d.special_point));
    for s in &d.stabilizer_t0 {
        let body = match (&s.order, &s.shape) {
            (Some(o), Some(shape)) => format!("order {o}, {shape}"),
            _ => s.status.clone(),
        };
        let _ = writeln!(out, "  W(t0) by {:<7} {body}", s.method);
    }
    let _ = writeln!(out, "fibers of T//W -> T/W:");
    for f in &d.fibers {
        fiber_line(&mut out, f);
    }
    components(&mut out, &d.components);
    let _ = writeln!(out, "checks:");
    for c in &d.checks {
        let _ = writeln!(out, "  {:<14} [{}] {} ({})", c.status, c.group, c.name, c.method);
    }
    out
}

pub fn extquot(d: &ExtQuotDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}, seed {}", d.cartan_type, d.seed);
    let _ = writeln!(out, "fiber over t0:");
    fiber_line(&mut out, &d.t0_fiber);
    let _ = writeln!(out, "sampled fibers ({}):", d.sampled_fibers.len());
    for f in &d.sampled_fibers {
        fiber_line(&mut out, f);
    }
    components(&mut out, &d.components);
    out
}

pub fn verify(d: &VerifyDocument) -> String {
    let mut out = String::new();
    for t in &d.types {
        let _ = writeln!(
            out,
            "{:<4} pass {:>4}  fail {:>3}  skipped {:>3}",
            t.cartan_type, t.counts.pass, t.counts.fail, t.counts.skipped
        );
    }
    for t in &d.types {
        for c in t.checks.iter().filter(|c| c.status == "fail") {
            let _ = writeln!(out, "FAIL {} [{}] {} ({}): {}", t.cartan_type, c.group, c.name, c.method, c.detail);
        }
    }
    let _ = writeln!(
        out,
        "total: {} pass, {} fail, {} skipped; seed {}",
        d.totals.pass, d.totals.fail, d.totals.skipped, d.seed
    );
    out
}
