//! Plain-text rendering of reports. Timing is left out so the output is stable.

use std::fmt::Write;

use verifier::{CheckSection, GroupSummary, Status, VerificationReport};

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Truncated => "TRUNCATED",
    }
}

pub fn section(out: &mut String, c: &CheckSection) {
    let _ = writeln!(out, "{:<10} {:<9} {} examined", c.name, status_word(c.status), c.examined);
    if let Some(x) = &c.counterexample {
        let _ = writeln!(out, "    w = {}, G = {}", x.w, x.gallery);
        if let Some(a) = &x.alpha {
            let _ = writeln!(out, "    alpha = {a}");
        }
        if let Some(b) = &x.beta {
            let _ = writeln!(out, "    beta = {b}");
        }
        let _ = writeln!(out, "    {}", x.detail);
    }
    if let Some(t) = &c.truncated {
        let _ = writeln!(out, "    exhausted: {t}");
    }
    if let Some(n) = &c.note {
        let _ = writeln!(out, "    note: {n}");
    }
}

pub fn report(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "blueprint-forge verification report (schema {})", r.schema_version);
    let family = serde_json::to_string(&r.family).unwrap_or_default();
    let _ = writeln!(out, "family: {family}");
    let spheres: Vec<String> = r.sphere_sizes.iter().map(usize::to_string).collect();
    if spheres.is_empty() {
        let _ = writeln!(out, "sample: {} elements, {} galleries", r.ball_size, r.galleries);
    } else {
        let _ = writeln!(out, "depth {}: {} elements ({} by length), {} galleries", r.depth, r.ball_size, spheres.join(" "), r.galleries);
    }
    let _ = writeln!(out, "{}", r.certification);
    for c in &r.checks {
        section(&mut out, c);
    }
    let failed = r.failed_checks();
    if failed.is_empty() {
        let _ = writeln!(out, "result: pass");
    } else {
        let _ = writeln!(out, "result: FAIL ({})", failed.join(", "));
    }
    out
}

pub fn group(g: &GroupSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "U_G for G of type {}", g.word);
    let _ = writeln!(out, "order: 2^{}", g.order_exponent);
    match (&g.class, &g.term_exponents) {
        (Some(c), Some(t)) => {
            let _ = writeln!(out, "nilpotency class: {c} (log2 of lower central terms: {t:?})");
        }
        _ => {
            let _ = writeln!(out, "nilpotency class: unknown (cap exceeded)");
        }
    }
    let _ = writeln!(out, "class at most 2: {}", g.class_at_most_2);
    let _ = writeln!(out, "central generators: {:?}", g.center_generators);
    out
}
