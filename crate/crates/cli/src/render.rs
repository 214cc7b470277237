//! Human-readable rendering of reports.

use std::fmt::Write;

use wangcheck::catalog::{CatalogEntry, EntryKind};
use wangcheck::groupprops::{SectionReport, SectionVerdict};
use wangcheck::localaction::{DiscretenessVerdict, TowerReport};
use wangcheck::pipeline::{SideReport, SideSource, WangReport};
use wangcheck::vhcomplex::{ValidationReport, VhDatum};
use wangcheck::Order;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn orders(list: &[Order]) -> String {
    list.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn validation(d: &VhDatum, r: &ValidationReport) -> String {
    let mut out = String::new();
    let name = d.name.as_deref().unwrap_or("datum");
    let _ = writeln!(
        out,
        "{name}: n = {}, m = {}, {} oriented squares ({} geometric)",
        d.n(),
        d.m(),
        d.squares.len(),
        d.geometric_count()
    );
    if r.ok() {
        let _ = writeln!(out, "valid: universal cover is T{} × T{}", d.n(), d.m());
    } else {
        let _ = writeln!(out, "invalid: {} violation(s)", r.violations.len());
        for v in &r.violations {
            let _ = writeln!(out, "  violation: {v}");
        }
    }
    for w in &r.warnings {
        let _ = writeln!(out, "  warning: {w}");
    }
    out
}

fn side(out: &mut String, i: usize, r: &SideReport) {
    let source = match &r.source {
        SideSource::Datum { side, name } => {
            format!("{side} tree of {}", name.as_deref().unwrap_or("datum"))
        }
        SideSource::RawGroup { name } => {
            format!("raw group {}", name.as_deref().unwrap_or("(unnamed)"))
        }
    };
    let _ = writeln!(
        out,
        "side {i} ({source}): degree {}, |P_1| = {}",
        r.degree, r.p1_order
    );
    let _ = writeln!(
        out,
        "  transitive {}, primitive {}, 2-transitive {}, quasi-primitive {} ({:?})",
        yes(r.transitive),
        yes(r.primitive),
        yes(r.two_transitive),
        yes(r.quasiprimitive),
        r.qp_type.tag
    );
    match (&r.m_order, &r.m_cap_s_order) {
        (Some(m), Some(ms)) => {
            let names = if r.m_names.is_empty() {
                String::new()
            } else {
                format!(" ({})", r.m_names.join(" or "))
            };
            let _ = writeln!(
                out,
                "  |M| = {m}{names}, |S| = {}, |M ∩ S| = {ms}, S/(S ∩ M) solvable: {}",
                r.s_order,
                r.solvable_outer.map(yes).unwrap_or("n/a")
            );
        }
        _ => {
            let _ = writeln!(
                out,
                "  |S| = {}, minimal normal subgroup orders [{}]",
                r.s_order,
                orders(&r.qp_type.mns_orders)
            );
        }
    }
    if let Some(t) = &r.tower_orders {
        let _ = writeln!(out, "  tower orders: [{}]", orders(t));
    }
    let _ = writeln!(out, "  discreteness: {}", r.discreteness);
}

fn section(out: &mut String, label: &str, r: &SectionReport) {
    let verdict = match r.exact {
        SectionVerdict::Yes => "yes",
        SectionVerdict::No => "no",
        SectionVerdict::Unknown => "unknown",
    };
    let _ = write!(out, "  {label}: {verdict}");
    if let Some(w) = &r.witness {
        let _ = write!(out, " ({w})");
    }
    out.push('\n');
}

pub fn wang_report(r: &WangReport) -> String {
    let mut out = String::new();
    side(&mut out, 1, &r.side1);
    side(&mut out, 2, &r.side2);
    let f = &r.finiteness;
    let _ = writeln!(
        out,
        "finiteness of discrete overgroups: {}",
        if f.applicable {
            "hypotheses hold"
        } else {
            "hypotheses not met"
        }
    );
    for u in &f.unmet {
        let _ = writeln!(out, "  unmet: {u}");
    }
    for c in &f.caveats {
        let _ = writeln!(out, "  caveat: {c}");
    }
    let _ = writeln!(out, "  {}", f.conclusion);
    if let Some(o) = &r.obstruction {
        let _ = writeln!(
            out,
            "section obstruction: {}",
            if o.obstruction_established {
                "established"
            } else {
                "not established"
            }
        );
        section(&mut out, "M_1 a section of S_2", &o.m1_in_s2);
        section(&mut out, "M_2 a section of S_1", &o.m2_in_s1);
        let _ = writeln!(out, "  {}", o.conclusion);
    }
    if let Some(c) = &r.chain {
        let _ = writeln!(
            out,
            "contradiction chain: {}",
            if c.contradiction {
                "certified"
            } else {
                "not certified"
            }
        );
        let _ = writeln!(
            out,
            "  |M_1| ≤ |S_2 ∩ M_2|: {}, |M_2| ≤ |S_1 ∩ M_1|: {}",
            yes(c.m1_le_s2capm2),
            yes(c.m2_le_s1capm1)
        );
        if let Some(cert) = &c.certificate {
            let _ = writeln!(out, "  {cert}");
        }
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn tower(r: &TowerReport, verdict: &DiscretenessVerdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} side, depths 1..={}", r.side, r.depths);
    for (k, o) in r.orders.iter().enumerate() {
        let _ = writeln!(out, "  |P_{}| = {o}", k + 1);
    }
    let _ = writeln!(out, "verdict: {verdict}");
    out
}

fn kind(k: EntryKind) -> &'static str {
    match k {
        EntryKind::Datum => "datum",
        EntryKind::RawGroup => "raw_group",
        EntryKind::RawGroupPair => "raw_group_pair",
    }
}

pub fn catalog_list(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in entries {
        let slot = if e.is_slot() { " [empty slot]" } else { "" };
        let _ = writeln!(
            out,
            "{:width$}  {:14}  {}{slot}",
            e.name,
            kind(e.kind),
            e.description
        );
    }
    out
}

pub fn catalog_entry(e: &CatalogEntry) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", e.name);
    let _ = writeln!(out, "kind: {}", kind(e.kind));
    let _ = writeln!(out, "description: {}", e.description);
    let _ = writeln!(out, "source: {}", e.source);
    if !e.members.is_empty() {
        let _ = writeln!(out, "members: {}", e.members.join(", "));
    }
    match (e.payload.as_deref(), e.payload_text()) {
        (Some(file), Some(text)) => {
            let _ = writeln!(out, "payload: {file}");
            out.push_str(text);
        }
        (Some(file), None) => {
            let _ = writeln!(out, "payload: {file} (missing)");
        }
        (None, _) if e.is_slot() => {
            let _ = writeln!(out, "payload: none (empty slot)");
        }
        (None, _) => {}
    }
    out
}
