//! Plain-text and DOT renderings.

use std::fmt::Write as _;

use sga_core::chordal::CliqueSeparatorGraph;
use sga_core::{SignedCycle, SignedGraph, Ternary, Verdict};

use crate::crosscheck::Report;

pub fn ternary(t: Ternary) -> &'static str {
    match t {
        Ternary::Yes => "yes",
        Ternary::No => "no",
        Ternary::Unknown => "unknown",
    }
}

pub fn cycle(c: &SignedCycle) -> String {
    let mut out = String::new();
    for (i, v) in c.vertices.iter().enumerate() {
        let sign = if c.signs[i].is_negative() { '-' } else { '+' };
        let _ = write!(out, "{v} {sign} ");
    }
    let _ = write!(out, "{}", c.vertices[0]);
    out
}

pub fn verdict(v: &Verdict, rank: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "balanced chordal: {}", if v.balanced_chordal { "yes" } else { "no" });
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "witness: {}", cycle(&w.cycle));
    }
    let _ = writeln!(out, "supersolvable: {}", ternary(v.supersolvable));
    let _ = writeln!(out, "free: {}", ternary(v.free));
    let _ = writeln!(out, "provenance: {:?}", v.provenance);
    let _ = writeln!(out, "rank: {rank}");
    let _ = writeln!(out, "cross-checked: {}", if v.cross_checked { "yes" } else { "no" });
    out
}

fn set(s: &std::collections::BTreeSet<u32>) -> String {
    s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn csg(c: &CliqueSeparatorGraph) -> String {
    let mut out = String::new();
    for (i, k) in c.clique_nodes.iter().enumerate() {
        let _ = writeln!(out, "clique {i}: {{{}}}", set(k));
    }
    for (i, s) in c.separator_nodes.iter().enumerate() {
        let _ = writeln!(out, "separator {i}: {{{}}}", set(s));
    }
    for &(k, s) in &c.cs_edges {
        let _ = writeln!(out, "edge clique {k} - separator {s}");
    }
    for &(s, t) in &c.arcs {
        let _ = writeln!(out, "arc separator {s} -> separator {t}");
    }
    let _ = writeln!(out, "boxes: {}, sink boxes: {:?}", c.boxes.len(), c.sink_boxes);
    out
}

/// Positive edges solid, negative edges dashed, loops as self-edges.
pub fn graph_dot(g: &SignedGraph) -> String {
    let mut out = String::from("graph signed {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for &(a, b) in g.positive_pairs() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    for &(a, b) in g.negative_pairs() {
        let _ = writeln!(out, "  {a} -- {b} [style=dashed];");
    }
    for &v in g.loops() {
        let _ = writeln!(out, "  {v} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn crosscheck(r: &Report) -> String {
    let mut out = String::new();
    for row in &r.rows {
        let _ = writeln!(
            out,
            "n={} {}: {} instances, {} disagreements",
            row.vertices, row.coverage, row.instances, row.disagreements
        );
    }
    let _ = writeln!(out, "total disagreements: {}", r.disagreements);
    out
}
