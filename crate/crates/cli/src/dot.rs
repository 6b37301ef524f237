//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use intrank_core::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Cover edges only, drawn bottom to top.
pub fn to_dot(p: &Poset, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for label in p.labels() {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
    for &(a, b) in p.covers().pairs() {
        writeln!(out, "  {} -> {};", quote(p.label(a)), quote(p.label(b))).unwrap();
    }
    out.push_str("}\n");
    out
}
