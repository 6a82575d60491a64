//! Hasse diagrams in DOT.

use std::fmt::Write as _;

use snalab_core::FiniteLattice;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes are labeled by element name and edges are covers pointing up, with
/// the bottom on the lowest rank.
pub fn hasse_dot(title: &str, l: &FiniteLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(title));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=plaintext];");
    for x in 0..l.size() {
        let _ = writeln!(out, "  n{x} [label={}];", quote(l.name(x)));
    }
    let _ = writeln!(out, "  {{ rank=min; n{}; }}", l.bottom());
    for (x, y) in l.covers() {
        let _ = writeln!(out, "  n{x} -> n{y};");
    }
    out.push_str("}\n");
    out
}
