//! Graphviz export of the 1-cut Hasse diagram of an L-ordered set.

use std::fmt::Write;

use crate::order::LOrderedSet;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Covering pairs `(u, v)` of the 1-cut order, lower element first.
pub fn covers(p: &LOrderedSet) -> Vec<(usize, usize)> {
    let n = p.len();
    let lt = |a: usize, b: usize| a != b && p.le_crisp(a, b);
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if lt(u, v) && !(0..n).any(|w| lt(u, w) && lt(w, v)) {
                out.push((u, v));
            }
        }
    }
    out
}

/// DOT source: solid edges for covers, dashed labelled edges for the
/// degrees `u⪯v` lying strictly between 0 and 1.
pub fn to_dot(p: &LOrderedSet, name: &str) -> String {
    let l = p.lattice();
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quote(name)).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for u in 0..p.len() {
        writeln!(s, "  n{u} [label={}];", quote(p.name(u))).unwrap();
    }
    for (u, v) in covers(p) {
        writeln!(s, "  n{u} -> n{v};").unwrap();
    }
    for u in 0..p.len() {
        for v in 0..p.len() {
            let d = p.le(u, v);
            if u != v && d != l.top() && d != l.bot() {
                writeln!(s, "  n{u} -> n{v} [style=dashed, constraint=false, label={}];", quote(l.name(d))).unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}
