//! Graphviz output.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::lattice::FiniteLattice;
use crate::sortable::CambrianInterval;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram drawn bottom to top. Nodes sharing a rank are aligned and
/// edges along `chain` are drawn thick.
pub fn lattice_dot(lattice: &FiniteLattice, rank: &[usize], chain: &[usize]) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for i in 0..lattice.size() {
        writeln!(out, "  n{i} [label={}];", quote(lattice.label(i))).unwrap();
    }
    let mut by_rank: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &r) in rank.iter().enumerate() {
        by_rank.entry(r).or_default().push(i);
    }
    for nodes in by_rank.values() {
        let names: Vec<String> = nodes.iter().map(|i| format!("n{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", names.join(" ")).unwrap();
    }
    let thick: Vec<(usize, usize)> = chain.windows(2).map(|p| (p[0], p[1])).collect();
    for (a, b) in lattice.covers() {
        if thick.contains(&(a, b)) {
            writeln!(out, "  n{a} -> n{b} [penwidth=3];").unwrap();
        } else {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Ranks by Coxeter length and marks the sorting chain of the top.
pub fn interval_dot(interval: &CambrianInterval) -> String {
    let rank: Vec<usize> = interval.elements().iter().map(|e| e.len()).collect();
    let chain = interval.sorting_chain_indices().unwrap_or_default();
    lattice_dot(interval.lattice(), &rank, &chain)
}
