//! Graphviz export.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::document::GraphDocument;

/// Renders the document as DOT.
///
/// Without arcs the output is an undirected `graph`. With arcs it is a
/// `digraph`: arcs are drawn bold with arrowheads, every other edge gets
/// `dir=none`. Twisted edges are red and the bridge arc, if any, is labelled.
pub fn to_dot(doc: &GraphDocument) -> String {
    let twisted: BTreeSet<(usize, usize)> = doc.twisted_edges.iter().copied().collect();
    let quote = |v: usize| {
        format!(
            "\"{}\"",
            doc.label(v).replace('\\', "\\\\").replace('"', "\\\"")
        )
    };
    let mut out = String::new();
    let directed = doc.arcs.is_some();
    out.push_str(if directed {
        "digraph G {\n"
    } else {
        "graph G {\n"
    });
    out.push_str("  node [shape=circle];\n");
    let set: BTreeSet<usize> = doc.set.iter().flatten().copied().collect();
    for v in 0..doc.graph.order() {
        if set.contains(&v) {
            let _ = writeln!(out, "  {} [style=filled, fillcolor=lightblue];", quote(v));
        } else {
            let _ = writeln!(out, "  {};", quote(v));
        }
    }
    let red = |u: usize, v: usize| twisted.contains(&(u.min(v), u.max(v)));
    let attrs = |list: Vec<&str>| {
        if list.is_empty() {
            String::new()
        } else {
            format!(" [{}]", list.join(", "))
        }
    };
    match &doc.arcs {
        None => {
            for (u, v) in doc.graph.edges() {
                let a = if red(u, v) { vec!["color=red"] } else { vec![] };
                let _ = writeln!(out, "  {} -- {}{};", quote(u), quote(v), attrs(a));
            }
        }
        Some(arcs) => {
            for (u, v) in doc.graph.edges() {
                if arcs.contains(u, v) || arcs.contains(v, u) {
                    continue;
                }
                let mut a = vec!["dir=none"];
                if red(u, v) {
                    a.push("color=red");
                }
                let _ = writeln!(out, "  {} -> {}{};", quote(u), quote(v), attrs(a));
            }
            for arc in arcs.iter() {
                let mut a = vec!["penwidth=2"];
                if red(arc.tail, arc.head) {
                    a.push("color=red");
                }
                if doc.bridge_arc == Some(*arc) {
                    a.push("label=\"bridge\"");
                }
                let _ = writeln!(
                    out,
                    "  {} -> {}{};",
                    quote(arc.tail),
                    quote(arc.head),
                    attrs(a)
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
