use std::collections::BTreeSet;
use std::fmt::Write;

use super::InhibitorNet;

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Render a net in Graphviz DOT. Places are circles (a token label when
/// marked), transitions are boxes, transitions in `backward` are dashed and
/// inhibitor arcs end in an `odot` arrowhead. Output order is by name.
pub fn to_dot(net: &InhibitorNet, backward: &BTreeSet<String>) -> String {
    let mut out = String::from("digraph net {\n");
    if net.places().is_empty() && net.transitions().is_empty() {
        out.push_str("}\n");
        return out;
    }
    out.push_str("  rankdir=LR;\n");
    let initial = net.initial_marking();
    for p in net.places() {
        let tokens = initial.count(p);
        let label = match tokens {
            0 => String::new(),
            1 => "&#9679;".to_string(),
            n => n.to_string(),
        };
        let _ = writeln!(
            out,
            "  {} [shape=circle, label=\"{label}\", xlabel={}];",
            quote(p),
            quote(p)
        );
    }
    for t in net.transitions() {
        let style = if backward.contains(t) { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  {} [shape=box{style}];", quote(t));
    }
    for (x, y) in net.flow() {
        let _ = writeln!(out, "  {} -> {};", quote(&x), quote(&y));
    }
    for (p, t) in net.inhibitor_arcs() {
        let _ = writeln!(out, "  {} -> {} [arrowhead=odot];", quote(&p), quote(&t));
    }
    out.push_str("}\n");
    out
}
