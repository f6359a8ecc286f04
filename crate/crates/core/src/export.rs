//! Graphviz output.

use std::fmt::Write;

use crate::quiver::QuiverPresentation;
use crate::tilted::{CategoryQuiver, DimensionVector, ModuleCategoryQuiver};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn dimvec_label(d: &DimensionVector) -> String {
    d.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("")
}

pub fn quiver_dot(q: &QuiverPresentation) -> String {
    let mut s = String::from("digraph quiver {\n  rankdir=LR;\n");
    for (i, v) in q.vertices.iter().enumerate() {
        let _ = writeln!(s, "  v{i} [label={}];", quote(&format!("{}: {v}", i + 1)));
    }
    for (a, b) in q.arrow_pairs() {
        let _ = writeln!(s, "  v{a} -> v{b};");
    }
    s.push_str("}\n");
    s
}

pub fn category_dot(q: &CategoryQuiver) -> String {
    let mut s = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
    for m in &q.vertices {
        let _ = writeln!(s, "  {};", quote(&m.to_string()));
    }
    for (a, b) in &q.arrows {
        let _ = writeln!(s, "  {} -> {};", quote(&a.to_string()), quote(&b.to_string()));
    }
    for (a, b) in &q.tau {
        let _ = writeln!(
            s,
            "  {} -> {} [style=dashed, constraint=false];",
            quote(&a.to_string()),
            quote(&b.to_string())
        );
    }
    s.push_str("}\n");
    s
}

pub fn module_quiver_dot(q: &ModuleCategoryQuiver) -> String {
    let mut s = String::from("digraph modules {\n  rankdir=LR;\n");
    for v in &q.vertices {
        let _ = writeln!(
            s,
            "  {} [label={}];",
            quote(&v.edge.to_string()),
            quote(&format!("{}\\n{}", v.edge, dimvec_label(&v.dimvec)))
        );
    }
    for (a, b) in &q.arrows {
        let _ = writeln!(s, "  {} -> {};", quote(&a.to_string()), quote(&b.to_string()));
    }
    for (a, b) in &q.tau {
        let _ = writeln!(
            s,
            "  {} -> {} [style=dashed, constraint=false];",
            quote(&a.to_string()),
            quote(&b.to_string())
        );
    }
    s.push_str("}\n");
    s
}
