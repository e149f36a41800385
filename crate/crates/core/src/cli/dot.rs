//! DOT rendering of a decorated diagram.
//!
//! Vertices of `theta` are filled black, vertices of `Lambda(L)` are double
//! circles, and the main-theorem witness (if any) carries the external
//! label `α`. Multiple bonds are drawn as a single edge labelled with the
//! bond multiplicity.

use std::fmt::Write as _;

use crate::picard::LineBundleClass;
use crate::vanishing::classify;

pub fn render_dot(class: &LineBundleClass) -> String {
    let d = class.diagram();
    let theta = class.theta();
    let lambda = class.lambda().set();
    let witness = classify(class).witness();

    let mut out = String::new();
    let _ = writeln!(out, "graph {d} {{");
    let _ = writeln!(out, "  // numbering: {}", d.numbering_legend());
    let _ = writeln!(out, "  // theta = {theta}, lambda = {lambda}");
    let _ = writeln!(out, "  node [shape=circle];");
    for v in d.vertices() {
        let mut attrs = vec![format!("label=\"{v}\"")];
        if theta.contains(v) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=black".into());
            attrs.push("fontcolor=white".into());
        }
        if lambda.contains(v) {
            attrs.push("shape=doublecircle".into());
        }
        if witness == Some(v) {
            attrs.push("xlabel=\"α\"".into());
        }
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
    for (i, j) in d.edges() {
        let bond = d.bond(i, j).expect("edge endpoints are vertices");
        if bond > 1 {
            let _ = writeln!(out, "  {i} -- {j} [label=\"{bond}\"];");
        } else {
            let _ = writeln!(out, "  {i} -- {j};");
        }
    }
    out.push_str("}\n");
    out
}
