use std::fmt::Write as _;

use quiver_exact::exstruct::ExactStructureSpec;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering of the translation quiver under a structure: solid
/// irreducible maps, dashed chosen dotted arrows, projective vertices
/// double-circled and injective vertices filled.
pub fn render_dot(spec: &ExactStructureSpec) -> String {
    let tq = &spec.quiver;
    let mut out = String::from("digraph Q {\n  node [shape=circle];\n");
    for (v, name) in tq.vertex_names.iter().enumerate() {
        let mut attrs = Vec::new();
        if spec.projective_vertices.binary_search(&v).is_ok() {
            attrs.push("shape=doublecircle".to_string());
        }
        if spec.injective_vertices.binary_search(&v).is_ok() {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=lightgray".to_string());
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {};", quote(name));
        } else {
            let _ = writeln!(out, "  {} [{}];", quote(name), attrs.join(", "));
        }
    }
    for a in &tq.solid_arrows {
        let label = if a.multiplicity > 1 {
            format!(", label=\"{}\"", a.multiplicity)
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            "  {} -> {} [style=solid{label}];",
            quote(&tq.vertex_names[a.source]),
            quote(&tq.vertex_names[a.target])
        );
    }
    for &k in &spec.chosen {
        let d = tq.dotted_arrows[k];
        let _ = writeln!(
            out,
            "  {} -> {} [style=dashed, constraint=false];",
            quote(&tq.vertex_names[d.source]),
            quote(&tq.vertex_names[d.target])
        );
    }
    out.push_str("}\n");
    out
}
