//! DOT export for visual inspection. The added path vertices and the
//! part's boundary vertices get distinct fill colours.

use cycfive::CubicGraph;

pub fn to_dot(g: &CubicGraph, path_vertices: &[usize], boundary: &[usize]) -> String {
    let mut out = String::from("graph cycfive {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        if path_vertices.contains(&v) {
            out.push_str(&format!(
                "  {v} [style=filled, fillcolor=lightcoral, label=\"{}\"];\n",
                path_label(v, path_vertices)
            ));
        } else if boundary.contains(&v) {
            out.push_str(&format!("  {v} [style=filled, fillcolor=lightblue];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn path_label(v: usize, path: &[usize]) -> String {
    match path.iter().position(|&p| p == v) {
        Some(0) => format!("x={v}"),
        Some(1) => format!("y={v}"),
        Some(2) => format!("z={v}"),
        _ => v.to_string(),
    }
}
