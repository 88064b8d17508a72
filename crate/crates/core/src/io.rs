//! Graph serialization: the JSON interchange format and DOT export.

use serde_json::{json, Value};

use crate::graph::{LabeledGraph, VertexLabel};

fn label_to_json(l: &VertexLabel) -> Value {
    match l {
        VertexLabel::Int(x) => json!(x),
        VertexLabel::Subset(s) => json!(s),
        VertexLabel::Pair(i, j) => json!([i, j]),
        // Merged vertices serialize through their canonical representative.
        VertexLabel::Merged(a, _) => label_to_json(a),
    }
}

/// {"family": .., "params": .., "vertices": [label, ..], "edges": [[i,j], ..]}
/// with 0-based indices into the vertex list; subsets as sorted ascending
/// arrays, grid coordinates as [i, j].
pub fn graph_to_json(g: &LabeledGraph, family: &str, params: Value) -> Value {
    let vertices: Vec<Value> = g.labels().iter().map(label_to_json).collect();
    let edges: Vec<Value> = g.edges().iter().map(|&(u, v)| json!([u, v])).collect();
    json!({
        "family": family,
        "params": params,
        "vertices": vertices,
        "edges": edges,
    })
}

/// DOT export with the vertex labels as node names.
pub fn graph_to_dot(g: &LabeledGraph, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{name}\" {{\n"));
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  \"{}\";\n", g.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label(u), g.label(v)));
    }
    out.push_str("}\n");
    out
}
