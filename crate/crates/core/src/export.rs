//! JSON documents and DOT drawings. Vertices are written by name, sets as
//! sorted name arrays; object keys come out sorted, so equal inputs give
//! byte-identical text.

use serde_json::{json, Value};

use crate::dual::DualMedianGraph;
use crate::error::{Error, Result};
use crate::geometry::Hyperplane;
use crate::graph::FiniteGraph;
use crate::pocset::Pocset;
use crate::treeify::{ColourClasses, SpanningTree};
use crate::vertex_set::VertexSet;

pub const SCHEMA: &str = "medianforge/1";

/// Wraps a payload in the versioned top-level document.
pub fn document(kind: &str, payload: Value) -> Value {
    json!({ "schema": SCHEMA, "kind": kind, "data": payload })
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn edge_names(g: &FiniteGraph, e: usize) -> Value {
    let (u, v) = g.edges()[e];
    json!([g.name(u), g.name(v)])
}

/// Non-trivial members in member order; the trivial pair is implicit.
pub fn pocset_json(p: &Pocset) -> Value {
    let members: Vec<Vec<String>> = p.nontrivial().map(|i| p.graph().names_of(p.side(i))).collect();
    json!({
        "vertices": p.graph().names(),
        "pairs": p.wall_count(),
        "members": members,
    })
}

/// Reads `{"members": [[name, ...], ...]}` (a full document or the bare
/// payload) and validates it as a pocset on `g`.
pub fn pocset_from_json(g: &FiniteGraph, text: &str, require_cuts: bool) -> Result<Pocset> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    let body = value.get("data").unwrap_or(&value);
    let bad = |m: &str| Error::Parse { line: 0, message: m.to_string() };
    let members = body.get("members").and_then(Value::as_array).ok_or_else(|| bad("missing `members` array"))?;
    let n = g.vertex_count();
    let mut sides = vec![VertexSet::empty(n), VertexSet::full(n)];
    for m in members {
        let names = m.as_array().ok_or_else(|| bad("member is not an array"))?;
        let mut side = VertexSet::empty(n);
        for name in names {
            side.insert(g.vertex(name.as_str().ok_or_else(|| bad("vertex name is not a string"))?)?);
        }
        if !sides.contains(&side) {
            sides.push(side);
        }
    }
    Pocset::from_exact(g, sides, require_cuts)
}

pub fn dual_json(d: &DualMedianGraph) -> Value {
    let p = d.pocset();
    let g = p.graph();
    let vertices: Vec<Vec<Vec<String>>> =
        d.keys().iter().map(|key| key.iter().map(|&i| g.names_of(p.side(i))).collect()).collect();
    let edges: Vec<[usize; 2]> = d.graph().edges().iter().map(|&(a, b)| [a, b]).collect();
    json!({
        "vertices": vertices,
        "edges": edges,
        "flipped_pair": d.flipped_pairs(),
    })
}

pub fn hyperplanes_json(g: &FiniteGraph, hs: &[Hyperplane]) -> Value {
    let items: Vec<Value> = hs
        .iter()
        .map(|h| {
            json!({
                "edges": h.edges.iter().map(|&e| edge_names(g, e)).collect::<Vec<_>>(),
                "sides": [g.names_of(&h.sides.0), g.names_of(&h.sides.1)],
            })
        })
        .collect();
    Value::Array(items)
}

pub fn colouring_json(c: &ColourClasses) -> Value {
    json!({ "classes": c.classes, "colour_of": c.colour_of })
}

pub fn tree_json(g: &FiniteGraph, t: &SpanningTree) -> Value {
    let edges: Vec<Value> = t
        .edges
        .iter()
        .zip(&t.stage_of)
        .map(|(&e, &stage)| json!({ "edge": edge_names(g, e), "stage": stage }))
        .collect();
    json!({ "edges": edges, "stage_sizes": t.stage_sizes() })
}

const PALETTE: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "teal"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn dot(g: &FiniteGraph, labels: Option<&[String]>, edge_attrs: impl Fn(usize) -> String) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(l) => out.push_str(&format!("  {} [label={}];\n", quote(g.name(v)), quote(&l[v]))),
            None => out.push_str(&format!("  {};\n", quote(g.name(v)))),
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let attrs = edge_attrs(e);
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{attrs}]") };
        out.push_str(&format!("  {} -- {}{attrs};\n", quote(g.name(u)), quote(g.name(v))));
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(g: &FiniteGraph) -> String {
    dot(g, None, |_| String::new())
}

/// Dual vertices labelled by their keys.
pub fn dual_dot(d: &DualMedianGraph) -> String {
    let p = d.pocset();
    let labels: Vec<String> = d
        .keys()
        .iter()
        .map(|key| {
            let parts: Vec<String> =
                key.iter().map(|&i| format!("{{{}}}", p.graph().names_of(p.side(i)).join(","))).collect();
            parts.join(" ")
        })
        .collect();
    dot(d.graph(), Some(&labels), |_| String::new())
}

/// Edges coloured by hyperplane.
pub fn hyperplanes_dot(g: &FiniteGraph, hs: &[Hyperplane]) -> String {
    let mut class = vec![0; g.edge_count()];
    for (i, h) in hs.iter().enumerate() {
        for &e in &h.edges {
            class[e] = i;
        }
    }
    dot(g, None, |e| format!("color={}, label=\"h{}\"", PALETTE[class[e] % PALETTE.len()], class[e]))
}

/// Tree edges drawn bold and labelled by stage, other edges dashed.
pub fn tree_dot(g: &FiniteGraph, t: &SpanningTree) -> String {
    let mut stage = vec![None; g.edge_count()];
    for (&e, &s) in t.edges.iter().zip(&t.stage_of) {
        stage[e] = Some(s);
    }
    dot(g, None, |e| match stage[e] {
        Some(s) => format!("penwidth=3, color={}, label=\"{s}\"", PALETTE[s % PALETTE.len()]),
        None => "style=dashed, color=gray".into(),
    })
}
