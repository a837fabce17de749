use medianforge::export::{self, colouring_json, dual_json, hyperplanes_json, pocset_json, tree_json};
use medianforge::{BallTruncation, CutOptions, CutStrategy, FiniteGraph, Generator, Pocset, QuasiMap};
use serde_json::{json, Value};

use crate::{stage, CliError, CliResult, Common, Source};

fn enumerate(c: &Common, g: &FiniteGraph) -> CliResult<Pocset> {
    let opts = CutOptions { budget: c.budget_subsets, strategy: CutStrategy::Auto };
    stage("enumerate_cuts", medianforge::enumerate_cuts_with(g, c.radius()?, opts))
}

fn internal(what: &'static str, detail: String) -> CliError {
    CliError::Core { stage: Some(what), error: medianforge::Error::Invariant(detail) }
}

pub fn cuts(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let g = source.graph();
    let p = enumerate(c, g)?;
    c.emit_dot(|| export::graph_dot(g))?;
    c.emit("cuts", json!({ "radius": c.radius()?, "pocset": pocset_json(&p) }))
}

pub fn pipeline(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let g = source.graph();
    let p = enumerate(c, g)?;
    let dual = stage("build_dual", medianforge::build_dual_with(&p, c.budget_orientations))?;
    let dg = dual.graph();
    let cert = medianforge::check_median(dg);
    if !cert.is_median {
        return Err(internal("check_median", format!("dual fails the median check at {:?}", cert.counterexample)));
    }
    let ig = stage("hyperplanes", medianforge::hyperplane_intersection_graph(dg))?;
    let colours = stage("greedy_colouring", medianforge::greedy_colouring(&ig))?;
    let tree = stage("canonical_spanning_tree", medianforge::treeify::grow_tree(dg, &ig, &colours))?;
    let violations = medianforge::verify_spanning_tree(dg, &tree);
    if let Some(v) = violations.first() {
        return Err(internal("verify_spanning_tree", v.to_string()));
    }
    c.emit_dot(|| export::tree_dot(dg, &tree))?;
    c.emit(
        "pipeline",
        json!({
            "radius": c.radius()?,
            "pocset": pocset_json(&p),
            "dual": dual_json(&dual),
            "hyperplanes": hyperplanes_json(dg, &ig.hyperplanes),
            "colouring": colouring_json(&colours),
            "tree": tree_json(dg, &tree),
            "stats": {
                "input_vertices": g.vertex_count(),
                "input_edges": g.edge_count(),
                "pairs": p.wall_count(),
                "dual_vertices": dg.vertex_count(),
                "dual_edges": dg.edge_count(),
                "hyperplanes": ig.node_count(),
                "colours": colours.colour_count(),
                "tree_edges": tree.edges.len(),
                "stage_sizes": tree.stage_sizes(),
            },
        }),
    )
}

pub fn check_median(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let g = source.graph();
    let cert = medianforge::check_median(g);
    let counterexample = cert.counterexample.as_ref().map(|ce| {
        json!({
            "triple": ce.triple.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
            "intersection": ce.intersection.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
        })
    });
    c.emit("check-median", json!({ "is_median": cert.is_median, "counterexample": counterexample }))
}

pub fn hyperplanes(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let g = source.graph();
    let hs = stage("hyperplanes", medianforge::hyperplanes(g))?;
    c.emit_dot(|| export::hyperplanes_dot(g, &hs))?;
    c.emit("hyperplanes", hyperplanes_json(g, &hs))
}

pub fn tree(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let g = source.graph();
    let ig = stage("hyperplanes", medianforge::hyperplane_intersection_graph(g))?;
    let colours = stage("greedy_colouring", medianforge::greedy_colouring(&ig))?;
    let tree = stage("canonical_spanning_tree", medianforge::treeify::grow_tree(g, &ig, &colours))?;
    if let Some(v) = medianforge::verify_spanning_tree(g, &tree).first() {
        return Err(internal("verify_spanning_tree", v.to_string()));
    }
    c.emit_dot(|| export::tree_dot(g, &tree))?;
    c.emit("tree", json!({ "colouring": colouring_json(&colours), "tree": tree_json(g, &tree) }))
}

pub fn roundtrip(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let g = source.graph();
    let rt = stage("roundtrip", medianforge::roundtrip(g))?;
    let pairing: Vec<Value> = rt
        .orientation_of
        .iter()
        .enumerate()
        .map(|(v, &o)| json!({ "vertex": g.name(v), "orientation": rt.dual.graph().name(o) }))
        .collect();
    c.emit("roundtrip", json!({ "pairing": pairing, "dual": dual_json(&rt.dual) }))
}

pub fn density(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let p = enumerate(c, source.graph())?;
    let report = medianforge::density_criterion(&p);
    c.emit(
        "density",
        json!({
            "radius": c.radius()?,
            "max_block_size": report.max_block_size,
            "max_successor_count": report.max_successor_count,
            "block_sizes": report.block_sizes,
            "successor_counts": report.successor_counts,
        }),
    )
}

/// Built-in coarse map from a generator truncation onto a tree ball.
fn tree_map(t: &BallTruncation) -> CliResult<Option<QuasiMap>> {
    let r = t.radius;
    let q = match t.generator {
        Generator::Line | Generator::RegularTree(_) => Some(QuasiMap::identity(t.clone())),
        Generator::Ladder => Some(stage("quasi_map", QuasiMap::ladder_to_line(r))?),
        Generator::DecoratedTree { degree, cycle_len } => {
            Some(stage("quasi_map", QuasiMap::decorated_to_tree(degree, cycle_len, r))?)
        }
        Generator::Grid2d => None,
    };
    Ok(q)
}

pub fn ends(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let Source::Truncation(t) = source else {
        return Err(CliError::Usage("ends needs --gen and --truncate with --order input".into()));
    };
    let estimates: Vec<Value> = (0..t.radius)
        .map(|r| Ok(json!({ "r": r, "count": stage("end_estimate", medianforge::end_estimate(&t, r))? })))
        .collect::<CliResult<_>>()?;
    let mut out = json!({
        "generator": t.generator.to_string(),
        "truncate": t.radius,
        "vertices": t.graph.vertex_count(),
        "edges": t.graph.edge_count(),
        "frontier": t.graph.names_of(&t.frontier),
        "end_estimates": estimates,
    });
    if let Some(bound) = c.radius {
        let family = match tree_map(&t)? {
            None => Value::Null,
            Some(q) => {
                let fam = stage("quasi_tree_cut_family", medianforge::quasi_tree_cut_family(&t, &q, bound))?;
                let density = stage("density", fam.trusted_density())?;
                json!({
                    "stretch": q.stretch,
                    "displacement": q.displacement,
                    "pocset": pocset_json(&fam.pocset),
                    "untrusted": fam.untrusted,
                    "trusted_max_block_size": density.max_block_size,
                    "trusted_max_successor_count": density.max_successor_count,
                })
            }
        };
        out["quasi_tree_cuts"] = family;
    }
    c.emit_dot(|| export::graph_dot(&t.graph))?;
    c.emit("ends", out)
}

pub fn dot(c: &Common) -> CliResult<()> {
    let source = c.source()?;
    let g = source.graph();
    let text = match c.radius {
        None => export::graph_dot(g),
        Some(_) => {
            let p = enumerate(c, g)?;
            let dual = stage("build_dual", medianforge::build_dual_with(&p, c.budget_orientations))?;
            export::dual_dot(&dual)
        }
    };
    match &c.dot {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
