use std::collections::BTreeMap;
use std::process::Command;

use medianforge::{
    build_dual, canonical_spanning_tree, check_median, check_median_by_intervals, convex_halfspaces, corpus,
    dual_distance, end_estimate, enumerate_cuts, greedy_colouring, hyperplane_intersection_graph, hyperplanes,
    non_nested_neighbors, project, pullback_cut, roundtrip as pair_with_dual, separating_halfspaces, shrink, truncate,
    verify_spanning_tree, FiniteGraph, Generator, HalfSpace, Pocset, QuasiMap, VertexSet,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::corpus::Corpus;
use crate::oracle::{self, canonical, Forest, Metric};
use crate::Outcome;

fn set_of(n: usize, mask: &[bool]) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&v| mask[v]))
}

/// Every subset of `0..n` with `1..=k` elements, in lexicographic order.
fn small_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn grow(n: usize, k: usize, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == k {
            return;
        }
        for v in from..n {
            current.push(v);
            grow(n, k, v + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn dual_exactness(c: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut orientations = 0;
    for d in &c.duals {
        let Some(expected) = oracle::choice_masks(&d.pocset) else { continue };
        checked += 1;
        orientations += expected.len();
        let got = oracle::dual_masks(&d.dual);
        if got != expected || got.len() != d.dual.orientations().len() {
            failures.push(format!(
                "{} R={}: {} orientations against {} choice functions",
                d.name,
                d.radius,
                d.dual.orientations().len(),
                expected.len()
            ));
        }
    }
    if checked == 0 {
        failures.push("no pocset small enough to enumerate".into());
    }
    Outcome::new(
        &failures,
        format!("{checked} pocsets with at most 16 pairs, {orientations} orientations equal the upward-closed choice functions"),
    )
}

pub fn median_axiom(c: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut cross_checked = 0;
    for d in &c.duals {
        let g = d.dual.graph();
        let cert = check_median(g);
        if !cert.is_median {
            failures.push(format!("dual of {} R={} fails at {:?}", d.name, d.radius, cert.counterexample));
        }
        if g.vertex_count() <= 400 {
            cross_checked += 1;
            if check_median_by_intervals(g) != cert {
                failures.push(format!("dual of {} R={}: the two median checks disagree", d.name, d.radius));
            }
        }
    }
    let c6 = corpus::cycle(6);
    let cert = check_median(&c6);
    let triple = cert.counterexample.as_ref().map(|ce| ce.triple.map(|v| c6.name(v).to_string()));
    if cert.is_median || triple != Some(["v0", "v2", "v4"].map(String::from)) {
        failures.push(format!("C6 reported {triple:?}"));
    }
    let c6_metric = Metric::of(&c6);
    if c6_metric.median(0, 2, 4).is_some() {
        failures.push("the brute-force median of (v0,v2,v4) in C6 exists".into());
    }
    let largest = c.duals.iter().map(|d| d.dual.graph().vertex_count()).max().unwrap_or(0);
    Outcome::new(
        &failures,
        format!(
            "{} duals median (largest {largest} vertices, {cross_checked} re-checked by intervals); C6 fails at (v0,v2,v4)",
            c.duals.len()
        ),
    )
}

pub fn distance_formula(c: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for d in &c.duals {
        let g = d.dual.graph();
        let metric = Metric::of(g);
        let os = d.dual.orientations();
        for u in 0..os.len() {
            for v in u + 1..os.len() {
                pairs += 1;
                match dual_distance(&os[u], &os[v]) {
                    Ok(k) if k == metric.d(u, v) as usize => {}
                    other => {
                        if failures.len() < 5 {
                            failures.push(format!(
                                "{} R={} ({u},{v}): {other:?} vs BFS {}",
                                d.name,
                                d.radius,
                                metric.d(u, v)
                            ));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(&failures, format!("{pairs} orientation pairs over {} duals equal BFS distance", c.duals.len()))
}

pub fn tree_cases(c: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    for t in &c.trees {
        let g = &t.graph;
        let n = g.vertex_count();
        let metric = Metric::of(g);
        let sides = g.edges().iter().map(|&(u, v)| oracle::edge_side(&metric, u, v));
        let pocset = Pocset::from_family(g, sides).expect("edge cuts form a pocset");
        if enumerate_cuts(g, 1).ok().as_ref() != Some(&pocset) {
            failures.push(format!("{}: radius-1 cuts are not exactly the edge cuts", t.name));
        }
        let dual = match build_dual(&pocset) {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("{}: {e}", t.name));
                continue;
            }
        };
        let dg = dual.graph();
        let phi: Vec<usize> = (0..n).map(|x| dual.principal_index(x).expect("principal vertex")).collect();
        let mut image = phi.clone();
        image.sort_unstable();
        image.dedup();
        let bijective = dg.vertex_count() == n && image.len() == n;
        let edges_kept = g.edges().iter().all(|&(u, v)| dg.has_edge(phi[u], phi[v]));
        let mut forest = Forest::new(dg.vertex_count());
        let acyclic = dg.edges().iter().all(|&(u, v)| forest.join(u, v));
        let connected = forest.partition().iter().all(|&b| b == 0);
        if !(bijective && edges_kept && acyclic && connected && dg.edge_count() == n - 1) {
            failures.push(format!(
                "{}: bijective {bijective}, edges kept {edges_kept}, acyclic {acyclic}, connected {connected}",
                t.name
            ));
        }
    }
    Outcome::new(&failures, format!("{} trees: dual of the edge cuts is the tree itself and acyclic", c.trees.len()))
}

pub fn roundtrip(c: &Corpus) -> Outcome {
    let graphs = c.median_graphs(300);
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        let rt = match pair_with_dual(g) {
            Ok(rt) => rt,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        let dg = rt.dual.graph();
        let phi = &rt.orientation_of;
        let mut image = phi.clone();
        image.sort_unstable();
        image.dedup();
        let principal = (0..g.vertex_count()).all(|v| rt.dual.principal_index(v).ok() == Some(phi[v]));
        let iso = image.len() == g.vertex_count()
            && dg.vertex_count() == g.vertex_count()
            && dg.edge_count() == g.edge_count()
            && g.edges().iter().all(|&(u, v)| dg.has_edge(phi[u], phi[v]));
        if !(principal && iso) {
            failures.push(format!("{name}: principal {principal}, isomorphism {iso}"));
        }
    }
    Outcome::new(&failures, format!("{} median graphs recovered through the principal map", graphs.len()))
}

/// Checks one spanning tree against an independent recomputation.
fn audit_tree(name: &str, g: &FiniteGraph, failures: &mut Vec<String>) -> Option<Vec<usize>> {
    let tree = match canonical_spanning_tree(g) {
        Ok(t) => t,
        Err(e) => {
            failures.push(format!("{name}: {e}"));
            return None;
        }
    };
    let violations = verify_spanning_tree(g, &tree);
    if let Some(v) = violations.first() {
        failures.push(format!("{name}: verifier reports {v}"));
    }
    let n = g.vertex_count();
    let mut forest = Forest::new(n);
    let acyclic = tree.edges.iter().all(|&e| e < g.edge_count() && forest.join(g.edges()[e].0, g.edges()[e].1));
    let spanning = tree.edges.len() + 1 == n && forest.partition().iter().all(|&b| b == 0);
    if !(acyclic && spanning) {
        failures.push(format!("{name}: acyclic {acyclic}, spanning {spanning}"));
    }

    let ig = hyperplane_intersection_graph(g).expect("median graph");
    let colours = greedy_colouring(&ig).expect("colouring");
    let mut colour_of_edge = vec![usize::MAX; g.edge_count()];
    for (h, hp) in ig.hyperplanes.iter().enumerate() {
        for &e in &hp.edges {
            colour_of_edge[e] = colours.colour_of[h];
        }
    }
    if tree.edges.iter().zip(&tree.stage_of).any(|(&e, &s)| colour_of_edge[e] != s) {
        failures.push(format!("{name}: an edge's stage differs from its hyperplane's colour"));
    }
    for class in &colours.classes {
        for (i, &h) in class.iter().enumerate() {
            for &k in &class[i + 1..] {
                let (a, b) = (&ig.hyperplanes[h].sides, &ig.hyperplanes[k].sides);
                let corners = [a.0.intersects(&b.0), a.0.intersects(&b.1), a.1.intersects(&b.0), a.1.intersects(&b.1)];
                if corners.iter().all(|&c| c) {
                    failures.push(format!("{name}: hyperplanes {h} and {k} share a colour but cross"));
                }
            }
        }
    }
    // components of the stage-<k forest against the blocks of colours >= k
    for k in 0..=colours.colour_count() {
        let mut forest = Forest::new(n);
        for (&e, _) in tree.edges.iter().zip(&tree.stage_of).filter(|(_, &s)| s < k) {
            forest.join(g.edges()[e].0, g.edges()[e].1);
        }
        let signature: Vec<Vec<bool>> = (0..n)
            .map(|v| {
                (0..ig.node_count())
                    .filter(|&h| colours.colour_of[h] >= k)
                    .map(|h| ig.hyperplanes[h].sides.0.contains(v))
                    .collect()
            })
            .collect();
        if forest.partition() != canonical(signature) {
            failures.push(format!("{name}: stage {k} components differ from the blocks"));
        }
    }
    Some(tree.stage_sizes())
}

pub fn spanning_tree(c: &Corpus) -> Outcome {
    let graphs = c.median_graphs(usize::MAX);
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        audit_tree(name, g, &mut failures);
    }
    let square = corpus::square();
    let tree = canonical_spanning_tree(&square).expect("C4 is median");
    let named: Vec<(String, usize)> = tree
        .edges
        .iter()
        .zip(&tree.stage_of)
        .map(|(&e, &s)| {
            let (u, v) = square.edges()[e];
            (format!("{}-{}", square.name(u), square.name(v)), s)
        })
        .collect();
    let expected = [("tl-tr", 0), ("br-bl", 0), ("tr-br", 1)].map(|(e, s)| (e.to_string(), s));
    if named != expected {
        failures.push(format!("C4 tree {named:?}"));
    }
    let q3 = audit_tree("Q3", &corpus::hypercube(3), &mut failures);
    if q3 != Some(vec![4, 2, 1]) {
        failures.push(format!("Q3 stage sizes {q3:?}"));
    }
    Outcome::new(
        &failures,
        format!(
            "{} median graphs verified with the stage invariant at every stage; C4 has 3 edges, Q3 has 7 in stages 4/2/1",
            graphs.len()
        ),
    )
}

pub fn separation_counting(c: &Corpus) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5e9a);
    let graphs: Vec<(String, &FiniteGraph)> =
        c.median_graphs(16).into_iter().filter(|(_, g)| (2..=16).contains(&g.vertex_count())).collect();
    let mut failures = Vec::new();
    let mut samples = 0;
    for (name, g) in &graphs {
        let n = g.vertex_count();
        let metric = Metric::of(g);
        let walls = metric.convex_halfspace_masks();
        let library_walls = convex_halfspaces(g).expect("median graph").pair_count() - 1;
        if walls.len() != 2 * library_walls {
            failures.push(format!("{name}: {} convex half-spaces, library pairs {library_walls}", walls.len()));
        }
        let vertices: Vec<usize> = (0..n).collect();
        let random_hull = |rng: &mut StdRng| {
            let k = rng.gen_range(1..=3.min(n));
            let picks: Vec<usize> = vertices.choose_multiple(rng, k).copied().collect();
            metric.hull(&picks)
        };
        let mut taken = 0;
        for _ in 0..10_000 {
            if taken == 100 {
                break;
            }
            let a = random_hull(&mut rng);
            let b = random_hull(&mut rng);
            if (0..n).any(|v| a[v] && b[v]) {
                continue;
            }
            taken += 1;
            let mask = |s: &[bool]| (0..n).filter(|&v| s[v]).fold(0u32, |m, v| m | 1 << v);
            let (ma, mb) = (mask(&a), mask(&b));
            let separating = walls.iter().filter(|&&h| ma & !h == 0 && mb & h == 0).count();
            let d = metric.set_distance(&a, &b) as usize;
            let library = separating_halfspaces(g, &set_of(n, &a), &set_of(n, &b)).map(|s| s.len());
            if separating != d || library.as_ref().ok() != Some(&d) {
                failures.push(format!("{name}: d = {d}, brute force {separating}, library {library:?}"));
            }
        }
        if taken < 100 {
            failures.push(format!("{name}: only {taken} disjoint convex pairs found"));
        }
        samples += taken;
    }
    Outcome::new(&failures, format!("{samples} disjoint convex pairs over {} median graphs", graphs.len()))
}

pub fn projection(_: &Corpus) -> Outcome {
    let graphs = [("Q3", corpus::hypercube(3)), ("C4", corpus::square()), ("G33", corpus::grid(3, 3))];
    let mut failures = Vec::new();
    let (mut projections, mut triples) = (0, 0);
    for (name, g) in &graphs {
        let n = g.vertex_count();
        let metric = Metric::of(g);
        for a in small_subsets(n, 3) {
            let hull = metric.hull(&a);
            let target = VertexSet::from_iter(n, a.iter().copied());
            let mut pi = vec![usize::MAX; n];
            for (x, slot) in pi.iter_mut().enumerate() {
                projections += 1;
                let expected = metric.gate(&hull, &a, x);
                match project(g, &target, x) {
                    Ok(p) if Some(p) == expected => *slot = p,
                    got => failures.push(format!("{name} A={a:?} x={x}: {got:?} vs {expected:?}")),
                }
            }
            for x in 0..n {
                for y in x + 1..n {
                    for z in y + 1..n {
                        triples += 1;
                        let m = metric.median(x, y, z).expect("median graph");
                        if metric.median(pi[x], pi[y], pi[z]) != Some(pi[m]) {
                            failures.push(format!("{name} A={a:?}: projection breaks the median of ({x},{y},{z})"));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        &failures,
        format!("{projections} projections equal the nearest gate, {triples} triples map medians to medians"),
    )
}

pub fn hyperplane_bound(c: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut worst: Option<(usize, usize, String)> = None;
    let mut exponential_failures = 0;
    for d in &c.duals {
        let p = &d.pocset;
        let sizes = d.dual.flip_class_sizes();
        let mut by_pairs: Vec<usize> = sizes[1..].to_vec();
        let mut by_classes: Vec<usize> =
            hyperplanes(d.dual.graph()).expect("dual is median").iter().map(|h| h.edges.len()).collect();
        by_pairs.sort_unstable();
        by_classes.sort_unstable();
        if by_pairs != by_classes {
            failures.push(format!("{} R={}: flip classes differ from hyperplanes", d.name, d.radius));
        }
        for (k, &(lo, _)) in p.pairs().iter().enumerate().skip(1) {
            checked += 1;
            let transverse = non_nested_neighbors(p, p.member(lo)).expect("member").len();
            let bound = 1 + transverse;
            if sizes[k] > bound {
                let excess = sizes[k] - bound;
                if worst.as_ref().is_none_or(|w| excess > w.0 - w.1) {
                    worst = Some((sizes[k], bound, format!("{} R={}", d.name, d.radius)));
                }
                failures.push(format!("{} R={} pair {k}: {} edges > {bound}", d.name, d.radius, sizes[k]));
            }
            // transverse members come in complementary pairs
            if (sizes[k] as u128) > 1u128 << (transverse / 2).min(127) {
                exponential_failures += 1;
            }
        }
    }
    let worst = worst.map_or(String::new(), |(e, b, at)| format!("; worst {e} edges against bound {b} at {at}"));
    Outcome::new(
        &failures,
        format!(
            "{checked} hyperplanes checked{worst}; the bound 2^(transverse walls) fails {exponential_failures} times"
        ),
    )
}

/// Components of `{d(root, v) >= r}` that reach distance `radius`.
fn end_count(g: &FiniteGraph, radius: usize, r: usize) -> usize {
    let metric = Metric::of(g);
    let n = g.vertex_count();
    let mut forest = Forest::new(n);
    let outside = |v: usize| metric.d(0, v) as usize >= r;
    for &(u, v) in g.edges() {
        if outside(u) && outside(v) {
            forest.join(u, v);
        }
    }
    let mut roots: Vec<usize> = (0..n).filter(|&v| metric.d(0, v) as usize == radius).map(|v| forest.root(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

pub fn coarse_toolkit(c: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(0xba11);

    let mut shrinks = 0;
    for named in &c.graphs {
        let g = &named.graph;
        let n = g.vertex_count();
        let metric = Metric::of(g);
        for _ in 0..100 {
            shrinks += 1;
            let inside: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.6)).collect();
            let depth = rng.gen_range(0..=3u32);
            let a = set_of(n, &inside);
            let expected: Vec<bool> =
                (0..n).map(|v| (0..n).filter(|&w| !inside[w]).all(|w| metric.d(v, w) > depth)).collect();
            let got = match shrink(g, &a, depth as usize) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("{}: {e}", named.name));
                    continue;
                }
            };
            let ball_inside =
                (0..n).filter(|&v| (0..n).any(|s| got.contains(s) && metric.d(s, v) <= depth)).all(|v| inside[v]);
            if got != set_of(n, &expected) || !ball_inside {
                failures.push(format!("{}: shrink at D={depth} breaks containment", named.name));
            }
        }
    }

    let mut pulled = 0;
    let maps = [
        ("ladder", QuasiMap::ladder_to_line(8).expect("map")),
        ("decorated_tree:3:4", QuasiMap::decorated_to_tree(3, 4, 8).expect("map")),
    ];
    for (name, q) in &maps {
        let (src, tgt) = (&q.source.graph, &q.target.graph);
        let (ms, mt) = (Metric::of(src), Metric::of(tgt));
        let stretch = src.edges().iter().map(|&(x, y)| mt.d(q.forward[x], q.forward[y])).max().unwrap_or(0) as usize;
        if stretch != q.stretch {
            failures.push(format!("{name}: stretch {} but edges stretch by {stretch}", q.stretch));
        }
        let boundary = |g: &FiniteGraph, side: &[bool]| -> Vec<usize> {
            (0..g.vertex_count()).filter(|&v| g.neighbors(v).iter().any(|&w| side[w] != side[v])).collect()
        };
        let diameter = |m: &Metric, set: &[usize]| -> usize {
            set.iter().flat_map(|&x| set.iter().map(move |&y| m.d(x, y))).max().unwrap_or(0) as usize
        };
        for &(u, v) in tgt.edges() {
            for (near, far) in [(u, v), (v, u)] {
                pulled += 1;
                let h: Vec<bool> = (0..tgt.vertex_count()).map(|z| mt.d(z, near) < mt.d(z, far)).collect();
                let pre: Vec<bool> = (0..src.vertex_count()).map(|x| h[q.forward[x]]).collect();
                let pre_boundary = boundary(src, &pre);
                let image: Vec<usize> = pre_boundary.iter().map(|&x| q.forward[x]).collect();
                let (lhs, base) = (diameter(&mt, &image), diameter(&mt, &boundary(tgt, &h)));
                match pullback_cut(q, &HalfSpace::new(set_of(tgt.vertex_count(), &h))) {
                    Ok(pb)
                        if lhs <= base + 2 * stretch
                            && pb.preimage.side() == &set_of(src.vertex_count(), &pre)
                            && pb.image_boundary_diameter == lhs
                            && pb.boundary_diameter == base
                            && pb.preimage_boundary_diameter == diameter(&ms, &pre_boundary) => {}
                    other => {
                        failures.push(format!("{name} cut at ({near},{far}): {lhs} vs {base} + 2*{stretch}, {other:?}"))
                    }
                }
            }
        }
    }

    let mut ends = Vec::new();
    for (spec, limit) in [("line", 2), ("ladder", 2), ("grid2d", 1)] {
        let generator: Generator = spec.parse().expect("generator");
        let truncations: Vec<_> = (3..=8).map(|radius| truncate(generator, radius).expect("truncation")).collect();
        let mut settled = Vec::new();
        for r in 0..=5 {
            let values: Vec<usize> = truncations
                .iter()
                .filter(|t| t.radius >= r + 3)
                .map(|t| {
                    let got = end_estimate(t, r).expect("r below the radius");
                    if got != end_count(&t.graph, t.radius, r) {
                        failures.push(format!("{spec} R={} r={r}: end_estimate {got} disagrees with BFS", t.radius));
                    }
                    got
                })
                .collect();
            if values.windows(2).any(|w| w[0] != w[1]) {
                failures.push(format!("{spec} r={r}: not constant over R >= r+3: {values:?}"));
            }
            settled.push(values[0]);
        }
        if settled.last() != Some(&limit) {
            failures.push(format!("{spec}: settles at {settled:?}, expected {limit}"));
        }
        ends.push(format!("{spec} {settled:?}"));
    }
    let tree = Generator::regular_tree(3).expect("degree 3");
    for radius in 4..=8 {
        let t = truncate(tree, radius).expect("truncation");
        let got = end_estimate(&t, 1).expect("r below the radius");
        if got != 3 || end_count(&t.graph, radius, 1) != 3 {
            failures.push(format!("regular_tree:3 R={radius} r=1: {got}"));
        }
    }

    Outcome::new(
        &failures,
        format!(
            "{shrinks} shrink/ball samples, {pulled} pulled tree cuts within diam + 2S, ends by r = 0..5: {}; regular_tree:3 at r=1 gives 3",
            ends.join(", ")
        ),
    )
}

pub fn determinism(_: &Corpus) -> Outcome {
    let data = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut inputs: Vec<Vec<String>> = ["p3", "p6", "c4", "c6", "star3", "q3", "grid3x3"]
        .iter()
        .map(|f| vec![data.join(format!("{f}.edges")).display().to_string(), "--radius".into(), "2".into()])
        .collect();
    for (spec, truncate, radius) in [
        ("line", "6", "1"),
        ("ladder", "8", "2"),
        ("grid2d", "3", "1"),
        ("regular_tree:3", "3", "1"),
        ("decorated_tree:3:4", "4", "2"),
    ] {
        inputs.push(["--gen", spec, "--truncate", truncate, "--radius", radius].map(String::from).to_vec());
    }
    let mut failures = Vec::new();
    let mut runs = 0;
    let mut bytes = BTreeMap::new();
    for args in &inputs {
        let outputs: Vec<Vec<u8>> = [None, None, Some("1"), Some("4")]
            .iter()
            .map(|threads| {
                runs += 1;
                let mut cmd = Command::new(env!("CARGO_BIN_EXE_medianforge"));
                cmd.arg("pipeline").args(args);
                if let Some(t) = threads {
                    cmd.env("RAYON_NUM_THREADS", t);
                }
                let out = cmd.output().expect("binary runs");
                if !out.status.success() {
                    failures.push(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr).trim()));
                }
                out.stdout
            })
            .collect();
        if outputs.windows(2).any(|w| w[0] != w[1]) {
            failures.push(format!("{args:?}: outputs differ"));
        }
        bytes.insert(args.join(" "), outputs[0].len());
    }
    Outcome::new(
        &failures,
        format!(
            "{runs} pipeline runs over {} inputs, byte-identical across repeats and thread counts ({} bytes total)",
            inputs.len(),
            bytes.values().sum::<usize>()
        ),
    )
}
