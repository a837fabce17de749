//! Canonical spanning trees of median graphs: hyperplanes are coloured into
//! nested classes and the tree is grown one colour at a time, so that after
//! each stage the forest components are exactly the blocks of the remaining
//! colours.

use std::fmt;

use crate::cuts::blocks_of;
use crate::error::{Error, Result};
use crate::geometry::{hyperplanes, Hyperplane};
use crate::graph::FiniteGraph;
use crate::pocset::empty_corner;
use crate::union_find::UnionFind;
use crate::vertex_set::VertexSet;

/// Hyperplanes of a median graph, adjacent when their vertex boundaries
/// meet. Node `i` is hyperplane `i` in least-edge order.
#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    pub hyperplanes: Vec<Hyperplane>,
    /// Sorted neighbour lists.
    pub adjacency: Vec<Vec<usize>>,
}

impl IntersectionGraph {
    pub fn node_count(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub fn hyperplane_intersection_graph(g: &FiniteGraph) -> Result<IntersectionGraph> {
    let hs = hyperplanes(g)?;
    let boundaries: Vec<VertexSet> = hs.iter().map(|h| g.vertex_boundary(&h.sides.0)).collect();
    let adjacency = (0..hs.len())
        .map(|i| (0..hs.len()).filter(|&j| j != i && boundaries[i].intersects(&boundaries[j])).collect())
        .collect();
    Ok(IntersectionGraph { hyperplanes: hs, adjacency })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourClasses {
    /// Node ids per colour, in colouring order.
    pub classes: Vec<Vec<usize>>,
    pub colour_of: Vec<usize>,
}

impl ColourClasses {
    pub fn colour_count(&self) -> usize {
        self.classes.len()
    }
}

/// First-fit colouring in node order.
pub fn greedy_colouring(ig: &IntersectionGraph) -> Result<ColourClasses> {
    let order: Vec<usize> = (0..ig.node_count()).collect();
    greedy_colouring_in_order(ig, &order)
}

/// First-fit colouring visiting nodes in `order`; every class is checked to
/// be pairwise nested.
pub fn greedy_colouring_in_order(ig: &IntersectionGraph, order: &[usize]) -> Result<ColourClasses> {
    let n = ig.node_count();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::BadParams("colouring order must list every hyperplane once".into()));
    }
    let mut colour_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in order {
        let used: Vec<usize> = ig.adjacency[v].iter().map(|&w| colour_of[w]).filter(|&c| c != usize::MAX).collect();
        let c = (0..).find(|c| !used.contains(c)).expect("unbounded colours");
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        colour_of[v] = c;
    }
    for (colour, class) in classes.iter().enumerate() {
        for (a, &i) in class.iter().enumerate() {
            for &j in &class[a + 1..] {
                if empty_corner(&ig.hyperplanes[i].sides.0, &ig.hyperplanes[j].sides.0).is_none() {
                    return Err(Error::NestednessViolation {
                        colour,
                        detail: format!("hyperplanes {i} and {j} cross"),
                    });
                }
            }
        }
    }
    Ok(ColourClasses { classes, colour_of })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// Tree edges as graph edge ids, ordered by stage then edge id.
    pub edges: Vec<usize>,
    /// Stage (colour) at which each edge was added, parallel to `edges`.
    pub stage_of: Vec<usize>,
    /// One side of every hyperplane, grouped by colour.
    pub colour_sides: Vec<Vec<VertexSet>>,
}

impl SpanningTree {
    /// Number of edges added at each stage.
    pub fn stage_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.colour_sides.len()];
        for &s in &self.stage_of {
            sizes[s] += 1;
        }
        sizes
    }
}

/// Blocks of the vertices under all hyperplanes of colour `>= from`.
fn colour_blocks(n: usize, colour_sides: &[Vec<VertexSet>], from: usize) -> Vec<usize> {
    blocks_of(n, colour_sides.iter().skip(from).flatten()).index
}

pub fn canonical_spanning_tree(g: &FiniteGraph) -> Result<SpanningTree> {
    let ig = hyperplane_intersection_graph(g)?;
    let colours = greedy_colouring(&ig)?;
    grow_tree(g, &ig, &colours)
}

/// Stage `n` joins, inside every block of the colours above `n`, the blocks
/// of colour `n` by the least edge of each separating hyperplane.
pub fn grow_tree(g: &FiniteGraph, ig: &IntersectionGraph, colours: &ColourClasses) -> Result<SpanningTree> {
    let n = g.vertex_count();
    let colour_sides: Vec<Vec<VertexSet>> = colours
        .classes
        .iter()
        .map(|class| class.iter().map(|&h| ig.hyperplanes[h].sides.0.clone()).collect())
        .collect();
    let mut forest = UnionFind::new(n);
    let mut edges = Vec::new();
    let mut stage_of = Vec::new();
    for (stage, class) in colours.classes.iter().enumerate() {
        let block = colour_blocks(n, &colour_sides, stage + 1);
        let block_count = block.iter().copied().max().map_or(0, |b| b + 1);
        let mut picks: Vec<usize> = Vec::new();
        for &h in class {
            let hp = &ig.hyperplanes[h];
            // per block: (meets side 0, meets side 1, least class edge inside)
            let mut seen = vec![(false, false, None::<usize>); block_count];
            for v in 0..n {
                if hp.sides.0.contains(v) {
                    seen[block[v]].0 = true;
                } else {
                    seen[block[v]].1 = true;
                }
            }
            for &e in &hp.edges {
                let (a, b) = g.edges()[e];
                if block[a] == block[b] && seen[block[a]].2.is_none() {
                    seen[block[a]].2 = Some(e);
                }
            }
            for (y, &(zero, one, edge)) in seen.iter().enumerate() {
                match (zero && one, edge) {
                    (true, Some(e)) => picks.push(e),
                    (true, None) => {
                        return Err(Error::Invariant(format!("hyperplane {h} splits block {y} without an edge in it")));
                    }
                    (false, Some(e)) => {
                        return Err(Error::Invariant(format!(
                            "edge {e} lies in block {y} but its hyperplane does not split it"
                        )));
                    }
                    (false, None) => {}
                }
            }
        }
        picks.sort_unstable();
        for e in picks {
            let (a, b) = g.edges()[e];
            if !forest.union(a, b) {
                return Err(Error::Invariant(format!("stage {stage} closed a cycle at edge {e}")));
            }
            edges.push(e);
            stage_of.push(stage);
        }
    }
    if edges.len() + 1 != n {
        return Err(Error::Invariant(format!("{} tree edges on {n} vertices", edges.len())));
    }
    Ok(SpanningTree { edges, stage_of, colour_sides })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeViolation {
    NotAnEdge(usize),
    Cycle { edge: usize },
    Components(usize),
    WrongCount { expected: usize, found: usize },
    StageMismatch { stage: usize },
    Malformed(String),
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeViolation::NotAnEdge(e) => write!(f, "edge id {e} is not an edge of the graph"),
            TreeViolation::Cycle { edge } => write!(f, "edge {edge} closes a cycle"),
            TreeViolation::Components(c) => write!(f, "tree has {c} components"),
            TreeViolation::WrongCount { expected, found } => write!(f, "expected {expected} edges, found {found}"),
            TreeViolation::StageMismatch { stage } => {
                write!(f, "forest before stage {stage} does not match the blocks of colours >= {stage}")
            }
            TreeViolation::Malformed(m) => write!(f, "malformed tree: {m}"),
        }
    }
}

/// Every violation found; empty means the tree is a spanning tree whose
/// stages satisfy the block invariant.
pub fn verify_spanning_tree(g: &FiniteGraph, t: &SpanningTree) -> Vec<TreeViolation> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if t.edges.len() != t.stage_of.len() {
        out.push(TreeViolation::Malformed("edges and stages differ in length".into()));
        return out;
    }
    if t.edges.len() + 1 != n {
        out.push(TreeViolation::WrongCount { expected: n - 1, found: t.edges.len() });
    }
    let mut uf = UnionFind::new(n);
    for &e in &t.edges {
        match g.edges().get(e) {
            None => out.push(TreeViolation::NotAnEdge(e)),
            Some(&(a, b)) => {
                if !uf.union(a, b) {
                    out.push(TreeViolation::Cycle { edge: e });
                }
            }
        }
    }
    let components = {
        let labels = uf.labels();
        labels.iter().copied().max().map_or(0, |l| l + 1)
    };
    if components != 1 {
        out.push(TreeViolation::Components(components));
    }
    if !out.is_empty() {
        return out;
    }
    if t.colour_sides.iter().flatten().any(|s| s.universe() != n)
        || t.stage_of.iter().any(|&s| s >= t.colour_sides.len())
    {
        out.push(TreeViolation::Malformed("colour data does not fit the graph".into()));
        return out;
    }
    for stage in 0..=t.colour_sides.len() {
        let mut uf = UnionFind::new(n);
        for (&e, &s) in t.edges.iter().zip(&t.stage_of) {
            if s < stage {
                let (a, b) = g.edges()[e];
                uf.union(a, b);
            }
        }
        if uf.labels() != colour_blocks(n, &t.colour_sides, stage) {
            out.push(TreeViolation::StageMismatch { stage });
        }
    }
    out
}
