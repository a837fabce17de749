//! Finite windows onto infinite locally finite graphs: generators, ball
//! truncations, end counts of annuli, ray prefixes, and the shrink and
//! pullback devices used to move cut families along quasi-isometries.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::cuts::{connectedize, density_criterion, DensityReport};
use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::pocset::{HalfSpace, Pocset};
use crate::vertex_set::VertexSet;

/// Vertex of a generated graph as integer coordinates. Tree vertices are
/// child-index words; decorated-tree vertices append the cycle position.
pub type Label = Vec<i64>;

/// Default cap on truncation size.
pub const DEFAULT_VERTEX_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Line,
    Ladder,
    Grid2d,
    RegularTree(usize),
    DecoratedTree { degree: usize, cycle_len: usize },
}

impl Generator {
    pub fn regular_tree(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadParams(format!("regular tree degree {k} must be at least 2")));
        }
        Ok(Generator::RegularTree(k))
    }

    pub fn decorated_tree(degree: usize, cycle_len: usize) -> Result<Self> {
        Self::regular_tree(degree)?;
        if cycle_len < 3 {
            return Err(Error::BadParams(format!("cycle length {cycle_len} must be at least 3")));
        }
        Ok(Generator::DecoratedTree { degree, cycle_len })
    }

    pub fn root(&self) -> Label {
        match self {
            Generator::Line => vec![0],
            Generator::Ladder | Generator::Grid2d => vec![0, 0],
            Generator::RegularTree(_) => vec![],
            Generator::DecoratedTree { .. } => vec![0],
        }
    }

    /// Children of a tree word, in index order.
    fn children(word: &[i64], k: usize) -> impl Iterator<Item = Label> + '_ {
        let count = if word.is_empty() { k } else { k - 1 };
        (0..count as i64).map(move |c| {
            let mut w = word.to_vec();
            w.push(c);
            w
        })
    }

    fn tree_neighbors(word: &[i64], k: usize) -> Vec<Label> {
        let mut out = Vec::with_capacity(k);
        if let Some((_, parent)) = word.split_last() {
            out.push(parent.to_vec());
        }
        out.extend(Self::children(word, k));
        out
    }

    /// Neighbours in a fixed order.
    pub fn neighbors(&self, v: &[i64]) -> Vec<Label> {
        match *self {
            Generator::Line => vec![vec![v[0] - 1], vec![v[0] + 1]],
            Generator::Ladder => vec![vec![v[0] - 1, v[1]], vec![v[0] + 1, v[1]], vec![v[0], 1 - v[1]]],
            Generator::Grid2d => {
                vec![vec![v[0] - 1, v[1]], vec![v[0] + 1, v[1]], vec![v[0], v[1] - 1], vec![v[0], v[1] + 1]]
            }
            Generator::RegularTree(k) => Self::tree_neighbors(v, k),
            Generator::DecoratedTree { degree, cycle_len } => {
                let (&j, word) = v.split_last().expect("decorated label has a cycle position");
                let len = cycle_len as i64;
                let at = |w: &[i64], pos: i64| {
                    let mut l = w.to_vec();
                    l.push(pos);
                    l
                };
                let mut out = vec![at(word, (j + len - 1) % len), at(word, (j + 1) % len)];
                if j == 0 {
                    out.extend(Self::tree_neighbors(word, degree).into_iter().map(|w| at(&w, 0)));
                }
                out
            }
        }
    }

    /// Vertex token for edge-list output.
    pub fn name(&self, v: &[i64]) -> String {
        let word = |w: &[i64]| w.iter().fold(String::from("t"), |s, c| format!("{s}.{c}"));
        match self {
            Generator::Line => format!("v{}", v[0]),
            Generator::Ladder | Generator::Grid2d => format!("v{}_{}", v[0], v[1]),
            Generator::RegularTree(_) => word(v),
            Generator::DecoratedTree { .. } => {
                let (j, w) = v.split_last().expect("decorated label has a cycle position");
                format!("{}_c{j}", word(w))
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Line => write!(f, "line"),
            Generator::Ladder => write!(f, "ladder"),
            Generator::Grid2d => write!(f, "grid2d"),
            Generator::RegularTree(k) => write!(f, "regular_tree:{k}"),
            Generator::DecoratedTree { degree, cycle_len } => write!(f, "decorated_tree:{degree}:{cycle_len}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// `line`, `ladder`, `grid2d`, `regular_tree:K`, `decorated_tree:K:L`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::BadParams(format!("`{t}` is not a count")));
        match parts.as_slice() {
            ["line"] => Ok(Generator::Line),
            ["ladder"] => Ok(Generator::Ladder),
            ["grid2d"] => Ok(Generator::Grid2d),
            ["regular_tree", k] => Generator::regular_tree(num(k)?),
            ["decorated_tree", k, l] => Generator::decorated_tree(num(k)?, num(l)?),
            _ => Err(Error::BadParams(format!("unknown generator `{s}`"))),
        }
    }
}

/// Induced subgraph on the ball of radius `radius` about the root.
#[derive(Debug, Clone)]
pub struct BallTruncation {
    pub generator: Generator,
    pub radius: usize,
    /// Vertices in breadth-first order from the root (vertex 0).
    pub graph: FiniteGraph,
    pub labels: Vec<Label>,
    /// Vertices at distance exactly `radius`.
    pub frontier: VertexSet,
    index: HashMap<Label, usize>,
}

impl BallTruncation {
    pub fn vertex_of(&self, label: &[i64]) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn root(&self) -> usize {
        0
    }

    /// Edge list followed by a commented frontier block.
    pub fn to_annotated_edge_list(&self) -> String {
        let mut out = format!("# truncation {} radius {}\n", self.generator, self.radius);
        if self.graph.edge_count() == 0 {
            out.push_str(&format!("# isolated {}\n", self.graph.name(0)));
        }
        out.push_str(&self.graph.to_edge_list());
        out.push_str("# frontier\n");
        for v in self.frontier.iter() {
            out.push_str(&format!("# {}\n", self.graph.name(v)));
        }
        out
    }
}

pub fn truncate(generator: Generator, radius: usize) -> Result<BallTruncation> {
    truncate_with(generator, radius, DEFAULT_VERTEX_BUDGET)
}

pub fn truncate_with(generator: Generator, radius: usize, budget: usize) -> Result<BallTruncation> {
    let root = generator.root();
    let mut index: HashMap<Label, usize> = HashMap::from([(root.clone(), 0)]);
    let mut labels = vec![root];
    let mut depth = vec![0usize];
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        if depth[u] == radius {
            continue;
        }
        for w in generator.neighbors(&labels[u]) {
            if !index.contains_key(&w) {
                if labels.len() == budget {
                    return Err(Error::BudgetExceeded { what: "truncation vertices", cap: budget });
                }
                index.insert(w.clone(), labels.len());
                labels.push(w);
                depth.push(depth[u] + 1);
                queue.push_back(labels.len() - 1);
            }
        }
    }
    let mut edges = Vec::new();
    for (u, label) in labels.iter().enumerate() {
        for w in generator.neighbors(label) {
            if let Some(&v) = index.get(&w) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    let names = labels.iter().map(|l| generator.name(l)).collect();
    let graph = FiniteGraph::from_edges(names, edges)?;
    let n = labels.len();
    let frontier = VertexSet::from_iter(n, (0..n).filter(|&v| depth[v] == radius));
    Ok(BallTruncation { generator, radius, graph, labels, frontier, index })
}

/// Components of `{v : d(root, v) >= r}` that reach the frontier.
pub fn end_estimate(t: &BallTruncation, r: usize) -> Result<usize> {
    if r >= t.radius {
        return Err(Error::RadiusOrder { inner: r, outer: t.radius });
    }
    let row = t.graph.dist_row(t.root());
    let n = t.graph.vertex_count();
    let outside = VertexSet::from_iter(n, (0..n).filter(|&v| row[v] as usize >= r));
    Ok(t.graph.components(&outside).iter().filter(|c| c.intersects(&t.frontier)).count())
}

/// Shortest path inside `a` from its least frontier-connected vertex to the
/// frontier, moving to the least neighbour that gets closer.
pub fn ray_prefix(t: &BallTruncation, a: &VertexSet) -> Result<Vec<usize>> {
    let g = &t.graph;
    g.check_set(a)?;
    let n = g.vertex_count();
    let mut to_frontier = vec![usize::MAX; n];
    let mut queue: VecDeque<usize> = a.intersection(&t.frontier).iter().collect();
    for &f in &queue {
        to_frontier[f] = 0;
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if a.contains(w) && to_frontier[w] == usize::MAX {
                to_frontier[w] = to_frontier[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let Some(mut at) = a.iter().find(|&v| to_frontier[v] != usize::MAX) else {
        return Err(Error::NoRay);
    };
    let mut path = vec![at];
    while to_frontier[at] > 0 {
        at = *g
            .neighbors(at)
            .iter()
            .find(|&&w| a.contains(w) && to_frontier[w] + 1 == to_frontier[at])
            .expect("distance labels descend to the frontier");
        path.push(at);
    }
    Ok(path)
}

/// `¬B_D(¬A)`: the vertices of `A` at distance more than `d` from its
/// complement.
pub fn shrink(g: &FiniteGraph, a: &VertexSet, d: usize) -> Result<VertexSet> {
    g.check_set(a)?;
    let outside = a.complement();
    if outside.is_empty() {
        return Ok(a.clone());
    }
    Ok(g.ball(&outside, d)?.complement())
}

/// Coarse map between two truncations given as vertex tables.
#[derive(Debug, Clone)]
pub struct QuasiMap {
    pub source: BallTruncation,
    pub target: BallTruncation,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
    /// Largest target distance between images of adjacent source vertices.
    pub stretch: usize,
    /// Largest source distance from a non-frontier vertex to its round trip.
    pub displacement: usize,
}

impl QuasiMap {
    pub fn new(
        source: BallTruncation,
        target: BallTruncation,
        forward: Vec<usize>,
        backward: Vec<usize>,
    ) -> Result<Self> {
        let (ns, nt) = (source.graph.vertex_count(), target.graph.vertex_count());
        if forward.len() != ns || forward.iter().any(|&y| y >= nt) {
            return Err(Error::MapDomain("forward table does not map source into target".into()));
        }
        if backward.len() != nt || backward.iter().any(|&x| x >= ns) {
            return Err(Error::MapDomain("backward table does not map target into source".into()));
        }
        let stretch =
            source.graph.edges().iter().map(|&(a, b)| target.graph.dist(forward[a], forward[b])).max().unwrap_or(0);
        let displacement = (0..ns)
            .filter(|&x| !source.frontier.contains(x))
            .map(|x| source.graph.dist(x, backward[forward[x]]))
            .max()
            .unwrap_or(0);
        Ok(Self { source, target, forward, backward, stretch, displacement })
    }

    /// Builds the tables from label maps; every image must lie in the
    /// other ball.
    pub fn from_labels<F, G>(source: BallTruncation, target: BallTruncation, f: F, g: G) -> Result<Self>
    where
        F: Fn(&[i64]) -> Label,
        G: Fn(&[i64]) -> Label,
    {
        let look = |t: &BallTruncation, l: Label, what: &str| {
            t.vertex_of(&l).ok_or_else(|| Error::MapDomain(format!("{what} image {l:?} lies outside the ball")))
        };
        let forward = source.labels.iter().map(|l| look(&target, f(l), "forward")).collect::<Result<_>>()?;
        let backward = target.labels.iter().map(|l| look(&source, g(l), "backward")).collect::<Result<_>>()?;
        Self::new(source, target, forward, backward)
    }

    pub fn identity(t: BallTruncation) -> Self {
        let n = t.graph.vertex_count();
        let id: Vec<usize> = (0..n).collect();
        Self::new(t.clone(), t, id.clone(), id).expect("identity tables are valid")
    }

    /// Ladder onto the line by forgetting the rail.
    pub fn ladder_to_line(radius: usize) -> Result<Self> {
        Self::from_labels(
            truncate(Generator::Ladder, radius)?,
            truncate(Generator::Line, radius)?,
            |l| vec![l[0]],
            |l| vec![l[0], 0],
        )
    }

    /// Decorated tree onto its underlying tree by collapsing each cycle.
    pub fn decorated_to_tree(degree: usize, cycle_len: usize, radius: usize) -> Result<Self> {
        Self::from_labels(
            truncate(Generator::decorated_tree(degree, cycle_len)?, radius)?,
            truncate(Generator::regular_tree(degree)?, radius)?,
            |l| l[..l.len() - 1].to_vec(),
            |l| {
                let mut v = l.to_vec();
                v.push(0);
                v
            },
        )
    }
}

/// Boundary diameters around a preimage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub preimage: HalfSpace,
    /// `diam ∂_v f⁻¹H` in the source.
    pub preimage_boundary_diameter: usize,
    /// `diam ∂_v H` in the target.
    pub boundary_diameter: usize,
    /// `diam f(∂_v f⁻¹H)` in the target; at most `boundary_diameter + 2S`.
    pub image_boundary_diameter: usize,
}

pub fn pullback_cut(q: &QuasiMap, h: &HalfSpace) -> Result<Pullback> {
    let nt = q.target.graph.vertex_count();
    if h.side().universe() != nt {
        return Err(Error::MapDomain(format!("half-space has {} vertices, target has {nt}", h.side().universe())));
    }
    let ns = q.source.graph.vertex_count();
    let preimage = VertexSet::from_iter(ns, (0..ns).filter(|&x| h.side().contains(q.forward[x])));
    let pre_boundary = q.source.graph.vertex_boundary(&preimage);
    let image = VertexSet::from_iter(nt, pre_boundary.iter().map(|x| q.forward[x]));
    let report = Pullback {
        preimage_boundary_diameter: q.source.graph.diameter(&pre_boundary),
        boundary_diameter: q.target.graph.diameter(&q.target.graph.vertex_boundary(h.side())),
        image_boundary_diameter: q.target.graph.diameter(&image),
        preimage: HalfSpace::new(preimage),
    };
    if report.image_boundary_diameter > report.boundary_diameter + 2 * q.stretch {
        return Err(Error::Invariant(format!(
            "pulled boundary image has diameter {} above {} + 2*{}",
            report.image_boundary_diameter, report.boundary_diameter, q.stretch
        )));
    }
    Ok(report)
}

/// Cuts pulled back from a tree ball, made connected, and filtered by
/// boundary diameter.
#[derive(Debug, Clone)]
pub struct QuasiTreeCuts {
    pub pocset: Pocset,
    /// Member indices whose vertex boundary meets the frontier.
    pub untrusted: Vec<usize>,
}

impl QuasiTreeCuts {
    pub fn is_trusted(&self, member: usize) -> bool {
        self.untrusted.binary_search(&member).is_err()
    }

    /// Density quantities over the trusted members only.
    pub fn trusted_density(&self) -> Result<DensityReport> {
        let sides = self.pocset.nontrivial().filter(|&i| self.is_trusted(i)).map(|i| self.pocset.side(i).clone());
        Ok(density_criterion(&Pocset::from_family(self.pocset.graph(), sides)?))
    }
}

pub fn quasi_tree_cut_family(t: &BallTruncation, q: &QuasiMap, max_diameter: usize) -> Result<QuasiTreeCuts> {
    if q.source.graph.names() != t.graph.names() {
        return Err(Error::MapDomain("quasi-map source is not this truncation".into()));
    }
    let tree = &q.target.graph;
    if tree.edge_count() + 1 != tree.vertex_count() {
        return Err(Error::MapDomain("quasi-map target is not a tree".into()));
    }
    let g = &t.graph;
    let mut sides = Vec::new();
    for &(u, v) in tree.edges() {
        let side = HalfSpace::new(tree.cone_unchecked(v, u));
        let pulled = pullback_cut(q, &side)?.preimage;
        if pulled.is_trivial() {
            continue;
        }
        for h in connectedize(g, &pulled)? {
            if g.diameter(&g.vertex_boundary(h.side())) <= max_diameter {
                sides.push(h.into_side());
            }
        }
    }
    let pocset = Pocset::from_family(g, sides)?;
    let untrusted =
        pocset.nontrivial().filter(|&i| g.vertex_boundary(pocset.side(i)).intersects(&t.frontier)).collect();
    Ok(QuasiTreeCuts { pocset, untrusted })
}
