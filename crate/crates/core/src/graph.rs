//! Finite simple connected graphs with their path metric.
//!
//! Vertices are dense indices `0..n` in first-appearance order; every
//! downstream tie-break is phrased in terms of this order and of the edge
//! order (the order edges were supplied in).

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::geometry::MedianCertificate;
use crate::vertex_set::VertexSet;

/// Graphs up to this many vertices get their distance table filled at
/// construction; larger ones fill rows on first use.
pub const EAGER_DISTANCE_LIMIT: usize = 5_000;

/// An undirected, simple, connected graph on ordered vertices.
///
/// Cloning is cheap: the payload is shared and immutable.
#[derive(Clone)]
pub struct FiniteGraph {
    inner: Arc<Inner>,
}

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_ids: HashMap<(usize, usize), usize>,
    dist: Vec<OnceLock<Vec<u32>>>,
    median: OnceLock<MedianCertificate>,
}

/// Which boundary operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// `A ∩ B_1(¬A)`
    InnerVertex,
    /// inner vertex boundary of the complement
    OuterVertex,
    /// directed edges from the outer into the inner vertex boundary
    InwardEdge,
    /// inward edges of the complement
    OutwardEdge,
    /// inner ⊔ outer vertex boundary
    Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Boundary {
    Vertices(VertexSet),
    /// Directed `(from, to)` pairs, sorted.
    Edges(Vec<(usize, usize)>),
}

fn normalize(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn valid_token(tok: &str) -> bool {
    !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'))
}

/// Parses an edge-list document: one `u v` pair per line, `#` comments,
/// blank lines ignored. Vertex order is first appearance.
pub fn parse_graph(text: &str) -> Result<FiniteGraph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("expected two vertex tokens, found {}", toks.len()),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&toks) {
            if !valid_token(tok) {
                return Err(Error::Parse { line: lineno + 1, message: format!("invalid vertex token `{tok}`") });
            }
            *slot = *index.entry(tok.to_string()).or_insert_with(|| {
                names.push(tok.to_string());
                names.len() - 1
            });
        }
        edges.push((ends[0], ends[1]));
    }
    if edges.is_empty() {
        return Err(Error::EmptyInput("edge list has no edges"));
    }
    FiniteGraph::from_edges(names, edges)
}

impl FiniteGraph {
    /// Builds a graph from vertex names and index pairs. The edge order is
    /// the order of `edges`; each pair keeps the orientation it was given in.
    pub fn from_edges(names: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyInput("graph has no vertices"));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::NotSimple(format!("duplicate vertex name `{name}`")));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_ids = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(Error::NotSimple(format!("loop at `{}`", names[u])));
            }
            if edge_ids.insert(normalize(u, v), id).is_some() {
                return Err(Error::NotSimple(format!("duplicate edge `{}`-`{}`", names[u], names[v])));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let graph = FiniteGraph {
            inner: Arc::new(Inner {
                names,
                index,
                adj,
                edges,
                edge_ids,
                dist: (0..n).map(|_| OnceLock::new()).collect(),
                median: OnceLock::new(),
            }),
        };
        let components = graph.components(&VertexSet::full(n)).len();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        if n <= EAGER_DISTANCE_LIMIT {
            for v in 0..n {
                graph.dist_row(v);
            }
        }
        Ok(graph)
    }

    /// Convenience constructor from named pairs; vertex order is first
    /// appearance.
    pub fn from_named_edges<'a>(pairs: &[(&'a str, &'a str)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<&'a str, usize> = HashMap::new();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let mut id = |s: &'a str| {
                *index.entry(s).or_insert_with(|| {
                    names.push(s.to_string());
                    names.len() - 1
                })
            };
            let (u, v) = (id(a), id(b));
            edges.push((u, v));
        }
        Self::from_edges(names, edges)
    }

    /// A one-vertex graph (no edges), e.g. the radius-0 ball.
    pub fn singleton(name: &str) -> Self {
        Self::from_edges(vec![name.to_string()], Vec::new()).expect("one vertex is connected")
    }

    /// Same graph with vertices sorted by name and edges sorted by their
    /// endpoints under the new order.
    pub fn relabel_lex(&self) -> FiniteGraph {
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by(|&a, &b| self.name(a).cmp(self.name(b)));
        let mut new_of = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let names = order.iter().map(|&v| self.name(v).to_string()).collect();
        let mut edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(u, v)| normalize(new_of[u], new_of[v])).collect();
        edges.sort_unstable();
        FiniteGraph::from_edges(names, edges).expect("relabelling preserves validity")
    }

    pub fn vertex_count(&self) -> usize {
        self.inner.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.inner.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// Looks a vertex up by name.
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.inner.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Looks several vertices up by name.
    pub fn set_of(&self, names: &[&str]) -> Result<VertexSet> {
        let mut s = VertexSet::empty(self.vertex_count());
        for name in names {
            s.insert(self.vertex(name)?);
        }
        Ok(s)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    pub(crate) fn check_set(&self, a: &VertexSet) -> Result<()> {
        if a.universe() == self.vertex_count() {
            Ok(())
        } else {
            Err(Error::GraphMismatch { left: a.universe(), right: self.vertex_count() })
        }
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.inner.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.inner.adj[v].len()
    }

    /// Edges in edge order, with their input orientation.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.inner.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.inner.edge_ids.get(&normalize(u, v)).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub(crate) fn median_cache(&self) -> &OnceLock<MedianCertificate> {
        &self.inner.median
    }

    /// Breadth-first distances from `v`, memoized.
    pub fn dist_row(&self, v: usize) -> &[u32] {
        self.inner.dist[v].get_or_init(|| {
            let n = self.vertex_count();
            let mut d = vec![u32::MAX; n];
            let mut queue = VecDeque::from([v]);
            d[v] = 0;
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if d[w] == u32::MAX {
                        d[w] = d[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
    }

    /// Unchecked distance; panics on out-of-range vertices.
    #[inline]
    pub fn dist(&self, x: usize, y: usize) -> usize {
        self.dist_row(x)[y] as usize
    }

    pub fn distance(&self, x: usize, y: usize) -> Result<usize> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        Ok(self.dist(x, y))
    }

    /// `z ∈ [x, y]`: `d(x, z) + d(z, y) = d(x, y)`.
    #[inline]
    pub fn between(&self, x: usize, z: usize, y: usize) -> bool {
        self.dist(x, z) + self.dist(z, y) == self.dist(x, y)
    }

    /// Closed `r`-ball around a nonempty set.
    pub fn ball(&self, a: &VertexSet, r: usize) -> Result<VertexSet> {
        self.check_set(a)?;
        if a.is_empty() {
            return Err(Error::EmptyInput("ball centre set"));
        }
        let mut seen = a.clone();
        let mut frontier: Vec<usize> = a.to_vec();
        for _ in 0..r {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in self.neighbors(u) {
                    if seen.insert(w) {
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(seen)
    }

    pub fn inner_vertex_boundary(&self, a: &VertexSet) -> VertexSet {
        VertexSet::from_iter(
            self.vertex_count(),
            a.iter().filter(|&v| self.neighbors(v).iter().any(|&w| !a.contains(w))),
        )
    }

    pub fn outer_vertex_boundary(&self, a: &VertexSet) -> VertexSet {
        self.inner_vertex_boundary(&a.complement())
    }

    pub fn vertex_boundary(&self, a: &VertexSet) -> VertexSet {
        self.inner_vertex_boundary(a).union(&self.outer_vertex_boundary(a))
    }

    /// Directed edges `(u, v)` with `u ∉ A`, `v ∈ A`, sorted.
    pub fn inward_edge_boundary(&self, a: &VertexSet) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = a
            .complement()
            .iter()
            .flat_map(|u| self.neighbors(u).iter().filter(|&&v| a.contains(v)).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn outward_edge_boundary(&self, a: &VertexSet) -> Vec<(usize, usize)> {
        self.inward_edge_boundary(&a.complement())
    }

    pub fn boundary(&self, a: &VertexSet, kind: BoundaryKind) -> Result<Boundary> {
        self.check_set(a)?;
        Ok(match kind {
            BoundaryKind::InnerVertex => Boundary::Vertices(self.inner_vertex_boundary(a)),
            BoundaryKind::OuterVertex => Boundary::Vertices(self.outer_vertex_boundary(a)),
            BoundaryKind::Vertex => Boundary::Vertices(self.vertex_boundary(a)),
            BoundaryKind::InwardEdge => Boundary::Edges(self.inward_edge_boundary(a)),
            BoundaryKind::OutwardEdge => Boundary::Edges(self.outward_edge_boundary(a)),
        })
    }

    /// Largest ambient distance between two members; 0 for sets of size ≤ 1.
    pub fn diameter(&self, a: &VertexSet) -> usize {
        let members = a.to_vec();
        let mut best = 0;
        for (i, &x) in members.iter().enumerate() {
            let row = self.dist_row(x);
            for &y in &members[i + 1..] {
                best = best.max(row[y] as usize);
            }
        }
        best
    }

    /// Distance between two nonempty sets.
    pub fn set_distance(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter()
            .flat_map(|x| {
                let row = self.dist_row(x);
                b.iter().map(move |y| row[y] as usize)
            })
            .min()
            .unwrap_or(usize::MAX)
    }

    /// The union of all geodesics between `x` and `y`.
    pub fn interval(&self, x: usize, y: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        Ok(self.interval_unchecked(x, y))
    }

    pub(crate) fn interval_unchecked(&self, x: usize, y: usize) -> VertexSet {
        let (dx, dy) = (self.dist_row(x), self.dist_row(y));
        let dxy = dx[y];
        VertexSet::from_iter(self.vertex_count(), (0..self.vertex_count()).filter(|&z| dx[z] + dy[z] == dxy))
    }

    /// Least superset of `a` closed under intervals between its members.
    pub fn convex_hull(&self, a: &VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        if a.is_empty() {
            return Err(Error::EmptyInput("convex hull of the empty set"));
        }
        let mut hull = a.clone();
        let mut members: Vec<usize> = a.to_vec();
        let mut queue: VecDeque<usize> = members.iter().copied().collect();
        let mut processed = 0usize;
        while let Some(m) = queue.pop_front() {
            processed += 1;
            // pair the new member with everything processed before it
            for i in 0..processed - 1 {
                let other = members[i];
                for z in self.interval_unchecked(m, other).iter() {
                    if hull.insert(z) {
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
        }
        Ok(hull)
    }

    pub fn is_convex(&self, a: &VertexSet) -> Result<bool> {
        if a.is_empty() {
            return Ok(true);
        }
        Ok(&self.convex_hull(a)? == a)
    }

    /// `cone_x(y) = {z : y ∈ [x, z]}`.
    pub fn cone(&self, x: usize, y: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::EqualVertices);
        }
        Ok(self.cone_unchecked(x, y))
    }

    pub(crate) fn cone_unchecked(&self, x: usize, y: usize) -> VertexSet {
        let (dx, dy) = (self.dist_row(x), self.dist_row(y));
        let dxy = dx[y];
        VertexSet::from_iter(self.vertex_count(), (0..self.vertex_count()).filter(|&z| dxy + dy[z] == dx[z]))
    }

    /// Connected components of the induced subgraph on `a`, each listed once,
    /// ordered by least member.
    pub fn components(&self, a: &VertexSet) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for start in a.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(n, start);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if a.contains(w) && seen.insert(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether the induced subgraph on a nonempty set is connected.
    pub fn is_connected_set(&self, a: &VertexSet) -> bool {
        match a.first() {
            None => false,
            Some(start) => {
                let mut seen = VertexSet::singleton(self.vertex_count(), start);
                let mut stack = vec![start];
                let mut count = 1;
                while let Some(u) = stack.pop() {
                    for &w in self.neighbors(u) {
                        if a.contains(w) && seen.insert(w) {
                            count += 1;
                            stack.push(w);
                        }
                    }
                }
                count == a.len()
            }
        }
    }

    /// Serializes back to the edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in self.edges() {
            out.push_str(self.name(u));
            out.push(' ');
            out.push_str(self.name(v));
            out.push('\n');
        }
        out
    }

    pub fn names_of(&self, a: &VertexSet) -> Vec<String> {
        a.iter().map(|v| self.name(v).to_string()).collect()
    }
}

impl fmt::Debug for FiniteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGraph").field("vertices", &self.inner.names).field("edges", &self.inner.edges).finish()
    }
}
