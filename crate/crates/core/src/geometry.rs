//! Median-graph geometry: the median check, medians, gate projections,
//! hyperplanes, convex half-spaces, Helly witnesses and the roundtrip
//! between a median graph and the dual of its convex half-spaces.

use rayon::prelude::*;

use crate::dual::{build_dual_with, principal_orientation, DualMedianGraph, DEFAULT_ORIENTATION_BUDGET};
use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::pocset::{empty_corner, HalfSpace, Pocset};
use crate::union_find::UnionFind;
use crate::vertex_set::VertexSet;

/// A triple whose interval intersection is not a singleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub triple: [usize; 3],
    /// `[x,y] ∩ [y,z] ∩ [x,z]`, sorted.
    pub intersection: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianCertificate {
    pub is_median: bool,
    /// The least failing triple `x < y < z`, present iff `!is_median`.
    pub counterexample: Option<Counterexample>,
}

/// Word-packed bit rows for the hot triple loop.
struct Rows {
    words: usize,
    data: Vec<u64>,
}

impl Rows {
    fn new(count: usize, n: usize) -> Self {
        let words = n.div_ceil(64);
        Self { words, data: vec![0; count * words] }
    }

    fn set(&mut self, row: usize, bit: usize) {
        self.data[row * self.words + bit / 64] |= 1 << (bit % 64);
    }

    fn row(&self, row: usize) -> &[u64] {
        &self.data[row * self.words..(row + 1) * self.words]
    }
}

/// Number of set bits in `a & b & c`, saturating at 2.
fn triple_and_count(a: &[u64], b: &[u64], c: &[u64]) -> u32 {
    let mut total = 0;
    for i in 0..a.len() {
        total += (a[i] & b[i] & c[i]).count_ones();
        if total > 1 {
            return 2;
        }
    }
    total
}

/// First `(y, z)` with `x < y < z` whose triple with `x` fails.
fn first_failure_from(g: &FiniteGraph, x: usize) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    let dx = g.dist_row(x);
    let max_d = dx.iter().copied().max().unwrap_or(0) as usize;
    let mut spheres = Rows::new(max_d + 1, n);
    for (m, &d) in dx.iter().enumerate() {
        spheres.set(d as usize, m);
    }
    // intervals[y] = [x, y]
    let mut intervals = Rows::new(n, n);
    for y in x + 1..n {
        let dy = g.dist_row(y);
        let dxy = dx[y];
        for m in 0..n {
            if dx[m] + dy[m] == dxy {
                intervals.set(y, m);
            }
        }
    }
    for y in x + 1..n {
        let dy = g.dist_row(y);
        for z in y + 1..n {
            let twice = dx[y] as i64 + dx[z] as i64 - dy[z] as i64;
            if twice % 2 != 0 {
                return Some((y, z));
            }
            let k = (twice / 2) as usize;
            if triple_and_count(intervals.row(y), intervals.row(z), spheres.row(k)) != 1 {
                return Some((y, z));
            }
        }
    }
    None
}

fn triple_intersection(g: &FiniteGraph, x: usize, y: usize, z: usize) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&m| g.between(x, m, y) && g.between(y, m, z) && g.between(x, m, z)).collect()
}

/// Split labels of an isometric hypercube embedding.
///
/// Bit `j` of a label says which side of the `j`-th distinct edge split the
/// vertex lies on. The labels are accepted only after checking that graph
/// distance equals Hamming distance for every pair.
struct CubeLabels {
    bits: usize,
    words: usize,
    data: Vec<u64>,
}

impl CubeLabels {
    fn of(&self, v: usize) -> &[u64] {
        &self.data[v * self.words..(v + 1) * self.words]
    }
}

fn cube_labels(g: &FiniteGraph) -> Option<CubeLabels> {
    let n = g.vertex_count();
    let mut splits: Vec<VertexSet> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in g.edges() {
        let (da, db) = (g.dist_row(a), g.dist_row(b));
        let far = VertexSet::from_iter(n, (0..n).filter(|&z| da[z] > db[z]));
        let side = if far.contains(0) { far.complement() } else { far };
        if seen.insert(side.clone()) {
            splits.push(side);
        }
    }
    let words = splits.len().div_ceil(64).max(1);
    let mut data = vec![0u64; n * words];
    for (j, side) in splits.iter().enumerate() {
        for v in side.iter() {
            data[v * words + j / 64] |= 1 << (j % 64);
        }
    }
    let labels = CubeLabels { bits: splits.len(), words, data };
    let isometric = (0..n).all(|u| {
        let row = g.dist_row(u);
        (u + 1..n).all(|v| {
            let hamming: u32 = labels.of(u).iter().zip(labels.of(v)).map(|(a, b)| (a ^ b).count_ones()).sum();
            hamming == row[v]
        })
    });
    isometric.then_some(labels)
}

/// Median test for an embedded graph without visiting triples.
///
/// Orient every split side-by-side; an orientation is consistent when no two
/// chosen sides are disjoint. Consistent orientations form a connected flip
/// graph containing every vertex label, and a single flip is allowed exactly
/// at a chosen side that contains no other chosen side. The majority of a
/// triple is always consistent, and in a median graph every consistent
/// orientation is a vertex by Helly. So the graph is median iff no flip
/// leaves the labels, i.e. iff each vertex has as many minimal chosen sides
/// as neighbours.
fn flips_stay_inside(g: &FiniteGraph, labels: &CubeLabels) -> bool {
    let n = g.vertex_count();
    let bit = |v: usize, j: usize| labels.of(v)[j / 64] >> (j % 64) & 1;
    // side 2j holds the vertices with bit j clear, side 2j+1 the rest
    let sides = 2 * labels.bits;
    let mut members = Rows::new(sides, n);
    for v in 0..n {
        for j in 0..labels.bits {
            members.set(2 * j + bit(v, j) as usize, v);
        }
    }
    let subset = |a: usize, b: usize| members.row(a).iter().zip(members.row(b)).all(|(x, y)| x & !y == 0);
    // below[s] = sides of other splits contained in s
    let mut below = Rows::new(sides, sides);
    for s in 0..sides {
        for t in 0..sides {
            if s / 2 != t / 2 && subset(t, s) {
                below.set(s, t);
            }
        }
    }
    (0..n).into_par_iter().all(|v| {
        let mut chosen = Rows::new(1, sides);
        for j in 0..labels.bits {
            chosen.set(0, 2 * j + bit(v, j) as usize);
        }
        let minimal = (0..labels.bits)
            .filter(|&j| {
                let s = 2 * j + bit(v, j) as usize;
                below.row(s).iter().zip(chosen.row(0)).all(|(a, b)| a & b == 0)
            })
            .count();
        minimal == g.degree(v)
    })
}

/// Open-addressed set of the vertex labels.
struct LabelTable<'a> {
    labels: &'a CubeLabels,
    shift: u32,
    slots: Vec<u32>,
}

impl<'a> LabelTable<'a> {
    fn new(labels: &'a CubeLabels, n: usize) -> Self {
        let bits = (2 * n).next_power_of_two().trailing_zeros().max(1);
        let mut table = Self { labels, shift: 64 - bits, slots: vec![u32::MAX; 1 << bits] };
        for v in 0..n {
            let mut at = table.slot(labels.of(v));
            while table.slots[at] != u32::MAX {
                at = (at + 1) & (table.slots.len() - 1);
            }
            table.slots[at] = v as u32;
        }
        table
    }

    fn slot(&self, label: &[u64]) -> usize {
        let h = label.iter().fold(0u64, |h, &w| (h.rotate_left(29) ^ w).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        (h >> self.shift) as usize
    }

    fn contains(&self, label: &[u64]) -> bool {
        let mut at = self.slot(label);
        loop {
            match self.slots[at] {
                u32::MAX => return false,
                v if self.labels.of(v as usize) == label => return true,
                _ => at = (at + 1) & (self.slots.len() - 1),
            }
        }
    }
}

/// First failing `(x, y, z)` for an isometrically embedded graph: the only
/// possible common interval point is the vertex labelled by the bitwise
/// majority, so a triple fails iff that label is absent.
fn first_failure_by_majority(labels: &CubeLabels, n: usize) -> Option<[usize; 3]> {
    if labels.words == 1 {
        return first_failure_single_word(&labels.data);
    }
    let table = LabelTable::new(labels, n);
    let mut majority = vec![0u64; labels.words];
    for x in 0..n {
        for y in x + 1..n {
            let (lx, ly) = (labels.of(x), labels.of(y));
            for z in y + 1..n {
                let lz = labels.of(z);
                for i in 0..labels.words {
                    // agreeing coordinates of x and y win, z decides the rest
                    majority[i] = (lx[i] & ly[i]) | ((lx[i] ^ ly[i]) & lz[i]);
                }
                if !table.contains(&majority) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// [`first_failure_by_majority`] for labels that fit in one word.
fn first_failure_single_word(labels: &[u64]) -> Option<[usize; 3]> {
    let n = labels.len();
    let bits = (2 * n).next_power_of_two().trailing_zeros().max(1);
    let mask = (1usize << bits) - 1;
    let slot = |w: u64| (w.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> (64 - bits)) as usize;
    // labels are distinct, so an occupied flag plus the value is enough
    let mut keys = vec![0u64; 1 << bits];
    let mut used = vec![false; 1 << bits];
    for &w in labels {
        let mut at = slot(w);
        while used[at] {
            at = (at + 1) & mask;
        }
        used[at] = true;
        keys[at] = w;
    }
    let contains = |w: u64| {
        let mut at = slot(w);
        while used[at] {
            if keys[at] == w {
                return true;
            }
            at = (at + 1) & mask;
        }
        false
    };
    for x in 0..n {
        for y in x + 1..n {
            let (agree, differ) = (labels[x] & labels[y], labels[x] ^ labels[y]);
            if let Some(z) = (y + 1..n).find(|&z| !contains(agree | (differ & labels[z]))) {
                return Some([x, y, z]);
            }
        }
    }
    None
}

/// Exhaustive triple check; the verdict is cached on the graph.
///
/// Graphs that embed isometrically in a hypercube are certified by counting
/// minimal half-spaces at each vertex, and on failure scanned for majority
/// closure of their labels. Others are checked by intersecting intervals in
/// parallel over the least vertex of each triple. Either way the reported
/// triple is the least failing `x < y < z`.
pub fn check_median(g: &FiniteGraph) -> MedianCertificate {
    g.median_cache()
        .get_or_init(|| {
            let n = g.vertex_count();
            let failure = match cube_labels(g) {
                Some(labels) if flips_stay_inside(g, &labels) => None,
                Some(labels) => Some(
                    first_failure_by_majority(&labels, n).expect("a flip outside the labels implies a failing triple"),
                ),
                None => (0..n).into_par_iter().find_map_first(|x| first_failure_from(g, x).map(|(y, z)| [x, y, z])),
            };
            match failure {
                None => MedianCertificate { is_median: true, counterexample: None },
                Some(triple) => {
                    let [x, y, z] = triple;
                    MedianCertificate {
                        is_median: false,
                        counterexample: Some(Counterexample { triple, intersection: triple_intersection(g, x, y, z) }),
                    }
                }
            }
        })
        .clone()
}

/// Interval-intersection check without the embedding shortcut.
pub fn check_median_by_intervals(g: &FiniteGraph) -> MedianCertificate {
    let n = g.vertex_count();
    let failure = (0..n).into_par_iter().find_map_first(|x| first_failure_from(g, x).map(|(y, z)| [x, y, z]));
    let counterexample = failure.map(|triple| {
        let [x, y, z] = triple;
        Counterexample { triple, intersection: triple_intersection(g, x, y, z) }
    });
    MedianCertificate { is_median: counterexample.is_none(), counterexample }
}

pub(crate) fn require_median(g: &FiniteGraph) -> Result<()> {
    let cert = check_median(g);
    match cert.counterexample {
        None => Ok(()),
        Some(c) => {
            let [x, y, z] = c.triple;
            Err(Error::NotMedianGraph(format!(
                "triple ({}, {}, {}) has {} common interval points",
                g.name(x),
                g.name(y),
                g.name(z),
                c.intersection.len()
            )))
        }
    }
}

/// Median of a triple in a graph already known to be median.
pub(crate) fn median_unchecked(g: &FiniteGraph, x: usize, y: usize, z: usize) -> usize {
    let (dx, dy, dz) = (g.dist_row(x), g.dist_row(y), g.dist_row(z));
    let k = (dx[y] + dx[z] - dy[z]) / 2;
    (0..g.vertex_count())
        .find(|&m| dx[m] == k && dx[m] + dy[m] == dx[y] && dx[m] + dz[m] == dx[z])
        .expect("median graph has a median for every triple")
}

pub fn median(g: &FiniteGraph, x: usize, y: usize, z: usize) -> Result<usize> {
    for v in [x, y, z] {
        g.check_vertex(v)?;
    }
    require_median(g)?;
    Ok(median_unchecked(g, x, y, z))
}

/// Gate of `x` in `A`, scanning `A` in vertex order.
pub fn project(g: &FiniteGraph, a: &VertexSet, x: usize) -> Result<usize> {
    g.check_set(a)?;
    project_in_order(g, &a.to_vec(), x)
}

/// Gate of `x` in the set listed by `order`, starting from `order[0]` and
/// rescanning `order` until no member sees the current point outside
/// `[x, a]`.
pub fn project_in_order(g: &FiniteGraph, order: &[usize], x: usize) -> Result<usize> {
    g.check_vertex(x)?;
    for &a in order {
        g.check_vertex(a)?;
    }
    let Some(&start) = order.first() else {
        return Err(Error::EmptyInput("projection target"));
    };
    require_median(g)?;
    let mut current = start;
    let mut steps = 0;
    while let Some(&a) = order.iter().find(|&&a| !g.between(x, current, a)) {
        current = median_unchecked(g, x, a, current);
        steps += 1;
        if steps > g.dist(start, x) {
            return Err(Error::Invariant("projection did not settle within d(a0, x) steps".into()));
        }
    }
    Ok(current)
}

/// Edge class of a convex co-convex half-space together with both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    /// Edge ids in increasing order.
    pub edges: Vec<usize>,
    /// Side containing the tail of the least edge, then the other side.
    pub sides: (VertexSet, VertexSet),
}

impl Hyperplane {
    /// The side containing `v`.
    pub fn side_of(&self, v: usize) -> &VertexSet {
        if self.sides.0.contains(v) {
            &self.sides.0
        } else {
            &self.sides.1
        }
    }
}

/// Square-parallelism classes of edges, ordered by least edge id.
pub fn hyperplanes(g: &FiniteGraph) -> Result<Vec<Hyperplane>> {
    require_median(g)?;
    let m = g.edge_count();
    let mut uf = UnionFind::new(m);
    let edge = |a: usize, b: usize| g.edge_id(a, b).expect("adjacent");
    for v in 0..g.vertex_count() {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                for &w in g.neighbors(a) {
                    if w != v && g.has_edge(w, b) {
                        uf.union(edge(v, a), edge(b, w));
                        uf.union(edge(v, b), edge(a, w));
                    }
                }
            }
        }
    }
    let labels = uf.labels();
    let count = labels.iter().copied().max().map_or(0, |l| l + 1);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (e, &l) in labels.iter().enumerate() {
        classes[l].push(e);
    }
    classes
        .into_iter()
        .map(|edges| {
            let (u, v) = g.edges()[edges[0]];
            let sides = (g.cone_unchecked(v, u), g.cone_unchecked(u, v));
            if sides.0.complement() != sides.1 {
                return Err(Error::Invariant(format!("cones of edge {} are not complementary", edges[0])));
            }
            for &e in &edges[1..] {
                let (a, b) = g.edges()[e];
                let here = g.cone_unchecked(b, a);
                if here != sides.0 && here != sides.1 {
                    return Err(Error::Invariant(format!("edge {e} sees different cones than edge {}", edges[0])));
                }
            }
            let mut crossing: Vec<usize> =
                g.inward_edge_boundary(&sides.0).into_iter().map(|(a, b)| edge(a, b)).collect();
            crossing.sort_unstable();
            if crossing != edges {
                return Err(Error::Invariant(format!("class of edge {} differs from its edge boundary", edges[0])));
            }
            Ok(Hyperplane { edges, sides })
        })
        .collect()
}

/// Both sides of every hyperplane, with the trivial pair.
pub fn convex_halfspaces(g: &FiniteGraph) -> Result<Pocset> {
    let hs = hyperplanes(g)?;
    Pocset::from_family(g, hs.into_iter().map(|h| h.sides.0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NestingVerdict {
    /// A 4-cycle with corners in `H∩K`, `H∩¬K`, `¬H∩¬K`, `¬H∩K`.
    Square([usize; 4]),
    /// Flags `(i, j)` of the empty corner `¬ⁱH ∩ ¬ʲK`.
    Nested((u8, u8)),
}

fn require_halfspace(g: &FiniteGraph, h: &HalfSpace) -> Result<()> {
    g.check_set(h.side())?;
    if h.is_trivial() || !g.is_convex(h.side())? || !g.is_convex(&h.side().complement())? {
        return Err(Error::NotHalfSpace);
    }
    Ok(())
}

pub fn non_nested_witness(g: &FiniteGraph, h: &HalfSpace, k: &HalfSpace) -> Result<NestingVerdict> {
    require_median(g)?;
    require_halfspace(g, h)?;
    require_halfspace(g, k)?;
    let (hs, ks) = (h.side(), k.side());
    if let Some(corner) = empty_corner(hs, ks) {
        return Ok(NestingVerdict::Nested(corner));
    }
    let quadrant = |v: usize| (hs.contains(v), ks.contains(v));
    let want = [(true, true), (true, false), (false, false), (false, true)];
    for v in 0..g.vertex_count() {
        if quadrant(v) != want[0] {
            continue;
        }
        for &a in g.neighbors(v) {
            if quadrant(a) != want[1] {
                continue;
            }
            for &b in g.neighbors(v) {
                if quadrant(b) != want[3] {
                    continue;
                }
                if let Some(&w) = g.neighbors(a).iter().find(|&&w| quadrant(w) == want[2] && g.has_edge(w, b)) {
                    return Ok(NestingVerdict::Square([v, a, w, b]));
                }
            }
        }
    }
    Err(Error::Invariant("transverse convex half-spaces without a square".into()))
}

/// Convex half-spaces `H` with `A ⊆ H ⊆ ¬B`; there are exactly `d(A, B)`.
pub fn separating_halfspaces(g: &FiniteGraph, a: &VertexSet, b: &VertexSet) -> Result<Vec<HalfSpace>> {
    g.check_set(a)?;
    g.check_set(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput("separated sets"));
    }
    if !g.is_convex(a)? || !g.is_convex(b)? {
        return Err(Error::NotConvex);
    }
    if a.intersects(b) {
        return Err(Error::NotDisjoint);
    }
    let mut out = Vec::new();
    for h in hyperplanes(g)? {
        for side in [h.sides.0, h.sides.1] {
            if a.is_subset(&side) && side.is_disjoint(b) {
                out.push(HalfSpace::new(side));
            }
        }
    }
    let d = g.set_distance(a, b);
    if out.len() != d {
        return Err(Error::Invariant(format!("{} separating half-spaces at distance {d}", out.len())));
    }
    Ok(out)
}

/// A common point of pairwise-intersecting convex sets, found by merging the
/// first two sets and taking medians of pairwise witnesses.
pub fn helly_witness(g: &FiniteGraph, sets: &[VertexSet]) -> Result<usize> {
    let Some(first) = sets.first() else {
        return Err(Error::EmptyInput("convex family"));
    };
    require_median(g)?;
    for s in sets {
        g.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptyInput("convex set"));
        }
        if !g.is_convex(s)? {
            return Err(Error::NotConvex);
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].is_disjoint(&sets[j]) {
                return Err(Error::PairwiseEmpty(i, j));
            }
        }
    }
    let point = helly_recursion(g, first.clone(), &sets[1..])?;
    if sets.iter().all(|s| s.contains(point)) {
        Ok(point)
    } else {
        Err(Error::Invariant("Helly witness outside a set".into()))
    }
}

fn least_common(a: &VertexSet, b: &VertexSet) -> Result<usize> {
    a.intersection(b).first().ok_or_else(|| Error::Invariant("merged convex set lost a pairwise intersection".into()))
}

/// Three sets meet at the median of their pairwise witnesses; more sets are
/// reduced by replacing the first two with their intersection.
fn helly_recursion(g: &FiniteGraph, head: VertexSet, rest: &[VertexSet]) -> Result<usize> {
    match rest {
        [] => Ok(head.first().expect("nonempty")),
        [b] => least_common(&head, b),
        [b, c] => Ok(median_unchecked(g, least_common(&head, b)?, least_common(b, c)?, least_common(&head, c)?)),
        [b, tail @ ..] => helly_recursion(g, head.intersection(b), tail),
    }
}

/// Vertex-to-orientation pairing between a median graph and the dual of its
/// convex half-spaces.
#[derive(Debug, Clone)]
pub struct Roundtrip {
    pub pocset: Pocset,
    pub dual: DualMedianGraph,
    /// `orientation_of[v]` is the dual vertex of `v`'s principal orientation.
    pub orientation_of: Vec<usize>,
}

pub fn roundtrip(g: &FiniteGraph) -> Result<Roundtrip> {
    let pocset = convex_halfspaces(g)?;
    let dual = build_dual_with(&pocset, DEFAULT_ORIENTATION_BUDGET)?;
    let n = g.vertex_count();
    let dg = dual.graph();
    if dg.vertex_count() != n || dg.edge_count() != g.edge_count() {
        return Err(Error::RoundtripFailure(format!(
            "dual has {} vertices and {} edges, graph has {n} and {}",
            dg.vertex_count(),
            dg.edge_count(),
            g.edge_count()
        )));
    }
    let mut orientation_of = Vec::with_capacity(n);
    let mut hit = vec![false; n];
    for v in 0..n {
        let o = principal_orientation(&pocset, v)?;
        let idx = dual
            .index_of(&o)
            .ok_or_else(|| Error::RoundtripFailure(format!("principal orientation of {} missing", g.name(v))))?;
        if std::mem::replace(&mut hit[idx], true) {
            return Err(Error::RoundtripFailure(format!("two vertices share dual vertex {idx}")));
        }
        orientation_of.push(idx);
    }
    for &(u, v) in g.edges() {
        if !dg.has_edge(orientation_of[u], orientation_of[v]) {
            return Err(Error::RoundtripFailure(format!("edge {}-{} not preserved", g.name(u), g.name(v))));
        }
    }
    Ok(Roundtrip { pocset, dual, orientation_of })
}
