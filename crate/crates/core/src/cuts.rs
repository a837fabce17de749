//! Cut enumeration and the combinatorial queries on pocsets of cuts:
//! separation profiles, non-nested neighbours, blocks, successors, the
//! density criterion, and the connected-witness construction.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::pocset::{HalfSpace, Pocset};
use crate::union_find::UnionFind;
use crate::vertex_set::VertexSet;

/// Default cap on the number of candidate subsets examined.
pub const DEFAULT_SUBSET_BUDGET: usize = 1_000_000;

/// Largest graph the exhaustive subset sweep is used on.
pub const EXHAUSTIVE_LIMIT: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutStrategy {
    /// Exhaustive when the graph is small enough and the sweep fits the
    /// budget, anchored growth otherwise.
    #[default]
    Auto,
    Exhaustive,
    Anchored,
}

#[derive(Debug, Clone, Copy)]
pub struct CutOptions {
    pub budget: usize,
    pub strategy: CutStrategy,
}

impl Default for CutOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_SUBSET_BUDGET, strategy: CutStrategy::Auto }
    }
}

/// All connected co-connected half-spaces whose vertex boundary has ambient
/// diameter at most `radius`, plus the trivial pair.
pub fn enumerate_cuts(g: &FiniteGraph, radius: usize) -> Result<Pocset> {
    enumerate_cuts_with(g, radius, CutOptions::default())
}

pub fn enumerate_cuts_with(g: &FiniteGraph, radius: usize, opts: CutOptions) -> Result<Pocset> {
    let n = g.vertex_count();
    let exhaustive_fits = n <= EXHAUSTIVE_LIMIT && (1usize << (n - 1)) <= opts.budget;
    let sides = match opts.strategy {
        CutStrategy::Exhaustive => {
            if n > EXHAUSTIVE_LIMIT {
                return Err(Error::BudgetExceeded { what: "exhaustive sweep size", cap: EXHAUSTIVE_LIMIT });
            }
            if !exhaustive_fits {
                return Err(Error::BudgetExceeded { what: "candidate subsets", cap: opts.budget });
            }
            exhaustive(g, radius)
        }
        CutStrategy::Auto if exhaustive_fits => exhaustive(g, radius),
        _ => anchored(g, radius, opts.budget)?,
    };
    Pocset::from_family(g, sides)
}

fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut reach = mask & mask.wrapping_neg();
    loop {
        let mut next = reach;
        let mut m = reach;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            next |= adj[v] & mask;
            m &= m - 1;
        }
        if next == reach {
            return reach == mask;
        }
        reach = next;
    }
}

fn exhaustive(g: &FiniteGraph, radius: usize) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let mut out = Vec::new();
    let mut boundary = Vec::with_capacity(n);
    // vertex 0 is always on the listed side; complements are added later
    for rest in 0..(1u64 << (n - 1)) {
        let mask = 1 | rest << 1;
        if mask == full {
            continue;
        }
        let co = full & !mask;
        if !mask_connected(&adj, mask) || !mask_connected(&adj, co) {
            continue;
        }
        boundary.clear();
        boundary.extend(adj.iter().enumerate().filter_map(|(v, &around)| {
            let other = if mask >> v & 1 == 1 { co } else { mask };
            (around & other != 0).then_some(v)
        }));
        if diameter_within(g, &boundary, radius) {
            out.push(VertexSet::from_mask(n, mask));
        }
    }
    out
}

fn diameter_within(g: &FiniteGraph, members: &[usize], radius: usize) -> bool {
    members.iter().enumerate().all(|(i, &x)| {
        let row = g.dist_row(x);
        members[i + 1..].iter().all(|&y| row[y] as usize <= radius)
    })
}

/// Grows candidate boundaries `S` from each anchor `x = min S`; every cut
/// with that exact vertex boundary is recovered from how the components of
/// `G − S` attach to `S`.
fn anchored(g: &FiniteGraph, radius: usize, budget: usize) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    let mut found: HashSet<VertexSet> = HashSet::new();
    let mut candidates = 0usize;
    for x in 0..n {
        let row = g.dist_row(x);
        let pool: Vec<usize> = (x + 1..n).filter(|&v| row[v] as usize <= radius).collect();
        let mut chosen = vec![x];
        grow(g, radius, &pool, 0, &mut chosen, &mut |s| {
            candidates += 1;
            if candidates > budget {
                return Err(Error::BudgetExceeded { what: "candidate subsets", cap: budget });
            }
            for h in sides_with_boundary(g, s, budget, &mut candidates)? {
                found.insert(h);
            }
            Ok(())
        })?;
    }
    let mut out: Vec<VertexSet> = found.into_iter().collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

fn grow(
    g: &FiniteGraph,
    radius: usize,
    pool: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    visit(chosen)?;
    for i in from..pool.len() {
        let v = pool[i];
        let row = g.dist_row(v);
        if chosen.iter().all(|&c| row[c] as usize <= radius) {
            chosen.push(v);
            grow(g, radius, pool, i + 1, chosen, visit)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Cuts `H` with `∂_v H = S` exactly and `min S ∈ H`.
fn sides_with_boundary(
    g: &FiniteGraph,
    boundary: &[usize],
    budget: usize,
    candidates: &mut usize,
) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    let s = VertexSet::from_iter(n, boundary.iter().copied());
    let rest = s.complement();
    let comps = g.components(&rest);
    let mut comp_of = vec![usize::MAX; n];
    for (ci, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v] = ci;
        }
    }
    // items: boundary vertices 0..k, then components
    let k = boundary.len();
    let mut uf = UnionFind::new(k + comps.len());
    for (si, &v) in boundary.iter().enumerate() {
        for &w in g.neighbors(v) {
            if comp_of[w] != usize::MAX {
                uf.union(si, k + comp_of[w]);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for item in 0..k + comps.len() {
        groups.entry(uf.find(item)).or_default().push(item);
    }
    let anchor_group = uf.find(0);
    let free: Vec<&Vec<usize>> =
        groups.iter().filter(|(&root, _)| root != anchor_group).map(|(_, items)| items).collect();
    if free.len() >= usize::BITS as usize - 1 || (1usize << free.len()) > budget {
        return Err(Error::BudgetExceeded { what: "candidate subsets", cap: budget });
    }
    let realize = |items: &[usize], side: &mut VertexSet| {
        for &item in items {
            if item < k {
                side.insert(boundary[item]);
            } else {
                side.union_with(&comps[item - k]);
            }
        }
    };
    let mut out = Vec::new();
    for assignment in 0..(1usize << free.len()) {
        *candidates += 1;
        if *candidates > budget {
            return Err(Error::BudgetExceeded { what: "candidate subsets", cap: budget });
        }
        let mut h = VertexSet::empty(n);
        realize(&groups[&anchor_group], &mut h);
        for (bit, items) in free.iter().enumerate() {
            if assignment >> bit & 1 == 1 {
                realize(items, &mut h);
            }
        }
        if h.is_full() || g.vertex_boundary(&h) != s {
            continue;
        }
        if g.is_connected_set(&h) && g.is_connected_set(&h.complement()) {
            out.push(h);
        }
    }
    Ok(out)
}

/// Per-pair separation counts and per-vertex boundary incidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationProfile {
    n: usize,
    /// `counts[x * n + y] = |{H : x ∈ H ∌ y}|`
    counts: Vec<u32>,
    /// `|{H : x ∈ ∂_v H}|` per vertex
    pub incidence: Vec<usize>,
    pub max_separation: usize,
    pub max_incidence: usize,
}

impl SeparationProfile {
    pub fn separating(&self, x: usize, y: usize) -> usize {
        self.counts[x * self.n + y] as usize
    }
}

/// Costs `O(|members| · n²)`; intended for graphs of a few hundred vertices.
pub fn separation_profile(p: &Pocset) -> SeparationProfile {
    let g = p.graph();
    let n = g.vertex_count();
    let mut counts = vec![0u32; n * n];
    let mut incidence = vec![0usize; n];
    for i in p.nontrivial() {
        let side = p.side(i);
        let outside = side.complement().to_vec();
        for x in side.iter() {
            let row = &mut counts[x * n..(x + 1) * n];
            for &y in &outside {
                row[y] += 1;
            }
        }
        for v in g.vertex_boundary(side).iter() {
            incidence[v] += 1;
        }
    }
    let max_separation = counts.iter().copied().max().unwrap_or(0) as usize;
    let max_incidence = incidence.iter().copied().max().unwrap_or(0);
    SeparationProfile { n, counts, incidence, max_separation, max_incidence }
}

/// Members not nested with `h`, in member order.
pub fn non_nested_neighbors(p: &Pocset, h: &HalfSpace) -> Result<Vec<HalfSpace>> {
    let i = p.require_member(h)?;
    Ok(p.non_nested_with(i).into_iter().map(|j| p.member(j).clone()).collect())
}

/// Partition of the vertices into classes with identical membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    /// Blocks ordered by least vertex.
    pub blocks: Vec<VertexSet>,
    /// Block id of each vertex.
    pub index: Vec<usize>,
}

impl BlockPartition {
    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

pub fn h_blocks(p: &Pocset) -> BlockPartition {
    blocks_of(p.graph().vertex_count(), p.nontrivial().map(|i| p.side(i)))
}

/// Blocks of the vertex set `0..n` under an arbitrary list of sides.
pub fn blocks_of<'a, I>(n: usize, sides: I) -> BlockPartition
where
    I: IntoIterator<Item = &'a VertexSet>,
{
    let sides: Vec<&VertexSet> = sides.into_iter().collect();
    let mut by_signature: std::collections::HashMap<Vec<bool>, usize> = Default::default();
    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut index = vec![0; n];
    for (v, slot) in index.iter_mut().enumerate() {
        let signature: Vec<bool> = sides.iter().map(|s| s.contains(v)).collect();
        let id = *by_signature.entry(signature).or_insert_with(|| {
            blocks.push(VertexSet::empty(n));
            blocks.len() - 1
        });
        blocks[id].insert(v);
        *slot = id;
    }
    BlockPartition { blocks, index }
}

fn successor_indices(p: &Pocset, i: usize) -> Vec<usize> {
    let rel = p.relations();
    let above = &rel.above[i];
    above.ones().filter(|&k| !p.is_trivial_member(k)).filter(|&k| above.is_disjoint(&rel.below[k])).collect()
}

/// Immediate non-trivial successors of a non-trivial member.
pub fn successors(p: &Pocset, h: &HalfSpace) -> Result<Vec<HalfSpace>> {
    let i = p.require_member(h)?;
    if p.is_trivial_member(i) {
        return Err(Error::TrivialInput);
    }
    Ok(successor_indices(p, i).into_iter().map(|k| p.member(k).clone()).collect())
}

/// Raw quantities of the finite-blocks / finitely-many-successors criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub max_block_size: usize,
    pub max_successor_count: usize,
    pub block_sizes: Vec<usize>,
    /// `(member index, successor count)` for every non-trivial member.
    pub successor_counts: Vec<(usize, usize)>,
}

pub fn density_criterion(p: &Pocset) -> DensityReport {
    let blocks = h_blocks(p);
    let block_sizes: Vec<usize> = blocks.blocks.iter().map(VertexSet::len).collect();
    let successor_counts: Vec<(usize, usize)> = p.nontrivial().map(|i| (i, successor_indices(p, i).len())).collect();
    DensityReport {
        max_block_size: block_sizes.iter().copied().max().unwrap_or(0),
        max_successor_count: successor_counts.iter().map(|&(_, c)| c).max().unwrap_or(0),
        block_sizes,
        successor_counts,
    }
}

/// For each component `H₀` of `H` and each component `C` of `¬H₀`, the
/// half-space `¬C`. Outputs are connected, co-connected, and have inward
/// edge boundary inside that of `H`.
pub fn connectedize(g: &FiniteGraph, h: &HalfSpace) -> Result<Vec<HalfSpace>> {
    if h.side().universe() != g.vertex_count() {
        return Err(Error::GraphMismatch { left: h.side().universe(), right: g.vertex_count() });
    }
    if h.is_trivial() {
        return Err(Error::TrivialInput);
    }
    let mut out: Vec<VertexSet> = Vec::new();
    for part in g.components(h.side()) {
        for outside in g.components(&part.complement()) {
            out.push(outside.complement());
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out.dedup();
    Ok(out.into_iter().map(HalfSpace::new).collect())
}
