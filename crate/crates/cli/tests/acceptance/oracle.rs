//! Brute-force references. Everything here works from adjacency lists and
//! plain BFS so that it shares no code path with the library routines it
//! checks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use medianforge::{DualMedianGraph, FiniteGraph, Pocset, VertexSet};

/// All-pairs distances by one BFS per vertex.
pub struct Metric {
    pub dist: Vec<Vec<u32>>,
}

impl Metric {
    pub fn of(g: &FiniteGraph) -> Self {
        let n = g.vertex_count();
        let dist = (0..n)
            .map(|s| {
                let mut row = vec![u32::MAX; n];
                row[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for &w in g.neighbors(u) {
                        if row[w] == u32::MAX {
                            row[w] = row[u] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                row
            })
            .collect();
        Self { dist }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn d(&self, x: usize, y: usize) -> u32 {
        self.dist[x][y]
    }

    pub fn between(&self, x: usize, z: usize, y: usize) -> bool {
        self.d(x, z) + self.d(z, y) == self.d(x, y)
    }

    /// Closure of `set` under intervals.
    pub fn hull(&self, set: &[usize]) -> Vec<bool> {
        let n = self.len();
        let mut inside = vec![false; n];
        let mut members: Vec<usize> = set.to_vec();
        for &v in set {
            inside[v] = true;
        }
        let mut grew = true;
        while grew {
            let fresh: Vec<usize> = (0..n)
                .filter(|&z| !inside[z] && members.iter().any(|&x| members.iter().any(|&y| self.between(x, z, y))))
                .collect();
            for &z in &fresh {
                inside[z] = true;
            }
            grew = !fresh.is_empty();
            members.extend(fresh);
        }
        inside
    }

    /// The unique vertex lying between every two of `x, y, z`.
    pub fn median(&self, x: usize, y: usize, z: usize) -> Option<usize> {
        let common: Vec<usize> = (0..self.len())
            .filter(|&m| self.between(x, m, y) && self.between(y, m, z) && self.between(x, m, z))
            .collect();
        (common.len() == 1).then(|| common[0])
    }

    /// Nearest point of `hull` to `x` among those between `x` and every
    /// point of `a`; `None` unless it is unique.
    pub fn gate(&self, hull: &[bool], a: &[usize], x: usize) -> Option<usize> {
        let candidates: Vec<usize> =
            (0..self.len()).filter(|&p| hull[p] && a.iter().all(|&q| self.between(x, p, q))).collect();
        let best = candidates.iter().map(|&p| self.d(x, p)).min()?;
        let nearest: Vec<usize> = candidates.into_iter().filter(|&p| self.d(x, p) == best).collect();
        (nearest.len() == 1).then(|| nearest[0])
    }

    pub fn set_distance(&self, a: &[bool], b: &[bool]) -> u32 {
        let n = self.len();
        (0..n)
            .filter(|&x| a[x])
            .flat_map(|x| (0..n).filter(|&y| b[y]).map(move |y| (x, y)))
            .map(|(x, y)| self.d(x, y))
            .min()
            .unwrap_or(u32::MAX)
    }

    /// Bit masks of every nonempty proper vertex set that is convex with a
    /// convex complement. Needs at most 20 vertices.
    pub fn convex_halfspace_masks(&self) -> Vec<u32> {
        let n = self.len();
        assert!(n <= 20, "exhaustive half-space search is limited to 20 vertices");
        let intervals: Vec<Vec<u32>> = (0..n)
            .map(|x| (0..n).map(|y| (0..n).filter(|&z| self.between(x, z, y)).fold(0u32, |m, z| m | 1 << z)).collect())
            .collect();
        let full = (1u32 << n) - 1;
        let convex = |h: u32| {
            (0..n)
                .filter(|&x| h >> x & 1 == 1)
                .all(|x| (0..n).filter(|&y| h >> y & 1 == 1).all(|y| intervals[x][y] & !h == 0))
        };
        (1..full).filter(|&h| convex(h) && convex(full & !h)).collect()
    }
}

/// Vertices on `u`'s side of the edge `(u, v)`.
pub fn edge_side(metric: &Metric, u: usize, v: usize) -> VertexSet {
    let n = metric.len();
    VertexSet::from_iter(n, (0..n).filter(|&z| metric.d(z, u) < metric.d(z, v)))
}

/// Choice functions as masks over the non-trivial pairs: bit `k` set means
/// the second member of pair `k + 1` is chosen.
pub fn choice_masks(p: &Pocset) -> Option<BTreeSet<u32>> {
    let walls = p.pair_count() - 1;
    if walls > 16 {
        return None;
    }
    // member m is chosen under `mask` iff the bit of its pair equals `side[m]`
    let mut pair_bit = vec![usize::MAX; p.len()];
    let mut side = vec![false; p.len()];
    for (k, &(lo, hi)) in p.pairs().iter().enumerate().skip(1) {
        pair_bit[lo] = k - 1;
        pair_bit[hi] = k - 1;
        side[hi] = true;
    }
    let chosen = |mask: u32, m: usize| -> bool {
        if p.is_trivial_member(m) {
            return p.side(m).is_full();
        }
        (mask >> pair_bit[m] & 1 == 1) == side[m]
    };
    // upward closure: a chosen member forces every superset
    let mut below_above = Vec::new();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if i != j && p.side(i).is_subset(p.side(j)) {
                below_above.push((i, j));
            }
        }
    }
    let masks = (0..1u32 << walls)
        .filter(|&mask| below_above.iter().all(|&(i, j)| !chosen(mask, i) || chosen(mask, j)))
        .collect();
    Some(masks)
}

/// The dual's orientations in the mask encoding of [`choice_masks`].
pub fn dual_masks(dual: &DualMedianGraph) -> BTreeSet<u32> {
    let p = dual.pocset();
    dual.orientations()
        .iter()
        .map(|o| {
            p.pairs().iter().skip(1).enumerate().fold(0u32, |mask, (k, &(_, hi))| mask | (o.contains(hi) as u32) << k)
        })
        .collect()
}

/// Union-find over vertex indices, standalone from the library's.
pub struct Forest {
    parent: Vec<usize>,
}

impl Forest {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn root(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// False if `u` and `v` were already joined.
    pub fn join(&mut self, u: usize, v: usize) -> bool {
        let (a, b) = (self.root(u), self.root(v));
        self.parent[a.max(b)] = a.min(b);
        a != b
    }

    /// Class labels numbered by first appearance.
    pub fn partition(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        canonical((0..n).map(|v| self.root(v)).collect())
    }
}

/// Renames class labels so that they appear in increasing order.
pub fn canonical<T: Ord>(labels: Vec<T>) -> Vec<usize> {
    let mut seen = BTreeMap::new();
    labels
        .into_iter()
        .map(|l| {
            let next = seen.len();
            *seen.entry(l).or_insert(next)
        })
        .collect()
}
