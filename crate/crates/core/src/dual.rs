//! Orientations of a pocset and the dual median graph they span.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::pocset::{HalfSpace, Pocset};

/// Default cap on the number of orientations a dual may have.
pub const DEFAULT_ORIENTATION_BUDGET: usize = 100_000;

/// One side chosen from every complement pair of a pocset.
///
/// Bit `p` of the choice is set when the second member of pair `p` is
/// chosen. For the trivial pair that member is the full set, so bit 0 is
/// always set.
#[derive(Clone)]
pub struct Orientation {
    pocset: Pocset,
    choice: FixedBitSet,
}

impl Orientation {
    fn from_choice(pocset: &Pocset, choice: FixedBitSet) -> Self {
        Self { pocset: pocset.clone(), choice }
    }

    pub fn pocset(&self) -> &Pocset {
        &self.pocset
    }

    /// Whether member `i` of the pocset is chosen.
    pub fn contains(&self, i: usize) -> bool {
        let p = self.pocset.pair_of(i);
        let (_, hi) = self.pocset.pairs()[p];
        self.choice.contains(p) == (i == hi)
    }

    /// Chosen member indices in member order.
    pub fn chosen(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.pocset.len()).filter(|&i| self.contains(i))
    }

    fn chosen_bits(&self) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.pocset.len());
        for i in self.chosen() {
            bits.insert(i);
        }
        bits
    }

    /// Minimal non-trivial chosen members, in member order.
    pub fn key(&self) -> Vec<usize> {
        let rel = self.pocset.relations();
        let chosen = self.chosen_bits();
        chosen
            .ones()
            .filter(|&i| !self.pocset.is_trivial_member(i))
            .filter(|&i| rel.below[i].is_disjoint(&chosen))
            .collect()
    }

    /// Reason the choice fails to be upward closed or omits the full set.
    fn defect(&self) -> Option<String> {
        if !self.choice.contains(0) {
            return Some("the empty side of the trivial pair is chosen".into());
        }
        let rel = self.pocset.relations();
        let chosen = self.chosen_bits();
        chosen.ones().find_map(|i| {
            rel.above[i]
                .ones()
                .find(|&j| !chosen.contains(j))
                .map(|j| format!("member {i} is chosen but its superset {j} is not"))
        })
    }

    pub fn is_valid(&self) -> bool {
        self.defect().is_none()
    }

    fn same_pocset(&self, other: &Orientation) -> Result<()> {
        if self.pocset.fingerprint() != other.pocset.fingerprint() {
            return Err(Error::PocsetMismatch);
        }
        Ok(())
    }

    fn flipped(&self, pair: usize) -> Orientation {
        let mut choice = self.choice.clone();
        choice.toggle(pair);
        Orientation::from_choice(&self.pocset, choice)
    }
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.pocset.fingerprint() == other.pocset.fingerprint() && self.choice == other.choice
    }
}

impl Eq for Orientation {}

impl Hash for Orientation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.pocset.fingerprint().hash(state);
        self.choice.hash(state);
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.key().into_iter().map(|i| self.pocset.side(i).clone())).finish()
    }
}

/// All members containing `x`.
pub fn principal_orientation(p: &Pocset, x: usize) -> Result<Orientation> {
    p.graph().check_vertex(x)?;
    let mut choice = FixedBitSet::with_capacity(p.pair_count());
    for (pair, &(_, hi)) in p.pairs().iter().enumerate() {
        if p.side(hi).contains(x) {
            choice.insert(pair);
        }
    }
    Ok(Orientation::from_choice(p, choice))
}

/// The orientation whose minimal non-trivial members are exactly `antichain`.
pub fn decode_antichain(p: &Pocset, antichain: &[HalfSpace]) -> Result<Orientation> {
    let ids = antichain.iter().map(|h| p.require_member(h)).collect::<Result<Vec<usize>>>()?;
    if let Some(&t) = ids.iter().find(|&&i| p.is_trivial_member(i)) {
        return Err(if t == p.empty_member() { Error::Inconsistent(t) } else { Error::TrivialInput });
    }
    for (a, &i) in ids.iter().enumerate() {
        for &j in &ids[a + 1..] {
            if p.is_subset(i, j) || p.is_subset(j, i) {
                return Err(Error::NotAntichain(i.min(j), i.max(j)));
            }
        }
    }
    let rel = p.relations();
    let mut closure = FixedBitSet::with_capacity(p.len());
    closure.insert(p.full_member());
    for &i in &ids {
        closure.insert(i);
        closure.union_with(&rel.above[i]);
    }
    let mut choice = FixedBitSet::with_capacity(p.pair_count());
    for (pair, &(lo, hi)) in p.pairs().iter().enumerate() {
        match (closure.contains(lo), closure.contains(hi)) {
            (true, true) => return Err(Error::Inconsistent(lo)),
            (false, false) => return Err(Error::Incomplete(lo)),
            (false, true) => choice.insert(pair),
            (true, false) => {}
        }
    }
    Ok(Orientation::from_choice(p, choice))
}

/// Flips of each minimal non-trivial chosen member, in member order.
pub fn orientation_neighbors(p: &Pocset, u: &Orientation) -> Result<Vec<Orientation>> {
    if u.pocset.fingerprint() != p.fingerprint() {
        return Err(Error::PocsetMismatch);
    }
    if let Some(why) = u.defect() {
        return Err(Error::InvalidOrientation(why));
    }
    u.key()
        .into_iter()
        .map(|i| {
            let next = u.flipped(p.pair_of(i));
            match next.defect() {
                None => Ok(next),
                Some(why) => Err(Error::Invariant(format!("flipping a minimal member broke closure: {why}"))),
            }
        })
        .collect()
}

/// Number of complement pairs on which the orientations differ.
pub fn dual_distance(u: &Orientation, v: &Orientation) -> Result<usize> {
    u.same_pocset(v)?;
    let mut diff = u.choice.clone();
    diff.symmetric_difference_with(&v.choice);
    Ok(diff.count_ones(..))
}

/// Pairwise majority.
pub fn dual_median(u: &Orientation, v: &Orientation, w: &Orientation) -> Result<Orientation> {
    u.same_pocset(v)?;
    u.same_pocset(w)?;
    let mut uv = u.choice.clone();
    uv.intersect_with(&v.choice);
    let mut vw = v.choice.clone();
    vw.intersect_with(&w.choice);
    let mut uw = u.choice.clone();
    uw.intersect_with(&w.choice);
    uv.union_with(&vw);
    uv.union_with(&uw);
    Ok(Orientation::from_choice(&u.pocset, uv))
}

/// The canonical key as half-spaces.
pub fn minimal_elements(u: &Orientation) -> Vec<HalfSpace> {
    u.key().into_iter().map(|i| u.pocset.member(i).clone()).collect()
}

/// Graph on the orientations of a pocset, adjacent when they differ on one
/// complement pair.
#[derive(Debug, Clone)]
pub struct DualMedianGraph {
    pocset: Pocset,
    orientations: Vec<Orientation>,
    keys: Vec<Vec<usize>>,
    index: HashMap<FixedBitSet, usize>,
    graph: FiniteGraph,
    flipped: Vec<usize>,
}

impl DualMedianGraph {
    pub fn pocset(&self) -> &Pocset {
        &self.pocset
    }

    /// Vertices sorted by canonical key; vertex `i` is named `o{i}`.
    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    /// Canonical keys as member indices, parallel to `orientations`.
    pub fn keys(&self) -> &[Vec<usize>] {
        &self.keys
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    /// Complement pair flipped along each edge of `graph`.
    pub fn flipped_pairs(&self) -> &[usize] {
        &self.flipped
    }

    pub fn index_of(&self, u: &Orientation) -> Option<usize> {
        if u.pocset.fingerprint() != self.pocset.fingerprint() {
            return None;
        }
        self.index.get(&u.choice).copied()
    }

    /// Dual vertex of the principal orientation of `x`.
    pub fn principal_index(&self, x: usize) -> Result<usize> {
        let o = principal_orientation(&self.pocset, x)?;
        self.index_of(&o).ok_or_else(|| Error::Invariant("principal orientation missing from the dual".into()))
    }

    /// Number of edges flipping each complement pair (index 0 is the
    /// trivial pair and is always 0).
    pub fn flip_class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.pocset.pair_count()];
        for &p in &self.flipped {
            sizes[p] += 1;
        }
        sizes
    }
}

pub fn build_dual(p: &Pocset) -> Result<DualMedianGraph> {
    build_dual_with(p, DEFAULT_ORIENTATION_BUDGET)
}

/// Breadth-first closure of the principal orientations under minimal flips.
pub fn build_dual_with(p: &Pocset, budget: usize) -> Result<DualMedianGraph> {
    let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
    let mut found: Vec<Orientation> = Vec::new();
    let mut queue = VecDeque::new();
    let mut admit = |o: Orientation, found: &mut Vec<Orientation>, queue: &mut VecDeque<usize>| -> Result<()> {
        if seen.insert(o.choice.clone(), ()).is_none() {
            if found.len() == budget {
                return Err(Error::BudgetExceeded { what: "orientations", cap: budget });
            }
            queue.push_back(found.len());
            found.push(o);
        }
        Ok(())
    };
    for x in 0..p.graph().vertex_count() {
        admit(principal_orientation(p, x)?, &mut found, &mut queue)?;
    }
    while let Some(i) = queue.pop_front() {
        let u = found[i].clone();
        for next in orientation_neighbors(p, &u)? {
            admit(next, &mut found, &mut queue)?;
        }
    }

    let mut keyed: Vec<(Vec<usize>, Orientation)> = found.into_iter().map(|o| (o.key(), o)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let (keys, orientations): (Vec<Vec<usize>>, Vec<Orientation>) = keyed.into_iter().unzip();
    let index: HashMap<FixedBitSet, usize> =
        orientations.iter().enumerate().map(|(i, o)| (o.choice.clone(), i)).collect();

    let mut edges = Vec::new();
    let mut flipped = Vec::new();
    for (i, (u, key)) in orientations.iter().zip(&keys).enumerate() {
        for &m in key {
            let pair = p.pair_of(m);
            let j = index[&u.flipped(pair).choice];
            if i < j {
                edges.push((i, j));
                flipped.push(pair);
            }
        }
    }
    let names = (0..orientations.len()).map(|i| format!("o{i}")).collect();
    let graph = FiniteGraph::from_edges(names, edges)
        .map_err(|e| Error::Invariant(format!("dual graph construction failed: {e}")))?;
    Ok(DualMedianGraph { pocset: p.clone(), orientations, keys, index, graph, flipped })
}
