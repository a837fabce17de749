//! Half-spaces and complement-closed families of them.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::vertex_set::VertexSet;

/// A vertex subset, read as one side of a wall.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HalfSpace {
    side: VertexSet,
}

impl HalfSpace {
    pub fn new(side: VertexSet) -> Self {
        Self { side }
    }

    pub fn side(&self) -> &VertexSet {
        &self.side
    }

    pub fn into_side(self) -> VertexSet {
        self.side
    }

    pub fn complement(&self) -> HalfSpace {
        HalfSpace { side: self.side.complement() }
    }

    /// `∅` or the whole vertex set.
    pub fn is_trivial(&self) -> bool {
        self.side.is_empty() || self.side.is_full()
    }

    /// Non-trivial, connected, and co-connected in `g`.
    pub fn is_cut(&self, g: &FiniteGraph) -> bool {
        !self.is_trivial() && g.is_connected_set(&self.side) && g.is_connected_set(&self.side.complement())
    }
}

impl From<VertexSet> for HalfSpace {
    fn from(side: VertexSet) -> Self {
        HalfSpace::new(side)
    }
}

/// Two half-spaces are nested when one of the four corners
/// `¬ⁱH ∩ ¬ʲK` is empty.
pub fn is_nested(h: &HalfSpace, k: &HalfSpace) -> Result<bool> {
    if h.side.universe() != k.side.universe() {
        return Err(Error::GraphMismatch { left: h.side.universe(), right: k.side.universe() });
    }
    Ok(empty_corner(h.side(), k.side()).is_some())
}

/// The first empty corner `(i, j)` in the order (0,0), (0,1), (1,0), (1,1),
/// where `1` means "complement".
pub fn empty_corner(h: &VertexSet, k: &VertexSet) -> Option<(u8, u8)> {
    if h.is_disjoint(k) {
        Some((0, 0))
    } else if h.is_subset(k) {
        Some((0, 1))
    } else if k.is_subset(h) {
        Some((1, 0))
    } else if h.covers_with(k) {
        Some((1, 1))
    } else {
        None
    }
}

/// One problem found by [`validate_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongUniverse { expected: usize, found: usize },
    MissingComplement { side: Vec<usize> },
    MissingEmpty,
    MissingFull,
    DisconnectedSide { side: Vec<usize>, components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongUniverse { expected, found } => {
                write!(f, "side over {found} vertices, graph has {expected}")
            }
            Violation::MissingComplement { side } => write!(f, "complement of {side:?} missing"),
            Violation::MissingEmpty => write!(f, "empty half-space missing"),
            Violation::MissingFull => write!(f, "full half-space missing"),
            Violation::DisconnectedSide { side, components } => {
                write!(f, "side {side:?} has {components} components")
            }
        }
    }
}

/// Checks a raw family of sides for complement closure, the trivial pair,
/// and (optionally) connectedness of every non-trivial side.
pub fn validate_family(g: &FiniteGraph, sides: &[VertexSet], require_cuts: bool) -> Vec<Violation> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in sides.iter().filter(|s| s.universe() != n) {
        out.push(Violation::WrongUniverse { expected: n, found: s.universe() });
    }
    if !out.is_empty() {
        return out;
    }
    let present: std::collections::HashSet<&VertexSet> = sides.iter().collect();
    if !sides.iter().any(|s| s.is_empty()) {
        out.push(Violation::MissingEmpty);
    }
    if !sides.iter().any(|s| s.is_full()) {
        out.push(Violation::MissingFull);
    }
    let mut reported = std::collections::HashSet::new();
    for s in sides {
        if !s.is_empty() && !s.is_full() && !present.contains(&s.complement()) && reported.insert(s) {
            out.push(Violation::MissingComplement { side: s.to_vec() });
        }
    }
    if require_cuts {
        let mut seen = std::collections::HashSet::new();
        for s in sides {
            if s.is_empty() || s.is_full() || !seen.insert(s) {
                continue;
            }
            let components = g.components(s).len();
            if components != 1 {
                out.push(Violation::DisconnectedSide { side: s.to_vec(), components });
            }
        }
    }
    out
}

/// A complement-closed family of half-spaces of one graph, containing the
/// trivial pair, ordered by inclusion.
///
/// Members are kept in canonical order (size, then lexicographic), so `∅` is
/// member 0 and the full set is the last member. Complement pairs are
/// numbered by their first member, so the trivial pair is pair 0.
#[derive(Clone)]
pub struct Pocset {
    inner: Arc<PocsetInner>,
}

struct PocsetInner {
    graph: FiniteGraph,
    members: Vec<HalfSpace>,
    complement: Vec<usize>,
    pair_of: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    index: HashMap<VertexSet, usize>,
    fingerprint: u64,
    relations: OnceLock<Relations>,
}

/// Order relation tables over member indices.
pub(crate) struct Relations {
    /// members strictly containing member `i`
    pub above: Vec<FixedBitSet>,
    /// members strictly contained in member `i`
    pub below: Vec<FixedBitSet>,
}

impl Pocset {
    /// Closes `sides` under complement, adds the trivial pair, removes
    /// duplicates and sorts.
    pub fn from_family<I>(graph: &FiniteGraph, sides: I) -> Result<Pocset>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let n = graph.vertex_count();
        let mut all: Vec<VertexSet> = Vec::new();
        for s in sides {
            if s.universe() != n {
                return Err(Error::GraphMismatch { left: s.universe(), right: n });
            }
            all.push(s.complement());
            all.push(s);
        }
        all.push(VertexSet::empty(n));
        all.push(VertexSet::full(n));
        Ok(Self::build(graph.clone(), all))
    }

    /// Accepts `sides` only if they already form a pocset (and, with
    /// `require_cuts`, a pocset of connected co-connected sides).
    pub fn from_exact(graph: &FiniteGraph, sides: Vec<VertexSet>, require_cuts: bool) -> Result<Pocset> {
        let violations = validate_family(graph, &sides, require_cuts);
        if !violations.is_empty() {
            let msg: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(Error::InvalidPocset(msg.join("; ")));
        }
        Ok(Self::build(graph.clone(), sides))
    }

    /// The pocset with only `∅` and the full set.
    pub fn trivial(graph: &FiniteGraph) -> Pocset {
        Self::from_family(graph, std::iter::empty()).expect("trivial pocset")
    }

    fn build(graph: FiniteGraph, mut sides: Vec<VertexSet>) -> Pocset {
        sides.sort_by(|a, b| a.canonical_cmp(b));
        sides.dedup();
        let index: HashMap<VertexSet, usize> = sides.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let complement: Vec<usize> = sides.iter().map(|s| index[&s.complement()]).collect();
        let mut pair_of = vec![usize::MAX; sides.len()];
        let mut pairs = Vec::with_capacity(sides.len() / 2);
        for i in 0..sides.len() {
            if pair_of[i] == usize::MAX {
                let j = complement[i];
                pair_of[i] = pairs.len();
                pair_of[j] = pairs.len();
                pairs.push((i, j));
            }
        }
        let mut hasher = DefaultHasher::new();
        graph.vertex_count().hash(&mut hasher);
        for s in &sides {
            s.to_vec().hash(&mut hasher);
        }
        Pocset {
            inner: Arc::new(PocsetInner {
                graph,
                members: sides.into_iter().map(HalfSpace::new).collect(),
                complement,
                pair_of,
                pairs,
                index,
                fingerprint: hasher.finish(),
                relations: OnceLock::new(),
            }),
        }
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.inner.graph
    }

    pub fn len(&self) -> usize {
        self.inner.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.members.is_empty()
    }

    pub fn members(&self) -> &[HalfSpace] {
        &self.inner.members
    }

    pub fn member(&self, i: usize) -> &HalfSpace {
        &self.inner.members[i]
    }

    pub fn side(&self, i: usize) -> &VertexSet {
        self.inner.members[i].side()
    }

    pub fn complement_of(&self, i: usize) -> usize {
        self.inner.complement[i]
    }

    pub fn pair_of(&self, i: usize) -> usize {
        self.inner.pair_of[i]
    }

    /// Complement pairs `(first, second)` by member index, `first < second`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.inner.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.inner.pairs.len()
    }

    /// Number of non-trivial complement pairs.
    pub fn wall_count(&self) -> usize {
        self.pair_count() - 1
    }

    pub fn empty_member(&self) -> usize {
        0
    }

    pub fn full_member(&self) -> usize {
        self.len() - 1
    }

    pub fn is_trivial_member(&self, i: usize) -> bool {
        i == 0 || i == self.len() - 1
    }

    /// Non-trivial member indices in member order.
    pub fn nontrivial(&self) -> impl Iterator<Item = usize> {
        1..self.len().saturating_sub(1)
    }

    pub fn index_of(&self, h: &HalfSpace) -> Option<usize> {
        self.inner.index.get(h.side()).copied()
    }

    pub(crate) fn require_member(&self, h: &HalfSpace) -> Result<usize> {
        if h.side().universe() != self.graph().vertex_count() {
            return Err(Error::GraphMismatch { left: h.side().universe(), right: self.graph().vertex_count() });
        }
        self.index_of(h).ok_or(Error::NotMember)
    }

    /// Content hash identifying the pocset; equal families hash equal.
    pub fn fingerprint(&self) -> u64 {
        self.inner.fingerprint
    }

    pub(crate) fn relations(&self) -> &Relations {
        self.inner.relations.get_or_init(|| {
            let m = self.len();
            let above: Vec<FixedBitSet> = (0..m)
                .map(|i| {
                    let mut up = FixedBitSet::with_capacity(m);
                    up.extend((0..m).filter(|&j| j != i && self.side(i).is_subset(self.side(j))));
                    up
                })
                .collect();
            let mut below = vec![FixedBitSet::with_capacity(m); m];
            for (i, up) in above.iter().enumerate() {
                for j in up.ones() {
                    below[j].insert(i);
                }
            }
            Relations { above, below }
        })
    }

    /// `side(i) ⊆ side(j)`.
    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        i == j || self.relations().above[i].contains(j)
    }

    pub fn members_nested(&self, i: usize, j: usize) -> bool {
        empty_corner(self.side(i), self.side(j)).is_some()
    }

    /// Members not nested with member `i`, in member order.
    pub fn non_nested_with(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| !self.members_nested(i, j)).collect()
    }

    /// Whether every pair of members is nested.
    pub fn is_nested(&self) -> bool {
        let m = self.len();
        (0..m).all(|i| (i + 1..m).all(|j| self.members_nested(i, j)))
    }

    /// Re-checks the cut condition on every non-trivial member (complement
    /// closure and the trivial pair hold by construction).
    pub fn validate(&self, require_cuts: bool) -> Vec<Violation> {
        let sides: Vec<VertexSet> = self.members().iter().map(|h| h.side().clone()).collect();
        validate_family(self.graph(), &sides, require_cuts)
    }

    /// Sides as sorted vertex-name arrays, in member order.
    pub fn named_sides(&self) -> Vec<Vec<String>> {
        self.members().iter().map(|h| self.graph().names_of(h.side())).collect()
    }
}

impl fmt::Debug for Pocset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members().iter().map(|h| h.side())).finish()
    }
}

impl PartialEq for Pocset {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint() == other.fingerprint() && self.members() == other.members()
    }
}

impl Eq for Pocset {}
