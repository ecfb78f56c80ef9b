//! Snares and traps: pairs `(J, S)` where `J` contains a subdivision of a
//! pattern `H`, `S` is an independent set of `J` and `J - S` is connected.
//! A trap is a snare no proper subgraph of which (with `S` cut down to its
//! vertices) is a snare, and that stops being one when any degree-two
//! vertex outside `S` is suppressed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::canon::{canonical_labeling, CanonicalForm};
use crate::embedding::is_topological_minor;
use crate::generate::connected_graphs;
use crate::graph::{Edge, Graph};

/// Largest `J` the built-in generator handles.
pub const MAX_GENERATED_VERTICES: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnareCandidate {
    pub j: Graph,
    pub s: VertexSet,
    pub h: Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TrapStatus {
    NotSnare,
    SnareNotTrap,
    Trap,
}

impl TrapStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TrapStatus::NotSnare => "not-snare",
            TrapStatus::SnareNotTrap => "snare-not-trap",
            TrapStatus::Trap => "trap",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapRecord {
    pub candidate: SnareCandidate,
    pub status: TrapStatus,
    /// Canonical form of `J` with the vertices of `S` coloured.
    pub key: CanonicalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrapError {
    /// Built-in generation stops at [`MAX_GENERATED_VERTICES`].
    MaxNTooLarge(usize),
    /// The pattern must be 2-connected.
    PatternNotTwoConnected,
}

impl fmt::Display for TrapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrapError::MaxNTooLarge(n) => write!(
                f,
                "built-in generation goes up to {MAX_GENERATED_VERTICES} vertices, got {n}; supply a graph6 stream"
            ),
            TrapError::PatternNotTwoConnected => f.write_str("pattern is not 2-connected"),
        }
    }
}

pub fn is_snare(c: &SnareCandidate) -> bool {
    c.s.is_subset(c.j.vertices())
        && c.j.is_independent(c.s)
        && c.j.is_connected_within(c.j.vertices().difference(c.s))
        && is_topological_minor(&c.h, &c.j)
}

/// Whether `c` is a trap. `c.h` must contain a cycle: then a snare never
/// has an isolated vertex outside `S`, and isolated vertices of `S` can be
/// dropped, so the proper subgraphs worth checking are the subgraphs
/// spanned by proper subsets of `E(J)`.
pub fn is_trap(c: &SnareCandidate) -> bool {
    classify(c) == TrapStatus::Trap
}

pub fn classify(c: &SnareCandidate) -> TrapStatus {
    let mut contains: BTreeMap<u64, bool> = BTreeMap::new();
    classify_cached(c, &mut contains)
}

/// As [`classify`], sharing pattern-containment results across calls with
/// the same `J` and `H`, keyed by edge mask.
fn classify_cached(c: &SnareCandidate, contains: &mut BTreeMap<u64, bool>) -> TrapStatus {
    if !is_snare(c) {
        return TrapStatus::NotSnare;
    }
    let edges = c.j.edges();
    assert!(edges.len() <= 64, "trap search needs at most 64 edges");
    for v in c.j.vertices().difference(c.s) {
        if c.j.degree(v) != 2 {
            continue;
        }
        let j = c.j.suppress(v).unwrap();
        let s: VertexSet = c.s.iter().map(|x| if x > v { x - 1 } else { x }).collect();
        if is_snare(&SnareCandidate { j, s, h: c.h.clone() }) {
            return TrapStatus::SnareNotTrap;
        }
    }
    let full = crate::parameters::low_bits(edges.len());
    let mut sub = SubgraphSearch { j: &c.j, s: c.s, h: &c.h, edges: &edges, contains, seen: BTreeSet::new() };
    // single deletions first: they settle most candidates
    for i in 0..edges.len() {
        let mask = full & !(1u64 << i);
        if sub.has_pattern(mask) && sub.connected_outside_s(mask) {
            return TrapStatus::SnareNotTrap;
        }
    }
    for i in 0..edges.len() {
        if sub.finds_snare_below(full & !(1u64 << i)) {
            return TrapStatus::SnareNotTrap;
        }
    }
    TrapStatus::Trap
}

struct SubgraphSearch<'a> {
    j: &'a Graph,
    s: VertexSet,
    h: &'a Graph,
    edges: &'a [Edge],
    contains: &'a mut BTreeMap<u64, bool>,
    seen: BTreeSet<u64>,
}

impl SubgraphSearch<'_> {
    fn support(&self, mask: u64) -> VertexSet {
        crate::parameters::bits(mask).flat_map(|i| [self.edges[i].u(), self.edges[i].v()]).collect()
    }

    fn spanned(&self, mask: u64) -> Graph {
        let mut g = Graph::empty(self.j.n()).unwrap();
        for i in crate::parameters::bits(mask) {
            g.add_edge(self.edges[i].u(), self.edges[i].v());
        }
        g
    }

    fn has_pattern(&mut self, mask: u64) -> bool {
        if let Some(&b) = self.contains.get(&mask) {
            return b;
        }
        let b = is_topological_minor(self.h, &self.spanned(mask));
        self.contains.insert(mask, b);
        b
    }

    /// The subgraph spanned by `mask`, minus `S`, is connected. `S` stays
    /// independent in every subgraph.
    fn connected_outside_s(&self, mask: u64) -> bool {
        let rest = self.support(mask).difference(self.s);
        self.spanned(mask).is_connected_within(rest)
    }

    /// Whether the subgraph spanned by `mask` or one below it is a snare.
    /// Pattern containment is inherited by supersets, so subsets without
    /// the pattern are cut off.
    fn finds_snare_below(&mut self, mask: u64) -> bool {
        if !self.seen.insert(mask) || !self.has_pattern(mask) {
            return false;
        }
        if self.connected_outside_s(mask) {
            return true;
        }
        crate::parameters::bits(mask).any(|i| self.finds_snare_below(mask & !(1u64 << i)))
    }
}

/// The size bound every `H`-trap satisfies:
/// `|V(J)| <= 5|E(H)| + 4|V(H)| + 9|S|`.
pub fn trap_size_bound(h: &Graph, s_len: usize) -> usize {
    5 * h.edge_count() + 4 * h.n() + 9 * s_len
}

/// All `H`-traps `(J, S)` with `J` connected on at most `max_n` vertices,
/// one per isomorphism class of the pair, from built-in generation.
pub fn enumerate_traps(h: &Graph, max_n: usize) -> Result<Vec<TrapRecord>, TrapError> {
    if max_n > MAX_GENERATED_VERTICES {
        return Err(TrapError::MaxNTooLarge(max_n));
    }
    enumerate_traps_in(h, max_n, (1..=max_n).flat_map(connected_graphs))
}

/// As [`enumerate_traps`], with candidate graphs `J` supplied by the
/// caller. Disconnected graphs and graphs over `max_n` vertices are
/// skipped; duplicates are harmless.
pub fn enumerate_traps_in<I>(h: &Graph, max_n: usize, graphs: I) -> Result<Vec<TrapRecord>, TrapError>
where
    I: IntoIterator<Item = Graph>,
{
    if !h.is_2_connected() {
        return Err(TrapError::PatternNotTwoConnected);
    }
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out: Vec<TrapRecord> = Vec::new();
    for j in graphs {
        if j.n() > max_n || j.n() < h.n() || !j.is_connected() || !is_topological_minor(h, &j) {
            continue;
        }
        let mut contains: BTreeMap<u64, bool> = BTreeMap::new();
        for s in independent_sets(&j) {
            let (key, j_canon, s_canon) = colored_canonical(&j, s);
            if !seen.insert(key.clone()) {
                continue;
            }
            let candidate = SnareCandidate { j: j.clone(), s, h: h.clone() };
            if classify_cached(&candidate, &mut contains) == TrapStatus::Trap {
                out.push(TrapRecord {
                    candidate: SnareCandidate { j: j_canon, s: s_canon, h: h.clone() },
                    status: TrapStatus::Trap,
                    key,
                });
            }
        }
    }
    out.sort_by(|a, b| (a.candidate.j.n(), &a.key).cmp(&(b.candidate.j.n(), &b.key)));
    Ok(out)
}

/// Independent sets of `g` as masks, the empty set included.
pub fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    fn go(g: &Graph, v: usize, cur: VertexSet, allowed: VertexSet, out: &mut Vec<VertexSet>) {
        if v == g.n() {
            out.push(cur);
            return;
        }
        go(g, v + 1, cur, allowed, out);
        if allowed.contains(v) {
            go(g, v + 1, cur.with(v), allowed.difference(g.neighbors(v)), out);
        }
    }
    go(g, 0, VertexSet::EMPTY, g.vertices(), &mut out);
    out
}

/// Canonical key of `(g, s)`, and the pair relabelled canonically.
fn colored_canonical(g: &Graph, s: VertexSet) -> (CanonicalForm, Graph, VertexSet) {
    let colors: Vec<u32> = (0..g.n()).map(|v| u32::from(s.contains(v))).collect();
    let (key, order) = canonical_labeling(g, &colors);
    let mut perm = alloc::vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    (key, g.permute(&perm), s.iter().map(|v| perm[v]).collect())
}
