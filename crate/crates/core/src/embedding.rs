//! Subdivision embeddings: an injective map of pattern vertices to host
//! vertices together with internally disjoint host paths for the pattern
//! edges. A pattern `h` is a topological minor of `g` exactly when such an
//! embedding exists.
//!
//! The search assigns pattern vertices one at a time (degree-filtered) and,
//! as soon as both ends of a pattern edge are placed, routes that edge by a
//! depth-first enumeration of host paths through unused vertices. All
//! choices are backtracked, so the search is complete.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::bitset::VertexSet;
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePath {
    /// Pattern edge.
    pub edge: Edge,
    /// Host vertices from the image of `edge.u()` to the image of `edge.v()`.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `branch[x]` is the host vertex that pattern vertex `x` maps to.
    pub branch: Vec<usize>,
    /// One path per pattern edge, in the pattern's edge order.
    pub paths: Vec<EdgePath>,
}

impl Embedding {
    /// Host vertices covered by the image.
    pub fn image_vertices(&self) -> VertexSet {
        let mut s: VertexSet = self.branch.iter().copied().collect();
        for p in &self.paths {
            s = s.union(p.vertices.iter().copied().collect());
        }
        s
    }

    /// Host edges covered by the image, sorted.
    pub fn image_edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> =
            self.paths.iter().flat_map(|p| p.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))).collect();
        out.sort_unstable();
        out
    }

    /// Checks every embedding invariant against `h` and `g`.
    pub fn validate(&self, h: &Graph, g: &Graph) -> Result<(), EmbeddingError> {
        if self.branch.len() != h.n() {
            return Err(EmbeddingError::WrongBranchCount);
        }
        let mut branch_set = VertexSet::EMPTY;
        for &b in &self.branch {
            if b >= g.n() || branch_set.contains(b) {
                return Err(EmbeddingError::BranchNotInjective);
            }
            branch_set.insert(b);
        }
        let h_edges = h.edges();
        if self.paths.len() != h_edges.len() {
            return Err(EmbeddingError::WrongPathCount);
        }
        let mut internal = VertexSet::EMPTY;
        for (p, &e) in self.paths.iter().zip(&h_edges) {
            if p.edge != e || p.vertices.len() < 2 {
                return Err(EmbeddingError::PathMismatch(e));
            }
            let (first, last) = (p.vertices[0], p.vertices[p.vertices.len() - 1]);
            if first != self.branch[e.u()] || last != self.branch[e.v()] {
                return Err(EmbeddingError::PathMismatch(e));
            }
            for w in p.vertices.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(EmbeddingError::NotAHostPath(e));
                }
            }
            for &x in &p.vertices[1..p.vertices.len() - 1] {
                if branch_set.contains(x) || internal.contains(x) {
                    return Err(EmbeddingError::PathsIntersect(e));
                }
                internal.insert(x);
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingError {
    WrongBranchCount,
    BranchNotInjective,
    WrongPathCount,
    PathMismatch(Edge),
    NotAHostPath(Edge),
    PathsIntersect(Edge),
    /// A forbidden pattern that is not 2-connected.
    NotTwoConnected(usize),
}

impl fmt::Display for EmbeddingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingError::WrongBranchCount => f.write_str("branch map has the wrong size"),
            EmbeddingError::BranchNotInjective => f.write_str("branch map is not injective"),
            EmbeddingError::WrongPathCount => f.write_str("wrong number of edge paths"),
            EmbeddingError::PathMismatch(e) => {
                write!(f, "path for {}-{} does not join the branch images", e.u(), e.v())
            }
            EmbeddingError::NotAHostPath(e) => {
                write!(f, "path for {}-{} uses a non-edge of the host", e.u(), e.v())
            }
            EmbeddingError::PathsIntersect(e) => {
                write!(f, "path for {}-{} meets another path internally", e.u(), e.v())
            }
            EmbeddingError::NotTwoConnected(i) => {
                write!(f, "forbidden graph #{i} is not 2-connected")
            }
        }
    }
}

/// A forbidden subdivision found in a host: which pattern, how it embeds,
/// and the subgraph it spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub pattern: usize,
    pub embedding: Embedding,
    pub vertices: VertexSet,
    pub edges: Vec<Edge>,
}

impl Witness {
    pub(crate) fn new(pattern: usize, embedding: Embedding) -> Witness {
        Witness { pattern, vertices: embedding.image_vertices(), edges: embedding.image_edges(), embedding }
    }
}

/// Finds a subdivision of `h` inside `g`, if any.
pub fn find_embedding(h: &Graph, g: &Graph) -> Option<Embedding> {
    let mut found = None;
    let _ = for_each_embedding(h, g, |e| {
        found = Some(e.clone());
        ControlFlow::Break(())
    });
    found
}

pub fn is_topological_minor(h: &Graph, g: &Graph) -> bool {
    find_embedding(h, g).is_some()
}

/// True iff no pattern in `forbidden` is a topological minor of `g`.
pub fn is_free(forbidden: &[Graph], g: &Graph) -> bool {
    forbidden.iter().all(|h| !is_topological_minor(h, g))
}

/// Calls `visit` on every embedding of `h` into `g` (automorphic images of
/// `h` included) until it returns `Break`.
pub fn for_each_embedding<F>(h: &Graph, g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&Embedding) -> ControlFlow<()>,
{
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return ControlFlow::Continue(());
    }
    let order = placement_order(h);
    let h_edges = h.edges();
    // for each placement step, the pattern edges closed by it
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    let mut pos = vec![0usize; h.n()];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    for (ei, e) in h_edges.iter().enumerate() {
        closes[pos[e.u()].max(pos[e.v()])].push(ei);
    }
    let mut st = EmbedSearch {
        h,
        g,
        order,
        closes,
        h_edges,
        branch: vec![usize::MAX; h.n()],
        paths: Vec::new(),
        used: VertexSet::EMPTY,
    };
    st.place(0, &mut visit)
}

/// Pattern vertices in an order where each (after the first) has as many
/// already placed neighbours as possible; ties by degree then label.
fn placement_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = VertexSet::EMPTY;
    for _ in 0..h.n() {
        let next = h
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&v| (h.neighbors(v).intersection(placed).len(), h.degree(v), usize::MAX - v))
            .unwrap();
        order.push(next);
        placed.insert(next);
    }
    order
}

struct EmbedSearch<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<usize>,
    closes: Vec<Vec<usize>>,
    h_edges: Vec<Edge>,
    branch: Vec<usize>,
    paths: Vec<(usize, Vec<usize>)>,
    used: VertexSet,
}

impl EmbedSearch<'_> {
    fn place<F>(&mut self, step: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Embedding) -> ControlFlow<()>,
    {
        if step == self.order.len() {
            let mut paths: Vec<EdgePath> =
                self.paths.iter().map(|(ei, vs)| EdgePath { edge: self.h_edges[*ei], vertices: vs.clone() }).collect();
            paths.sort_by_key(|p| p.edge);
            return visit(&Embedding { branch: self.branch.clone(), paths });
        }
        let x = self.order[step];
        let need = self.h.degree(x);
        for cand in self.g.vertices().difference(self.used) {
            if self.g.degree(cand) < need {
                continue;
            }
            self.branch[x] = cand;
            self.used.insert(cand);
            self.route(step, 0, visit)?;
            self.used.remove(cand);
            self.branch[x] = usize::MAX;
        }
        ControlFlow::Continue(())
    }

    /// Routes the `k`-th edge closed at `step`, then the rest, then moves on.
    fn route<F>(&mut self, step: usize, k: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Embedding) -> ControlFlow<()>,
    {
        if k == self.closes[step].len() {
            if !self.pending_routable(step) {
                return ControlFlow::Continue(());
            }
            return self.place(step + 1, visit);
        }
        let ei = self.closes[step][k];
        let e = self.h_edges[ei];
        let (from, to) = (self.branch[e.u()], self.branch[e.v()]);
        let mut trail = vec![from];
        self.extend(from, to, step, k, ei, &mut trail, visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend<F>(
        &mut self,
        at: usize,
        to: usize,
        step: usize,
        k: usize,
        ei: usize,
        trail: &mut Vec<usize>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Embedding) -> ControlFlow<()>,
    {
        let nb = self.g.neighbors(at);
        if nb.contains(to) {
            trail.push(to);
            self.paths.push((ei, trail.clone()));
            let r = self.route(step, k + 1, visit);
            self.paths.pop();
            trail.pop();
            r?;
        }
        for w in nb.difference(self.used) {
            // w must still be able to reach the target
            let free = self.g.vertices().difference(self.used).without(w);
            if !self.g.neighbors(w).contains(to)
                && self.g.reach(w, free.with(w)).intersection(self.g.neighbors(to)).is_empty()
            {
                continue;
            }
            self.used.insert(w);
            trail.push(w);
            let r = self.extend(w, to, step, k, ei, trail, visit);
            trail.pop();
            self.used.remove(w);
            r?;
        }
        ControlFlow::Continue(())
    }

    /// Each placed branch vertex needs a distinct free neighbour for every
    /// pattern edge it still has to route.
    fn pending_routable(&self, step: usize) -> bool {
        self.order[..=step].iter().all(|&x| {
            let unplaced = self.h.neighbors(x).iter().filter(|&y| self.branch[y] == usize::MAX).count();
            unplaced == 0 || self.g.neighbors(self.branch[x]).difference(self.used).len() >= unplaced
        })
    }
}

/// An edge-minimal forbidden subdivision in `g`, or `None` if `g` is free of
/// every pattern. Patterns are tried in list order; the first hit is then
/// shrunk by deleting one edge at a time and re-searching inside what is
/// left, until no single deletion keeps a forbidden subdivision.
pub fn find_minimal_witness(forbidden: &[Graph], g: &Graph) -> Result<Option<Witness>, EmbeddingError> {
    check_two_connected(forbidden)?;
    Ok(minimal_witness_unchecked(forbidden, g, |_, _| true))
}

pub fn check_two_connected(forbidden: &[Graph]) -> Result<(), EmbeddingError> {
    match forbidden.iter().position(|h| !h.is_2_connected()) {
        Some(i) => Err(EmbeddingError::NotTwoConnected(i)),
        None => Ok(()),
    }
}

/// As [`find_minimal_witness`], with `may_contain(i, host)` used to skip
/// patterns known to be absent.
pub(crate) fn minimal_witness_unchecked<P>(forbidden: &[Graph], g: &Graph, may_contain: P) -> Option<Witness>
where
    P: Fn(usize, &Graph) -> bool,
{
    let first_hit = |host: &Graph| -> Option<Witness> {
        forbidden.iter().enumerate().find_map(|(i, h)| {
            if !may_contain(i, host) {
                return None;
            }
            find_embedding(h, host).map(|e| Witness::new(i, e))
        })
    };
    let mut w = first_hit(g)?;
    'shrink: loop {
        for &e in &w.edges {
            let rest: Vec<Edge> = w.edges.iter().copied().filter(|&f| f != e).collect();
            let host = spanning(g, &rest);
            if let Some(smaller) = first_hit(&host) {
                w = smaller;
                continue 'shrink;
            }
        }
        return Some(w);
    }
}

/// The graph on `g`'s vertex labels with only the edges `edges`.
pub(crate) fn spanning(g: &Graph, edges: &[Edge]) -> Graph {
    let mut host = Graph::empty(g.n()).unwrap();
    for &e in edges {
        host.add_edge(e.u(), e.v());
    }
    host
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named::*;

    #[test]
    fn cycles_hold_triangles() {
        let e = find_embedding(&complete(3), &cycle(5)).unwrap();
        e.validate(&complete(3), &cycle(5)).unwrap();
        assert_eq!(e.image_edges().len(), 5);
    }

    #[test]
    fn k23_not_in_k4() {
        assert!(find_embedding(&complete_bipartite(2, 3), &complete(4)).is_none());
    }

    #[test]
    fn identity_embedding() {
        let k4 = complete(4);
        let e = find_embedding(&k4, &k4).unwrap();
        e.validate(&k4, &k4).unwrap();
        assert!(!is_free(&[k4.clone(), complete_bipartite(2, 3)], &k4));
    }

    #[test]
    fn freeness_examples() {
        assert!(is_free(&[complete(3)], &path(6)));
        assert!(is_free(&[diamond()], &cycle(5)));
    }

    #[test]
    fn outerplanar_hosts_are_free() {
        let forbidden = [complete(4), complete_bipartite(2, 3)];
        for n in 3..9 {
            // fans of triangles on a path are maximal outerplanar
            let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.extend((2..n).map(|i| (0, i)));
            edges.sort();
            edges.dedup();
            let g = Graph::from_edges(n, edges).unwrap();
            assert!(is_free(&forbidden, &g));
        }
    }

    #[test]
    fn validation_catches_shared_internal_vertices() {
        let k3 = complete(3);
        let host = complete(4);
        let bad = Embedding {
            branch: vec![0, 1, 2],
            paths: vec![
                EdgePath { edge: Edge::new(0, 1), vertices: vec![0, 3, 1] },
                EdgePath { edge: Edge::new(0, 2), vertices: vec![0, 3, 2] },
                EdgePath { edge: Edge::new(1, 2), vertices: vec![1, 2] },
            ],
        };
        assert_eq!(bad.validate(&k3, &host), Err(EmbeddingError::PathsIntersect(Edge::new(0, 2))));
    }

    #[test]
    fn minimal_witnesses() {
        assert_eq!(find_minimal_witness(&[complete(3)], &path(5)).unwrap(), None);
        let w = find_minimal_witness(&[complete(3)], &complete(4)).unwrap().unwrap();
        assert_eq!(w.edges.len(), 3);
        let w = find_minimal_witness(&[complete(4), complete_bipartite(2, 3)], &w_plus(3).unwrap()).unwrap().unwrap();
        assert_eq!(w.pattern, 1);
        assert_eq!(w.vertices.len(), 7);
        assert_eq!(w.edges.len(), 8);
        assert_eq!(find_minimal_witness(&[path(3)], &complete(3)), Err(EmbeddingError::NotTwoConnected(0)));
    }
}
