//! Simple undirected graphs on dense vertex labels `0..n` with `n <= 64`.
//!
//! Adjacency is kept as one bitset row per vertex. Every structural operation
//! returns a fresh graph; operations that drop vertices relabel the survivors
//! in increasing order of their old labels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;

pub const MAX_VERTICES: usize = 64;

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "loop at vertex {a}");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.0
    }

    #[inline]
    pub fn v(self) -> usize {
        self.1
    }

    #[inline]
    pub fn ends(self) -> (usize, usize) {
        (self.0, self.1)
    }

    #[inline]
    pub fn touches(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Edge {
        Edge::new(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices(usize),
    VertexOutOfRange { vertex: usize, n: usize },
    Loop(usize),
    ParallelEdge(usize, usize),
    MissingEdge(usize, usize),
    NotDegreeTwo { vertex: usize, degree: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is out of range for a graph on {n} vertices")
            }
            GraphError::Loop(v) => write!(f, "loop at vertex {v}"),
            GraphError::ParallelEdge(u, v) => write!(f, "edge {u}-{v} appears twice"),
            GraphError::MissingEdge(u, v) => write!(f, "edge {u}-{v} is not in the graph"),
            GraphError::NotDegreeTwo { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, expected 2")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            let e = Edge::new(u, v);
            return Err(GraphError::ParallelEdge(e.u(), e.v()));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `uv`; a no-op if already present.
    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, x: VertexSet) -> Result<(), GraphError> {
        match x.difference(self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    fn check_edge(&self, e: Edge) -> Result<(), GraphError> {
        self.check_vertex(e.u())?;
        self.check_vertex(e.v())?;
        if self.has_edge(e.u(), e.v()) {
            Ok(())
        } else {
            Err(GraphError::MissingEdge(e.u(), e.v()))
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// All edges in lexicographic order; an edge's position in this list is
    /// its index in edge bitmasks used throughout the crate.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| v >= self.n || self.adj[v] & s.0 == 0)
    }

    /// The subgraph induced by `x`, relabeled `0..|x|`. The second component
    /// maps each new label to its old label.
    pub fn induced_subgraph(&self, x: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(x)?;
        let map: Vec<usize> = x.iter().collect();
        Ok((self.relabel_onto(&map), map))
    }

    /// The subgraph formed by the edges `f` and their endpoints, relabeled in
    /// increasing order of the old labels.
    pub fn edge_induced_subgraph(&self, f: &[Edge]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut verts = VertexSet::EMPTY;
        for &e in f {
            self.check_edge(e)?;
            verts.insert(e.u());
            verts.insert(e.v());
        }
        let map: Vec<usize> = verts.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph { n: map.len(), adj: vec![0; map.len()] };
        for &e in f {
            g.add_edge(index[e.u()], index[e.v()]);
        }
        Ok((g, map))
    }

    /// Same vertex set, edges `f` removed.
    pub fn delete_edges(&self, f: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &e in f {
            g.check_edge(e)?;
            g.remove_edge(e.u(), e.v());
        }
        Ok(g)
    }

    /// Removes `x` and all incident edges; survivors keep their relative order.
    pub fn delete_vertices(&self, x: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(x)?;
        let keep: Vec<usize> = self.vertices().difference(x).iter().collect();
        Ok(self.relabel_onto(&keep))
    }

    /// `G/v` for a degree-2 vertex `v`: removes `v` and joins its two
    /// neighbours. If they are already adjacent the result is simply `G - v`.
    pub fn suppress(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let d = self.degree(v);
        if d != 2 {
            return Err(GraphError::NotDegreeTwo { vertex: v, degree: d });
        }
        let mut nb = self.neighbors(v).iter();
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        let mut g = self.clone();
        g.add_edge(a, b);
        g.delete_vertices(VertexSet::singleton(v))
    }

    /// Merges the ends of `e` into the smaller label and simplifies.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        let (keep, gone) = e.ends();
        let mut g = self.clone();
        for w in self.neighbors(gone).without(keep) {
            g.add_edge(keep, w);
        }
        g.delete_vertices(VertexSet::singleton(gone))
    }

    /// Applies `perm` (old label -> new label).
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for e in self.edges() {
            g.add_edge(perm[e.u()], perm[e.v()]);
        }
        g
    }

    /// Vertices of `other` are shifted to follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for e in self.edges() {
            g.add_edge(e.u(), e.v());
        }
        for e in other.edges() {
            g.add_edge(e.u() + self.n, e.v() + self.n);
        }
        Ok(g)
    }

    /// The graph on `map.len()` vertices where new label `i` stands for old
    /// label `map[i]`.
    pub(crate) fn relabel_onto(&self, map: &[usize]) -> Graph {
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0u64; map.len()];
        for (i, &v) in map.iter().enumerate() {
            let mut row = 0u64;
            for w in VertexSet(self.adj[v]) {
                if index[w] != usize::MAX {
                    row |= 1u64 << index[w];
                }
            }
            adj[i] = row;
        }
        Graph { n: map.len(), adj }
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            let fresh = VertexSet(next).intersection(within).difference(seen);
            seen = seen.union(fresh);
            frontier = fresh;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.vertices()).len() == self.n
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => false,
            Some(v) => self.reach(v, within) == within,
        }
    }

    /// More than two vertices and no cut vertex.
    pub fn is_2_connected(&self) -> bool {
        if self.n <= 2 || !self.is_connected() {
            return false;
        }
        let all = self.vertices();
        (0..self.n).all(|v| self.is_connected_within(all.without(v)))
    }

    /// Vertex sets of the blocks (maximal 2-connected subgraphs and bridges).
    /// Isolated vertices belong to no block. Each block is an induced
    /// subgraph of `self`.
    pub fn blocks(&self) -> Vec<VertexSet> {
        let mut st = BlockSearch {
            g: self,
            disc: [usize::MAX; MAX_VERTICES],
            low: [0; MAX_VERTICES],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        for v in 0..self.n {
            if st.disc[v] == usize::MAX && self.degree(v) > 0 {
                st.visit(v, usize::MAX);
            }
        }
        st.blocks.sort_by_key(|b| b.0.trailing_zeros());
        st.blocks
    }
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: [usize; MAX_VERTICES],
    low: [usize; MAX_VERTICES],
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for w in self.g.neighbors(v) {
            if self.disc[w] == usize::MAX {
                self.stack.push((v, w));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", e.u(), e.v())?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::named::{complete, complete_bipartite, cycle, fig4, path, theta_fig3};

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(GraphError::ParallelEdge(0, 1)));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, .. })));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4);
        let (g, map) = k4.induced_subgraph(VertexSet::full(4)).unwrap();
        assert_eq!(g, k4);
        assert_eq!(map, [0, 1, 2, 3]);
        let (g, map) = k4.induced_subgraph(VertexSet::from_slice(&[0, 2, 3])).unwrap();
        assert!(are_isomorphic(&g, &complete(3)));
        assert_eq!(map, [0, 2, 3]);
        // the two branch vertices of the theta graph are adjacent
        let (g, _) = theta_fig3().induced_subgraph(VertexSet::from_slice(&[0, 1])).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert!(k4.induced_subgraph(VertexSet::singleton(4)).is_err());
    }

    #[test]
    fn edge_induced_subgraphs() {
        let k3 = complete(3);
        let (g, _) = k3.edge_induced_subgraph(&[Edge::new(0, 2)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        let (g, _) = k3.edge_induced_subgraph(&k3.edges()).unwrap();
        assert_eq!(g, k3);
        // all edges at one degree-3 vertex of K2,3
        let k23 = complete_bipartite(2, 3);
        let star: Vec<Edge> = k23.edges().into_iter().filter(|e| e.touches(0)).collect();
        let (g, _) = k23.edge_induced_subgraph(&star).unwrap();
        assert!(are_isomorphic(&g, &complete_bipartite(1, 3)));
        assert_eq!(k3.edge_induced_subgraph(&[Edge::new(0, 5)]), Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 }));
    }

    #[test]
    fn deletions() {
        let p3 = complete(3).delete_edges(&[Edge::new(0, 1)]).unwrap();
        assert!(are_isomorphic(&p3, &path(3)));
        let k3 = complete(4).delete_vertices(VertexSet::singleton(2)).unwrap();
        assert_eq!(k3, complete(3));
        let g = fig4().delete_edges(&[Edge::new(2, 5)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 9));
        assert_eq!(complete(3).delete_edges(&[Edge::new(0, 1), Edge::new(0, 1)]), Err(GraphError::MissingEdge(0, 1)));
    }

    #[test]
    fn suppression() {
        assert_eq!(cycle(4).suppress(1).unwrap(), complete(3));
        assert_eq!(path(3).suppress(1).unwrap(), complete(2));
        // triangle 0,1,2 plus vertex 3 adjacent to 0 and 1
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(g.suppress(3).unwrap(), complete(3));
        assert_eq!(complete(4).suppress(0), Err(GraphError::NotDegreeTwo { vertex: 0, degree: 3 }));
    }

    #[test]
    fn contraction() {
        assert_eq!(complete(3).contract_edge(Edge::new(0, 2)).unwrap(), complete(2));
        assert_eq!(cycle(4).contract_edge(Edge::new(0, 1)).unwrap(), complete(3));
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let g = theta_fig3().contract_edge(Edge::new(0, 1)).unwrap();
        assert!(are_isomorphic(&g, &bowtie));
        assert_eq!(
            complete(3).contract_edge(Edge::new(0, 3)).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 3 }
        );
        assert_eq!(path(3).contract_edge(Edge::new(0, 2)).unwrap_err(), GraphError::MissingEdge(0, 2));
    }

    #[test]
    fn connectivity() {
        assert!(complete(1).is_connected());
        assert!(!Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().components().is_empty());
        assert!(complete(3).is_2_connected());
        assert!(!path(3).is_2_connected());
        assert!(!complete(2).is_2_connected());
        let two = complete(2).disjoint_union(&complete(3)).unwrap();
        assert_eq!(two.components(), [VertexSet(0b11), VertexSet(0b11100)]);
    }

    #[test]
    fn blocks_of_a_bowtie_with_tail() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (4, 5)]).unwrap();
        let mut b = g.blocks();
        b.sort();
        assert_eq!(b, [VertexSet(0b000111), VertexSet(0b011001), VertexSet(0b110000)]);
    }
}
