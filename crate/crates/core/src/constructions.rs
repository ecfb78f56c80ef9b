//! Named graphs, fans and hemmed graphs.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::{Edge, Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    Graph(GraphError),
    /// The shared set of a fan must be a proper subset of the base vertices.
    SharedSetNotProper,
    ZeroCopies,
    ParameterOutOfRange {
        family: &'static str,
        value: usize,
    },
    PathTooShort,
    NotAPath,
}

impl From<GraphError> for ConstructionError {
    fn from(e: GraphError) -> Self {
        ConstructionError::Graph(e)
    }
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::Graph(e) => e.fmt(f),
            ConstructionError::SharedSetNotProper => {
                f.write_str("fan shared set must be a proper subset of the base vertices")
            }
            ConstructionError::ZeroCopies => f.write_str("fan multiplicity must be positive"),
            ConstructionError::ParameterOutOfRange { family, value } => {
                write!(f, "parameter {value} is out of range for {family}")
            }
            ConstructionError::PathTooShort => f.write_str("distinguished path needs at least two vertices"),
            ConstructionError::NotAPath => f.write_str("distinguished vertices do not form a path"),
        }
    }
}

pub mod named {
    //! Fixed graphs and parametrized families. Constructors whose parameters
    //! cannot be out of range panic only when the vertex limit is exceeded.

    use super::*;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Side of size `m` is `0..m`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let mut g = Graph::empty(m + n).unwrap();
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `C_n` for `n >= 3`; smaller `n` gives a path.
    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// K4 minus an edge: degree-3 vertices 0 and 1, degree-2 vertices 2 and 3.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    /// K2,3 with its degree-3 vertices 0 and 1 joined.
    pub fn k23_plus() -> Graph {
        let mut g = complete_bipartite(2, 3);
        g.add_edge(0, 1);
        g
    }

    /// Hub 0 and a cycle `1..=2k`; the hub sees every other cycle vertex
    /// starting from 1.
    pub fn w_plus(k: usize) -> Result<Graph, ConstructionError> {
        if k < 3 || 2 * k + 1 > crate::graph::MAX_VERTICES {
            return Err(ConstructionError::ParameterOutOfRange { family: "w-plus", value: k });
        }
        let mut g = Graph::empty(2 * k + 1)?;
        for i in 0..2 * k {
            g.add_edge(1 + i, 1 + (i + 1) % (2 * k));
        }
        for i in 0..k {
            g.add_edge(0, 1 + 2 * i);
        }
        Ok(g)
    }

    /// Two degree-3 vertices 0 and 1 joined directly and by two paths of
    /// length three (0-2-3-1 and 0-4-5-1).
    pub fn theta_fig3() -> Graph {
        Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap()
    }

    /// The edge of [`theta_fig3`] joining its degree-3 vertices.
    pub fn theta_fig3_edge() -> Edge {
        Edge::new(0, 1)
    }

    /// Hexagon `0..6` with chords 2-5, 0-4, 0-3 and 1-3.
    pub fn fig4() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 5), (0, 4), (0, 3), (1, 3)]).unwrap()
    }

    /// The chord of [`fig4`] whose contraction raises the outerplanar edit
    /// distance.
    pub fn fig4_edge() -> Edge {
        Edge::new(2, 5)
    }

    /// Vertices of `g` with degree two.
    pub fn degree_two_vertices(g: &Graph) -> VertexSet {
        (0..g.n()).filter(|&v| g.degree(v) == 2).collect()
    }
}

/// `Fan(base, shared, copies)`: `copies` copies of `base` glued along the
/// shared vertices and the edges among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanSpec {
    pub base: Graph,
    pub shared: VertexSet,
    pub copies: usize,
}

impl FanSpec {
    pub fn new(base: Graph, shared: VertexSet, copies: usize) -> Result<FanSpec, ConstructionError> {
        if !shared.is_subset(base.vertices()) || shared == base.vertices() {
            return Err(ConstructionError::SharedSetNotProper);
        }
        if copies == 0 {
            return Err(ConstructionError::ZeroCopies);
        }
        Ok(FanSpec { base, shared, copies })
    }
}

/// Shared vertices come first in increasing base order, then each copy's
/// private vertices, copy by copy, in increasing base order.
pub fn fan(spec: &FanSpec) -> Result<Graph, ConstructionError> {
    let base = &spec.base;
    let shared: Vec<usize> = spec.shared.iter().collect();
    let private: Vec<usize> = base.vertices().difference(spec.shared).iter().collect();
    let n = shared.len() + spec.copies * private.len();
    let mut g = Graph::empty(n)?;
    let mut label = alloc::vec![0usize; base.n()];
    for (i, &v) in shared.iter().enumerate() {
        label[v] = i;
    }
    for copy in 0..spec.copies {
        for (i, &v) in private.iter().enumerate() {
            label[v] = shared.len() + copy * private.len() + i;
        }
        for e in base.edges() {
            g.add_edge(label[e.u()], label[e.v()]);
        }
    }
    Ok(g)
}

/// A graph with a distinguished path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HemmedGraph {
    pub graph: Graph,
    pub path: Vec<usize>,
}

impl HemmedGraph {
    pub fn new(graph: Graph, path: Vec<usize>) -> Result<HemmedGraph, ConstructionError> {
        let distinct: VertexSet = path.iter().copied().collect();
        if distinct.len() != path.len() || path.iter().any(|&v| v >= graph.n()) {
            return Err(ConstructionError::NotAPath);
        }
        if path.windows(2).any(|w| !graph.has_edge(w[0], w[1])) {
            return Err(ConstructionError::NotAPath);
        }
        Ok(HemmedGraph { graph, path })
    }
}

/// Inserts a new vertex between each pair of consecutive path vertices,
/// adjacent to both; the new path alternates old and new vertices. New
/// vertices take labels `n, n+1, ...` in path order.
pub fn sigma(h: &HemmedGraph) -> Result<HemmedGraph, ConstructionError> {
    let k = h.path.len();
    if k < 2 {
        return Err(ConstructionError::PathTooShort);
    }
    let n = h.graph.n();
    let mut rows: Vec<u64> = h.graph.rows().to_vec();
    if n + k - 1 > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n + k - 1).into());
    }
    rows.resize(n + k - 1, 0);
    let mut g = Graph::from_rows(n + k - 1, rows);
    let mut path = Vec::with_capacity(2 * k - 1);
    for i in 0..k - 1 {
        let u = n + i;
        g.add_edge(h.path[i], u);
        g.add_edge(u, h.path[i + 1]);
        path.push(h.path[i]);
        path.push(u);
    }
    path.push(h.path[k - 1]);
    Ok(HemmedGraph { graph: g, path })
}

/// `G_l` of the outerplanar brittleness family together with the edge `f`
/// whose removal makes every member outerplanar. `G_1` is K4 with the path
/// `0 1 2 3`; `f` joins the first path vertex to the third.
pub fn prop_example_family(l: usize) -> Result<(HemmedGraph, Edge), ConstructionError> {
    if l == 0 {
        return Err(ConstructionError::ParameterOutOfRange { family: "prop-example", value: l });
    }
    let mut h = HemmedGraph::new(named::complete(4), alloc::vec![0, 1, 2, 3])?;
    for _ in 1..l {
        h = sigma(&h)?;
    }
    Ok((h, Edge::new(0, 2)))
}
