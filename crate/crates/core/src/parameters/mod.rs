//! The four parameters of a graph relative to a class: edit distance `e`,
//! edge-brittleness `eta`, vertex-brittleness `kappa` and capacity `nu`.
//!
//! Every solver returns a certificate that [`replay`] checks against the
//! input independently of the search that produced it.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::classes::GraphClass;
use crate::embedding::{spanning, Witness};
use crate::graph::{Edge, Graph};

mod capacity;
mod edit;
mod eta;
mod kappa;
pub mod oracle;

pub use capacity::{capacity, minimal_witness_sets};
pub use edit::edit_distance;
pub use eta::{edge_brittleness, edge_brittleness_at_least, LowerBound};
pub use kappa::{vertex_brittleness, y_partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Parameter {
    EditDistance,
    EdgeBrittleness,
    VertexBrittleness,
    Capacity,
}

impl Parameter {
    pub const ALL: [Parameter; 4] =
        [Parameter::EditDistance, Parameter::EdgeBrittleness, Parameter::VertexBrittleness, Parameter::Capacity];

    /// Short name: `e`, `eta`, `kappa` or `nu`.
    pub fn symbol(self) -> &'static str {
        match self {
            Parameter::EditDistance => "e",
            Parameter::EdgeBrittleness => "eta",
            Parameter::VertexBrittleness => "kappa",
            Parameter::Capacity => "nu",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Parameter> {
        Parameter::ALL.into_iter().find(|p| p.symbol() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Edges whose deletion puts the graph in the class.
    Deletion(Vec<Edge>),
    /// Parts inducing members of the class.
    VertexPartition(Vec<VertexSet>),
    /// Edge parts spanning members of the class, and the vertices meeting
    /// more than one part.
    EdgePartition { boundary: VertexSet, parts: Vec<Vec<Edge>> },
    /// Pairwise edge-disjoint subgraphs outside the class.
    Packing(Vec<Witness>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterReport {
    pub parameter: Parameter,
    pub value: usize,
    pub certificate: Certificate,
    pub nodes_expanded: u64,
}

/// Size guards. `eta` and `kappa` refuse graphs over `max_vertices` or
/// `max_edges`; the brute-force oracles refuse graphs over
/// `oracle_max_edges` edges. Every solver needs at most 64 edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub oracle_max_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 20, max_edges: 40, oracle_max_edges: 16 }
    }
}

impl Limits {
    fn check_partition_search(&self, parameter: Parameter, g: &Graph) -> Result<(), SolveError> {
        if g.n() > self.max_vertices || g.edge_count() > self.max_edges {
            return Err(SolveError::TooLarge {
                parameter,
                vertices: g.n(),
                edges: g.edge_count(),
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    TooLarge { parameter: Parameter, vertices: usize, edges: usize, max_vertices: usize, max_edges: usize },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::TooLarge { parameter, vertices, edges, max_vertices, max_edges } => write!(
                f,
                "{} refuses a graph with {vertices} vertices and {edges} edges (limit {max_vertices} vertices, {max_edges} edges)",
                parameter.symbol()
            ),
        }
    }
}

/// Sorted edges of `g` as mask bits.
pub(crate) struct EdgeIndex {
    pub edges: Vec<Edge>,
}

impl EdgeIndex {
    pub fn new(parameter: Parameter, g: &Graph) -> Result<EdgeIndex, SolveError> {
        let m = g.edge_count();
        if m > 64 {
            return Err(SolveError::TooLarge {
                parameter,
                vertices: g.n(),
                edges: m,
                max_vertices: crate::graph::MAX_VERTICES,
                max_edges: 64,
            });
        }
        Ok(EdgeIndex { edges: g.edges() })
    }

    pub fn full(&self) -> u64 {
        low_bits(self.edges.len())
    }

    pub fn bit(&self, e: Edge) -> u64 {
        1u64 << self.edges.binary_search(&e).expect("edge of the indexed graph")
    }

    pub fn mask(&self, edges: &[Edge]) -> u64 {
        edges.iter().fold(0, |m, &e| m | self.bit(e))
    }

    pub fn edges_of(&self, mask: u64) -> Vec<Edge> {
        bits(mask).map(|i| self.edges[i]).collect()
    }

    /// The spanning subgraph of `g` with the edges in `mask`.
    pub fn graph(&self, g: &Graph, mask: u64) -> Graph {
        spanning(g, &self.edges_of(mask))
    }
}

pub(crate) fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Vertices incident with edges of at least two parts.
pub fn boundary(parts: &[Vec<Edge>]) -> VertexSet {
    let mut seen = VertexSet::EMPTY;
    let mut twice = VertexSet::EMPTY;
    for part in parts {
        let touched: VertexSet = part.iter().flat_map(|e| [e.u(), e.v()]).collect();
        twice = twice.union(seen.intersection(touched));
        seen = seen.union(touched);
    }
    twice
}

/// Number of edges of `g` joining different parts.
pub fn cross_edges(g: &Graph, parts: &[VertexSet]) -> usize {
    g.edges().into_iter().filter(|e| !parts.iter().any(|p| p.contains(e.u()) && p.contains(e.v()))).count()
}

/// Why a certificate failed to replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReplayError {
    WrongKind,
    NotAnEdge(Edge),
    /// The certificate is feasible but its size is not the reported value.
    ValueMismatch {
        reported: usize,
        replayed: usize,
    },
    NotAPartition,
    PartOutsideClass(usize),
    WitnessInsideClass(usize),
    WitnessesOverlap,
}

/// Checks that `report` is a feasible certificate for `g` whose size is the
/// reported value. Optimality is not checked.
pub fn replay(c: &GraphClass, g: &Graph, report: &ParameterReport) -> Result<(), ReplayError> {
    let value = match (&report.parameter, &report.certificate) {
        (Parameter::EditDistance, Certificate::Deletion(f)) => {
            if let Some(&e) = f.iter().find(|e| !has(g, **e)) {
                return Err(ReplayError::NotAnEdge(e));
            }
            let rest = g.delete_edges(f).map_err(|_| ReplayError::NotAPartition)?;
            if !c.contains(&rest) {
                return Err(ReplayError::PartOutsideClass(0));
            }
            f.len()
        }
        (Parameter::EdgeBrittleness, Certificate::VertexPartition(parts)) => {
            let mut union = VertexSet::EMPTY;
            for (i, &p) in parts.iter().enumerate() {
                if p.is_empty() || !union.intersection(p).is_empty() {
                    return Err(ReplayError::NotAPartition);
                }
                union = union.union(p);
                let (h, _) = g.induced_subgraph(p).map_err(|_| ReplayError::NotAPartition)?;
                if !c.contains(&h) {
                    return Err(ReplayError::PartOutsideClass(i));
                }
            }
            if union != g.vertices() {
                return Err(ReplayError::NotAPartition);
            }
            cross_edges(g, parts)
        }
        (Parameter::VertexBrittleness, Certificate::EdgePartition { boundary: b, parts }) => {
            let mut all: Vec<Edge> = parts.iter().flatten().copied().collect();
            if let Some(&e) = all.iter().find(|e| !has(g, **e)) {
                return Err(ReplayError::NotAnEdge(e));
            }
            all.sort_unstable();
            if all != g.edges() || parts.iter().any(|p| p.is_empty()) {
                return Err(ReplayError::NotAPartition);
            }
            for (i, p) in parts.iter().enumerate() {
                let (h, _) = g.edge_induced_subgraph(p).map_err(|_| ReplayError::NotAPartition)?;
                if !c.contains(&h) {
                    return Err(ReplayError::PartOutsideClass(i));
                }
            }
            let real = boundary(parts);
            if real != *b {
                return Err(ReplayError::ValueMismatch { reported: b.len(), replayed: real.len() });
            }
            real.len()
        }
        (Parameter::Capacity, Certificate::Packing(ws)) => {
            let mut used: Vec<Edge> = Vec::new();
            for (i, w) in ws.iter().enumerate() {
                if let Some(&e) = w.edges.iter().find(|e| !has(g, **e)) {
                    return Err(ReplayError::NotAnEdge(e));
                }
                if w.edges.iter().any(|e| used.contains(e)) {
                    return Err(ReplayError::WitnessesOverlap);
                }
                used.extend_from_slice(&w.edges);
                let (h, _) = g.edge_induced_subgraph(&w.edges).map_err(|_| ReplayError::NotAPartition)?;
                if c.contains(&h) {
                    return Err(ReplayError::WitnessInsideClass(i));
                }
            }
            ws.len()
        }
        _ => return Err(ReplayError::WrongKind),
    };
    if value != report.value {
        return Err(ReplayError::ValueMismatch { reported: report.value, replayed: value });
    }
    Ok(())
}

fn has(g: &Graph, e: Edge) -> bool {
    e.v() < g.n() && g.has_edge(e.u(), e.v())
}

/// All four parameters, in [`Parameter::ALL`] order.
pub fn all_parameters(c: &GraphClass, g: &Graph, limits: &Limits) -> Result<[ParameterReport; 4], SolveError> {
    Ok([edit_distance(c, g)?, edge_brittleness(c, g, limits)?, vertex_brittleness(c, g, limits)?, capacity(c, g)?])
}

/// Solves one parameter.
pub fn solve(p: Parameter, c: &GraphClass, g: &Graph, limits: &Limits) -> Result<ParameterReport, SolveError> {
    match p {
        Parameter::EditDistance => edit_distance(c, g),
        Parameter::EdgeBrittleness => edge_brittleness(c, g, limits),
        Parameter::VertexBrittleness => vertex_brittleness(c, g, limits),
        Parameter::Capacity => capacity(c, g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named::*;

    fn value(p: Parameter, c: &GraphClass, g: &Graph) -> usize {
        let r = solve(p, c, g, &Limits::default()).unwrap();
        replay(c, g, &r).unwrap();
        r.value
    }

    #[test]
    fn examples() {
        let f = GraphClass::forests();
        let o = GraphClass::outerplanar();
        let k4free = GraphClass::complete_free(4);
        use Parameter::*;
        assert_eq!(value(EditDistance, &f, &complete(3)), 1);
        assert_eq!(value(EditDistance, &f, &complete(4)), 3);
        assert_eq!(value(EdgeBrittleness, &f, &complete(3)), 2);
        assert_eq!(value(EdgeBrittleness, &k4free, &complete(4)), 3);
        let sub = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)]).unwrap();
        assert_eq!(value(EdgeBrittleness, &k4free, &sub), 2);
        assert_eq!(value(VertexBrittleness, &f, &complete_bipartite(2, 3)), 2);
        assert_eq!(value(Capacity, &f, &complete_bipartite(2, 4)), 2);
        assert_eq!(value(Capacity, &f, &path(6)), 0);
        let all: Vec<usize> = Parameter::ALL.iter().map(|&p| value(p, &f, &complete(3))).collect();
        assert_eq!(all, [1, 2, 2, 1]);
        assert_eq!(value(EditDistance, &o, &complete(4)), 1);
        assert_eq!(value(EdgeBrittleness, &o, &complete(4)), 3);
        assert_eq!(value(Capacity, &o, &complete(4)), 1);
    }

    #[test]
    fn fig3_contraction() {
        let f = GraphClass::forests();
        let g = theta_fig3();
        let h = g.contract_edge(theta_fig3_edge()).unwrap();
        assert_eq!(value(Parameter::VertexBrittleness, &f, &g), 2);
        assert_eq!(value(Parameter::VertexBrittleness, &f, &h), 3);
        assert_eq!(value(Parameter::Capacity, &f, &g), 1);
        assert_eq!(value(Parameter::Capacity, &f, &h), 2);
    }

    #[test]
    fn fig4_contraction() {
        let o = GraphClass::outerplanar();
        let g = fig4();
        let h = g.contract_edge(fig4_edge()).unwrap();
        assert_eq!(value(Parameter::EditDistance, &o, &g), 1);
        assert!(value(Parameter::EditDistance, &o, &h) >= 2);
    }

    #[test]
    fn guards() {
        let big = cycle(21);
        let err = edge_brittleness(&GraphClass::forests(), &big, &Limits::default()).unwrap_err();
        assert!(matches!(err, SolveError::TooLarge { vertices: 21, .. }));
        let relaxed = Limits { max_vertices: 30, ..Limits::default() };
        assert_eq!(edge_brittleness(&GraphClass::forests(), &big, &relaxed).unwrap().value, 2);
    }

    #[test]
    fn replay_rejects_bad_certificates() {
        let f = GraphClass::forests();
        let k3 = complete(3);
        let fake = ParameterReport {
            parameter: Parameter::EditDistance,
            value: 0,
            certificate: Certificate::Deletion(Vec::new()),
            nodes_expanded: 0,
        };
        assert_eq!(replay(&f, &k3, &fake), Err(ReplayError::PartOutsideClass(0)));
        let overlap = ParameterReport {
            parameter: Parameter::EdgeBrittleness,
            value: 0,
            certificate: Certificate::VertexPartition(alloc::vec![
                VertexSet::from_slice(&[0, 1]),
                VertexSet::from_slice(&[1, 2])
            ]),
            nodes_expanded: 0,
        };
        assert_eq!(replay(&f, &k3, &overlap), Err(ReplayError::NotAPartition));
    }
}
