use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Certificate, Limits, Parameter, ParameterReport, SolveError};
use crate::bitset::VertexSet;
use crate::classes::GraphClass;
use crate::graph::Graph;

/// Minimum number of cross edges over vertex partitions whose parts induce
/// members of `c`.
///
/// Vertices are assigned in breadth-first order, each to an existing part
/// or to a new one. A branch dies as soon as a part leaves the class (the
/// class is closed under induced subgraphs) or its cross edges reach the
/// best partition found so far.
pub fn edge_brittleness(c: &GraphClass, g: &Graph, limits: &Limits) -> Result<ParameterReport, SolveError> {
    limits.check_partition_search(Parameter::EdgeBrittleness, g)?;
    let mut s = PartitionSearch::new(c, g, g.edge_count(), None);
    s.best_parts = Some(g.vertices().iter().map(VertexSet::singleton).collect());
    s.assign(0);
    let parts = s.best_parts.take().unwrap();
    Ok(ParameterReport {
        parameter: Parameter::EdgeBrittleness,
        value: s.best,
        certificate: Certificate::VertexPartition(normalize(parts)),
        nodes_expanded: s.nodes,
    })
}

/// Outcome of [`edge_brittleness_at_least`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerBound {
    /// Every feasible partition has at least `target` cross edges.
    Proven { nodes_expanded: u64 },
    /// A feasible partition with fewer cross edges.
    Refuted(ParameterReport),
    /// The node budget ran out first.
    Exhausted { nodes_expanded: u64 },
}

/// Decides whether `eta >= target` by searching only for partitions with
/// fewer than `target` cross edges. Ignores the size guards.
pub fn edge_brittleness_at_least(c: &GraphClass, g: &Graph, target: usize, node_budget: u64) -> LowerBound {
    let mut s = PartitionSearch::new(c, g, target, Some(node_budget));
    s.assign(0);
    match s.best_parts.take() {
        Some(parts) => LowerBound::Refuted(ParameterReport {
            parameter: Parameter::EdgeBrittleness,
            value: s.best,
            certificate: Certificate::VertexPartition(normalize(parts)),
            nodes_expanded: s.nodes,
        }),
        None if s.exhausted => LowerBound::Exhausted { nodes_expanded: s.nodes },
        None => LowerBound::Proven { nodes_expanded: s.nodes },
    }
}

fn normalize(mut parts: Vec<VertexSet>) -> Vec<VertexSet> {
    parts.retain(|p| !p.is_empty());
    parts.sort_by_key(|p| p.first());
    parts
}

struct PartitionSearch<'a> {
    c: &'a GraphClass,
    g: &'a Graph,
    order: Vec<usize>,
    parts: Vec<VertexSet>,
    placed: VertexSet,
    cross: usize,
    best: usize,
    best_parts: Option<Vec<VertexSet>>,
    member: BTreeMap<u64, bool>,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl<'a> PartitionSearch<'a> {
    fn new(c: &'a GraphClass, g: &'a Graph, best: usize, budget: Option<u64>) -> Self {
        PartitionSearch {
            c,
            g,
            order: bfs_order(g),
            parts: Vec::new(),
            placed: VertexSet::EMPTY,
            cross: 0,
            best,
            best_parts: None,
            member: BTreeMap::new(),
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn induces_member(&mut self, part: VertexSet) -> bool {
        if let Some(&m) = self.member.get(&part.0) {
            return m;
        }
        let (h, _) = self.g.induced_subgraph(part).unwrap();
        let m = self.c.contains(&h);
        self.member.insert(part.0, m);
        m
    }

    fn assign(&mut self, i: usize) {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return;
        }
        if i == self.order.len() {
            self.best = self.cross;
            self.best_parts = Some(self.parts.clone());
            return;
        }
        let v = self.order[i];
        let nb = self.g.neighbors(v).intersection(self.placed);
        // (added cross edges, part index); a new part is index parts.len()
        let mut options: Vec<(usize, usize)> =
            self.parts.iter().enumerate().map(|(p, part)| (nb.len() - nb.intersection(*part).len(), p)).collect();
        options.push((nb.len(), self.parts.len()));
        options.sort_unstable();
        for (cost, p) in options {
            if self.cross + cost >= self.best || self.exhausted {
                break;
            }
            let opened = p == self.parts.len();
            if opened {
                self.parts.push(VertexSet::singleton(v));
            } else {
                let grown = self.parts[p].with(v);
                if !self.induces_member(grown) {
                    continue;
                }
                self.parts[p] = grown;
            }
            self.placed.insert(v);
            self.cross += cost;
            self.assign(i + 1);
            self.cross -= cost;
            self.placed.remove(v);
            if opened {
                self.parts.pop();
            } else {
                self.parts[p].remove(v);
            }
        }
    }
}

/// Breadth-first order, component by component from the smallest label.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = VertexSet::EMPTY;
    for s in g.vertices() {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let start = order.len();
        order.push(s);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbors(v).difference(seen) {
                seen.insert(w);
                order.push(w);
            }
        }
    }
    order
}
