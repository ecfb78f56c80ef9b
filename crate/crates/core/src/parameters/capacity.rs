use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{Certificate, EdgeIndex, Parameter, ParameterReport, SolveError};
use crate::bitset::VertexSet;
use crate::classes::GraphClass;
use crate::embedding::{for_each_embedding, EdgePath, Embedding, Witness};
use crate::graph::{Edge, Graph};

/// Maximum number of pairwise edge-disjoint subgraphs of `g` outside `c`.
///
/// A subgraph outside the class contains a minimal one, and swapping it in
/// keeps the packing edge-disjoint, so it suffices to pack the
/// inclusion-minimal forbidden subdivisions. These are enumerated once and
/// packed exactly by branching on the smallest covered edge: some witness
/// through it is chosen, or the edge is dropped.
pub fn capacity(c: &GraphClass, g: &Graph) -> Result<ParameterReport, SolveError> {
    let index = EdgeIndex::new(Parameter::Capacity, g)?;
    let witnesses = minimal_witnesses(c, g, &index);
    let sets: Vec<u64> = witnesses.iter().map(|w| index.mask(&w.edges)).collect();
    let mut p = Packing { sets: &sets, current: Vec::new(), best: Vec::new(), nodes: 0 };
    let all: Vec<usize> = (0..sets.len()).collect();
    p.search(&all);
    let chosen: Vec<Witness> = p.best.iter().map(|&i| witnesses[i].clone()).collect();
    Ok(ParameterReport {
        parameter: Parameter::Capacity,
        value: chosen.len(),
        certificate: Certificate::Packing(chosen),
        nodes_expanded: p.nodes,
    })
}

/// The inclusion-minimal edge sets of forbidden subdivisions in `g`, one
/// witness each, ordered by size and then by sorted edge list.
pub fn minimal_witness_sets(c: &GraphClass, g: &Graph) -> Result<Vec<Witness>, SolveError> {
    let index = EdgeIndex::new(Parameter::Capacity, g)?;
    Ok(minimal_witnesses(c, g, &index))
}

fn minimal_witnesses(c: &GraphClass, g: &Graph, index: &EdgeIndex) -> Vec<Witness> {
    let mut found: BTreeMap<u64, Witness> = BTreeMap::new();
    for (i, h) in c.forbidden().iter().enumerate() {
        if c.is_triangle(i) {
            for_each_cycle(g, |cycle| {
                let w = cycle_witness(i, cycle);
                found.entry(index.mask(&w.edges)).or_insert(w);
            });
        } else {
            let _ = for_each_embedding(h, g, |e| {
                let edges = e.image_edges();
                found.entry(index.mask(&edges)).or_insert_with(|| Witness::new(i, e.clone()));
                ControlFlow::Continue(())
            });
        }
    }
    let masks: Vec<u64> = found.keys().copied().collect();
    let mut kept: Vec<(u32, Vec<Edge>, Witness)> = found
        .into_iter()
        .filter(|(m, _)| !masks.iter().any(|&o| o != *m && o & m == o))
        .map(|(m, w)| (m.count_ones(), w.edges.clone(), w))
        .collect();
    kept.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    kept.into_iter().map(|(_, _, w)| w).collect()
}

/// Calls `visit` once per cycle of `g`, as a vertex sequence starting at
/// its smallest vertex.
fn for_each_cycle<F: FnMut(&[usize])>(g: &Graph, mut visit: F) {
    fn extend<F: FnMut(&[usize])>(g: &Graph, trail: &mut Vec<usize>, allowed: VertexSet, visit: &mut F) {
        let start = trail[0];
        let at = *trail.last().unwrap();
        for w in g.neighbors(at).intersection(allowed) {
            trail.push(w);
            // each cycle is seen in two directions; keep one
            if trail.len() >= 3 && g.has_edge(w, start) && trail[1] < w {
                visit(trail);
            }
            extend(g, trail, allowed.without(w), visit);
            trail.pop();
        }
    }
    for s in g.vertices() {
        let allowed = g.vertices().difference(VertexSet(crate::parameters::low_bits(s + 1)));
        let mut trail = alloc::vec![s];
        extend(g, &mut trail, allowed, &mut visit);
    }
}

/// A cycle as a subdivided triangle on its first, second and last vertex.
fn cycle_witness(pattern: usize, cycle: &[usize]) -> Witness {
    let last = cycle[cycle.len() - 1];
    let embedding = Embedding {
        branch: alloc::vec![cycle[0], cycle[1], last],
        paths: alloc::vec![
            EdgePath { edge: Edge::new(0, 1), vertices: alloc::vec![cycle[0], cycle[1]] },
            EdgePath { edge: Edge::new(0, 2), vertices: alloc::vec![cycle[0], last] },
            EdgePath { edge: Edge::new(1, 2), vertices: cycle[1..].to_vec() },
        ],
    };
    Witness::new(pattern, embedding)
}

struct Packing<'a> {
    sets: &'a [u64],
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl Packing<'_> {
    /// `alive` lists the sets disjoint from everything chosen so far and
    /// not containing a dropped edge.
    fn search(&mut self, alive: &[usize]) {
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if alive.is_empty() {
            return;
        }
        let covered = alive.iter().fold(0u64, |m, &i| m | self.sets[i]);
        let smallest = alive.iter().map(|&i| self.sets[i].count_ones()).min().unwrap();
        if self.current.len() + (covered.count_ones() / smallest) as usize <= self.best.len() {
            return;
        }
        let e = covered & covered.wrapping_neg();
        for &i in alive.iter().filter(|&&i| self.sets[i] & e != 0) {
            let s = self.sets[i];
            let rest: Vec<usize> = alive.iter().copied().filter(|&j| self.sets[j] & s == 0).collect();
            self.current.push(i);
            self.search(&rest);
            self.current.pop();
        }
        let rest: Vec<usize> = alive.iter().copied().filter(|&j| self.sets[j] & e == 0).collect();
        self.search(&rest);
    }
}
