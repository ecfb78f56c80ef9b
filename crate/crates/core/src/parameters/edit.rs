use alloc::vec::Vec;

use super::{bits, Certificate, EdgeIndex, Parameter, ParameterReport, SolveError};
use crate::classes::GraphClass;
use crate::graph::Graph;

/// Minimum number of edge deletions that put `g` into `c`.
///
/// Iterative deepening on the number of deletions. Every deletion set meets
/// every forbidden subdivision, so at each node it suffices to branch on the
/// edges of one minimal witness; edges skipped in earlier sibling branches
/// are kept for good, so no set is visited twice. Edge counts of blocks
/// against the extremal number of the class prune the search.
pub fn edit_distance(c: &GraphClass, g: &Graph) -> Result<ParameterReport, SolveError> {
    let index = EdgeIndex::new(Parameter::EditDistance, g)?;
    let mut search = HittingSearch { c, g, index: &index, nodes: 0, chosen: Vec::new() };
    for budget in lower_bound(c, g)..=index.edges.len() {
        if search.hit(index.full(), 0, budget) {
            let mut chosen: Vec<usize> = search.chosen.clone();
            chosen.sort_unstable();
            return Ok(ParameterReport {
                parameter: Parameter::EditDistance,
                value: budget,
                certificate: Certificate::Deletion(chosen.into_iter().map(|i| index.edges[i]).collect()),
                nodes_expanded: search.nodes,
            });
        }
    }
    unreachable!("deleting every edge leaves an edgeless member")
}

struct HittingSearch<'a> {
    c: &'a GraphClass,
    g: &'a Graph,
    index: &'a EdgeIndex,
    nodes: u64,
    chosen: Vec<usize>,
}

impl HittingSearch<'_> {
    fn hit(&mut self, alive: u64, keep: u64, budget: usize) -> bool {
        self.nodes += 1;
        let host = self.index.graph(self.g, alive);
        if lower_bound(self.c, &host) > budget {
            return false;
        }
        let witness = match self.c.minimal_witness(&host) {
            None => return true,
            Some(w) => w,
        };
        if budget == 0 {
            return false;
        }
        let mut keep = keep;
        for i in bits(self.index.mask(&witness.edges) & !keep) {
            self.chosen.push(i);
            if self.hit(alive & !(1u64 << i), keep, budget - 1) {
                return true;
            }
            self.chosen.pop();
            keep |= 1u64 << i;
        }
        false
    }
}

/// Each block must lose at least its edges beyond what a member on its
/// vertices can carry; blocks partition the edges.
fn lower_bound(c: &GraphClass, g: &Graph) -> usize {
    if c.member_edge_bound(1).is_none() {
        return 0;
    }
    g.blocks()
        .into_iter()
        .map(|b| {
            let m = b.iter().map(|v| g.neighbors(v).intersection(b).len()).sum::<usize>() / 2;
            m.saturating_sub(c.member_edge_bound(b.len()).unwrap_or(m))
        })
        .sum()
}
