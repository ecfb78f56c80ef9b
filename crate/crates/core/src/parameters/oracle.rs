//! Brute-force reference values for small graphs. Membership here always
//! goes through the embedding engine and nothing is pruned, so these share
//! no shortcuts with the solvers they check.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{boundary, low_bits, EdgeIndex, Limits, Parameter, SolveError};
use crate::bitset::VertexSet;
use crate::classes::GraphClass;
use crate::graph::{Edge, Graph};

/// Set partitions are enumerated outright up to this many items.
pub const MAX_PARTITION_ITEMS: usize = 10;

fn guard(parameter: Parameter, g: &Graph, max_vertices: usize, max_edges: usize) -> Result<(), SolveError> {
    if g.n() > max_vertices || g.edge_count() > max_edges {
        return Err(SolveError::TooLarge {
            parameter,
            vertices: g.n(),
            edges: g.edge_count(),
            max_vertices,
            max_edges,
        });
    }
    Ok(())
}

/// Membership of every spanning subgraph, indexed by edge mask.
fn members_by_mask(c: &GraphClass, g: &Graph, index: &EdgeIndex) -> Vec<bool> {
    (0..=index.full()).map(|mask| c.contains_by_engine(&index.graph(g, mask))).collect()
}

/// Least number of deleted edges over all deletion sets.
pub fn edit_distance(c: &GraphClass, g: &Graph, limits: &Limits) -> Result<usize, SolveError> {
    guard(Parameter::EditDistance, g, usize::MAX, limits.oracle_max_edges)?;
    let index = EdgeIndex::new(Parameter::EditDistance, g)?;
    let m = index.edges.len() as u32;
    Ok((0..=index.full())
        .filter(|&kept| c.contains_by_engine(&index.graph(g, kept)))
        .map(|kept| (m - kept.count_ones()) as usize)
        .min()
        .unwrap())
}

/// Calls `visit` with each set partition of `0..n` as a block label per item.
fn for_each_set_partition<F: FnMut(&[usize], usize)>(n: usize, mut visit: F) {
    fn go<F: FnMut(&[usize], usize)>(labels: &mut Vec<usize>, blocks: usize, n: usize, visit: &mut F) {
        if labels.len() == n {
            visit(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(labels, blocks.max(b + 1), n, visit);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(n), 0, n, &mut visit);
}

/// Least cross-edge count over every vertex partition into induced members.
pub fn edge_brittleness(c: &GraphClass, g: &Graph) -> Result<usize, SolveError> {
    guard(Parameter::EdgeBrittleness, g, MAX_PARTITION_ITEMS, usize::MAX)?;
    let mut member: BTreeMap<u64, bool> = BTreeMap::new();
    let mut best = usize::MAX;
    let edges = g.edges();
    for_each_set_partition(g.n(), |labels, blocks| {
        let mut parts = vec![VertexSet::EMPTY; blocks];
        for (v, &b) in labels.iter().enumerate() {
            parts[b].insert(v);
        }
        let feasible = parts
            .iter()
            .all(|p| *member.entry(p.0).or_insert_with(|| c.contains_by_engine(&g.induced_subgraph(*p).unwrap().0)));
        if feasible {
            let cross = edges.iter().filter(|e| labels[e.u()] != labels[e.v()]).count();
            best = best.min(cross);
        }
    });
    Ok(best)
}

/// Least boundary size over every edge partition into spanning members.
pub fn vertex_brittleness(c: &GraphClass, g: &Graph) -> Result<usize, SolveError> {
    guard(Parameter::VertexBrittleness, g, usize::MAX, MAX_PARTITION_ITEMS)?;
    let edges = g.edges();
    let mut member: BTreeMap<u64, bool> = BTreeMap::new();
    let mut best = usize::MAX;
    for_each_set_partition(edges.len(), |labels, blocks| {
        let mut parts: Vec<Vec<Edge>> = vec![Vec::new(); blocks];
        let mut masks = vec![0u64; blocks];
        for (i, &b) in labels.iter().enumerate() {
            parts[b].push(edges[i]);
            masks[b] |= 1 << i;
        }
        let feasible = parts.iter().zip(&masks).all(|(p, m)| {
            *member.entry(*m).or_insert_with(|| c.contains_by_engine(&g.edge_induced_subgraph(p).unwrap().0))
        });
        if feasible {
            best = best.min(boundary(&parts).len());
        }
    });
    Ok(best)
}

/// Largest number of pairwise disjoint non-member edge sets, by dynamic
/// programming over all edge subsets: the lowest edge of a set is either
/// unused or lies in one chosen subgraph.
pub fn capacity(c: &GraphClass, g: &Graph, limits: &Limits) -> Result<usize, SolveError> {
    guard(Parameter::Capacity, g, usize::MAX, limits.oracle_max_edges)?;
    let index = EdgeIndex::new(Parameter::Capacity, g)?;
    let member = members_by_mask(c, g, &index);
    let full = index.full();
    let mut f = vec![0u8; member.len()];
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let mut best = f[(mask ^ low) as usize];
        let others = mask ^ low;
        let mut sub = others;
        loop {
            let t = sub | low;
            if !member[t as usize] {
                best = best.max(1 + f[(mask ^ t) as usize]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        f[mask as usize] = best;
    }
    debug_assert_eq!(member.len() as u64, low_bits(index.edges.len()) + 1);
    Ok(f[full as usize] as usize)
}
