use alloc::vec::Vec;

use super::{boundary, Certificate, Limits, Parameter, ParameterReport, SolveError};
use crate::bitset::VertexSet;
use crate::classes::GraphClass;
use crate::graph::{Edge, Graph};

/// Minimum number of vertices meeting two or more parts, over edge
/// partitions whose parts span members of `c`.
///
/// Equal to the least `|Y|` such that every `Y`-bridge lies in `c`: the
/// bridges of the boundary of an optimal partition refine it, and each
/// bridge spans a subgraph of a single part. Candidate sets are tried by
/// size and then lexicographically.
pub fn vertex_brittleness(c: &GraphClass, g: &Graph, limits: &Limits) -> Result<ParameterReport, SolveError> {
    limits.check_partition_search(Parameter::VertexBrittleness, g)?;
    let vs: Vec<usize> = g.vertices().iter().collect();
    let mut nodes = 0u64;
    for k in 0..=vs.len() {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            nodes += 1;
            let y: VertexSet = pick.iter().map(|&i| vs[i]).collect();
            let parts = y_partition(g, y);
            if parts.iter().all(|p| spans_member(c, g, p)) {
                let b = boundary(&parts);
                return Ok(ParameterReport {
                    parameter: Parameter::VertexBrittleness,
                    value: b.len(),
                    certificate: Certificate::EdgePartition { boundary: b, parts },
                    nodes_expanded: nodes,
                });
            }
            if !next_combination(&mut pick, vs.len()) {
                break;
            }
        }
    }
    unreachable!("with Y = V every part is a single edge")
}

fn spans_member(c: &GraphClass, g: &Graph, part: &[Edge]) -> bool {
    c.contains(&g.edge_induced_subgraph(part).unwrap().0)
}

/// Edge sets of the `Y`-bridges of `g` (a component of `g - Y` with its
/// edges into `Y`), followed by one singleton per edge inside `Y`; each
/// part sorted, parts ordered by first edge. Edgeless bridges are omitted.
pub fn y_partition(g: &Graph, y: VertexSet) -> Vec<Vec<Edge>> {
    let rest = g.vertices().difference(y);
    let mut parts: Vec<Vec<Edge>> = g
        .components_within(rest)
        .into_iter()
        .map(|comp| {
            g.edges().into_iter().filter(|e| comp.contains(e.u()) || comp.contains(e.v())).collect::<Vec<Edge>>()
        })
        .filter(|p| !p.is_empty())
        .collect();
    parts.extend(g.edges().into_iter().filter(|e| y.contains(e.u()) && y.contains(e.v())).map(|e| alloc::vec![e]));
    parts.sort_by_key(|p| p[0]);
    parts
}

/// Advances `pick` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named::*;

    #[test]
    fn combinations_in_order() {
        let mut pick = alloc::vec![0, 1];
        let mut seen = alloc::vec![pick.clone()];
        while next_combination(&mut pick, 4) {
            seen.push(pick.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[5], [2, 3]);
        assert!(!next_combination(&mut [], 3));
    }

    #[test]
    fn bridges_of_k23() {
        let g = complete_bipartite(2, 3);
        let parts = y_partition(&g, VertexSet::from_slice(&[0, 1]));
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.len() == 2));
        assert_eq!(boundary(&parts), VertexSet::from_slice(&[0, 1]));
        let inside = y_partition(&complete(3), VertexSet::from_slice(&[0, 1]));
        assert_eq!(inside, [alloc::vec![Edge::new(0, 1)], alloc::vec![Edge::new(0, 2), Edge::new(1, 2)]]);
    }
}
