//! Exhaustive generation of small connected graphs up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::graph::Graph;

/// Relabels `g` into its canonical vertex order.
pub fn canonical_copy(g: &Graph) -> (CanonicalForm, Graph) {
    let colors = alloc::vec![0; g.n()];
    let (form, order) = canonical_labeling(g, &colors);
    let mut perm = alloc::vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    (form, g.permute(&perm))
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices, `1 <= n`. Representatives are canonically labelled
/// and sorted by canonical form.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each connected graph on `n - 1` vertices by one vertex with a
/// nonempty neighbourhood reaches every class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_with_max_edges(n, usize::MAX)
}

/// As [`connected_graphs`], keeping only graphs with at most `max_edges`
/// edges. Removing a vertex never adds edges, so the bound is applied at
/// every level.
pub fn connected_graphs_with_max_edges(n: usize, max_edges: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = Vec::new();
    if n == 0 {
        return level;
    }
    level.push(Graph::empty(1).unwrap());
    for k in 1..n {
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut next: Vec<(CanonicalForm, Graph)> = Vec::new();
        for g in &level {
            for nbrs in 1u64..(1u64 << k) {
                let mut rows: Vec<u64> = g.rows().to_vec();
                rows.push(nbrs);
                for (v, row) in rows.iter_mut().enumerate().take(k) {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1u64 << k;
                    }
                }
                let h = Graph::from_rows(k + 1, rows);
                if h.edge_count() > max_edges {
                    continue;
                }
                let (form, copy) = canonical_copy(&h);
                if seen.insert(form.clone()) {
                    next.push((form, copy));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// Connected graphs on `1..=max_n` vertices, smallest first.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}
