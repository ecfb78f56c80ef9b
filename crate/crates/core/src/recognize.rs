//! Linear-ish structural tests for the four small patterns the built-in
//! classes forbid. Each is a shortcut for a question the embedding engine
//! answers exhaustively; the test suite checks both agree on every graph
//! with at most seven vertices.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A subdivision of K3 is a cycle.
pub fn has_cycle(g: &Graph) -> bool {
    g.edge_count() + g.components().len() > g.n()
}

/// A subdivision of the diamond is a theta graph; a graph has none exactly
/// when every block is an edge or a cycle.
pub fn has_theta(g: &Graph) -> bool {
    g.blocks().into_iter().any(|b| {
        let (h, _) = g.induced_subgraph(b).unwrap();
        h.n() >= 3 && h.edge_count() > h.n()
    })
}

/// K4 is a topological minor exactly when it is a minor (maximum degree 3),
/// i.e. when the graph is not series-parallel. Deleting vertices of degree
/// at most one and suppressing degree-two vertices empties a graph exactly
/// when it has tree-width at most two.
pub fn has_k4_subdivision(g: &Graph) -> bool {
    let mut rows: Vec<u64> = g.rows().to_vec();
    let mut alive = g.vertices();
    loop {
        let mut progress = false;
        for v in alive {
            let d = rows[v].count_ones();
            if d <= 1 {
                if d == 1 {
                    let w = rows[v].trailing_zeros() as usize;
                    rows[w] &= !(1u64 << v);
                }
                rows[v] = 0;
                alive.remove(v);
                progress = true;
            } else if d == 2 {
                let a = rows[v].trailing_zeros() as usize;
                let b = 63 - rows[v].leading_zeros() as usize;
                rows[a] = (rows[a] & !(1u64 << v)) | 1u64 << b;
                rows[b] = (rows[b] & !(1u64 << v)) | 1u64 << a;
                rows[v] = 0;
                alive.remove(v);
                progress = true;
            }
        }
        if alive.is_empty() {
            return false;
        }
        if !progress {
            return true;
        }
    }
}

/// Outerplanarity, block by block.
///
/// A 2-connected outerplanar graph on at least three vertices has a unique
/// Hamiltonian cycle with non-crossing chords and at least two vertices of
/// degree two. Removing a degree-two vertex `v` with neighbours `a`, `b`
/// preserves this when `ab` is then required to lie on the cycle: if `ab`
/// was absent it is added (it replaces the path `a v b`), and if it was
/// present it must have been a chord, so a second such requirement on the
/// same edge is a contradiction.
pub fn is_outerplanar(g: &Graph) -> bool {
    g.blocks().into_iter().all(|b| block_is_outerplanar(g, b))
}

fn block_is_outerplanar(g: &Graph, block: VertexSet) -> bool {
    let (h, _) = g.induced_subgraph(block).unwrap();
    let n = h.n();
    if n <= 3 {
        return true;
    }
    if h.edge_count() > 2 * n - 3 {
        return false;
    }
    let mut rows: Vec<u64> = h.rows().to_vec();
    let mut outer: Vec<u64> = alloc::vec![0; n];
    let mut alive = h.vertices();
    while alive.len() > 3 {
        let v = match alive.iter().find(|&v| rows[v].count_ones() == 2) {
            Some(v) => v,
            None => return false,
        };
        let a = rows[v].trailing_zeros() as usize;
        let b = 63 - rows[v].leading_zeros() as usize;
        rows[a] &= !(1u64 << v);
        rows[b] &= !(1u64 << v);
        rows[v] = 0;
        alive.remove(v);
        if rows[a] >> b & 1 == 1 && outer[a] >> b & 1 == 1 {
            return false;
        }
        rows[a] |= 1u64 << b;
        rows[b] |= 1u64 << a;
        outer[a] |= 1u64 << b;
        outer[b] |= 1u64 << a;
    }
    true
}

/// K2,3 has maximum degree 3, so topological minor and minor containment
/// coincide; a 2-connected graph without a K2,3 minor is outerplanar or K4.
pub fn has_k23_subdivision(g: &Graph) -> bool {
    g.blocks().into_iter().any(|b| {
        let is_k4 = b.len() == 4 && {
            let (h, _) = g.induced_subgraph(b).unwrap();
            h.edge_count() == 6
        };
        !is_k4 && !block_is_outerplanar(g, b)
    })
}
