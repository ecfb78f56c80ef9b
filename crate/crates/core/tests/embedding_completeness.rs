//! The embedding engine and the structural recognizers against a direct
//! search for subdivisions among all edge subsets of small hosts.

use brittle_core::canon::are_isomorphic;
use brittle_core::constructions::named::*;
use brittle_core::embedding::{find_embedding, is_free, is_topological_minor};
use brittle_core::generate::{connected_graphs, connected_graphs_up_to};
use brittle_core::recognize::*;
use brittle_core::{Edge, Graph, VertexSet};

/// Whether the edges `f` of a graph on `n` vertices form a subdivision of
/// `h`: some set of `|V(h)|` branch vertices covers every vertex of degree
/// other than two, and following degree-two chains between branch vertices
/// gives a simple graph isomorphic to `h`.
fn is_subdivision_of(n: usize, f: &[Edge], h: &Graph) -> bool {
    let g = Graph::from_edges(n, f.iter().map(|e| e.ends())).unwrap();
    let support: VertexSet = f.iter().flat_map(|e| [e.u(), e.v()]).collect();
    let forced: VertexSet = support.iter().filter(|&v| g.degree(v) != 2).collect();
    if forced.len() > h.n() || support.len() < h.n() {
        return false;
    }
    let optional: Vec<usize> = support.difference(forced).iter().collect();
    let extra = h.n() - forced.len();
    subsets(&optional, extra).into_iter().any(|more| {
        let branch = forced.union(more.iter().copied().collect());
        reduce(&g, branch).is_some_and(|r| are_isomorphic(&r, h))
    })
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    out.extend(subsets(&items[1..], k));
    out
}

/// The graph on `branch` obtained by following chains of non-branch
/// vertices, or `None` if a chain closes on itself, two chains join the
/// same pair, or some vertex is on no chain.
fn reduce(g: &Graph, branch: VertexSet) -> Option<Graph> {
    let labels: Vec<usize> = branch.iter().collect();
    let index = |v: usize| labels.iter().position(|&b| b == v).unwrap();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut visited = branch;
    for &b in &labels {
        for first in g.neighbors(b) {
            let (mut prev, mut at) = (b, first);
            while !branch.contains(at) {
                visited.insert(at);
                let next = g.neighbors(at).without(prev).first()?;
                prev = at;
                at = next;
            }
            if at == b {
                return None;
            }
            if b < at {
                pairs.push((index(b), index(at)));
            }
        }
    }
    let support: VertexSet = g.vertices().iter().filter(|&v| g.degree(v) > 0).collect();
    if visited != branch.union(support) {
        return None;
    }
    pairs.sort_unstable();
    let len = pairs.len();
    pairs.dedup();
    if pairs.len() != len {
        return None;
    }
    Graph::from_edges(labels.len(), pairs).ok()
}

fn brute_force_contains(h: &Graph, g: &Graph) -> bool {
    let edges = g.edges();
    let excess = h.edge_count() as isize - h.n() as isize;
    (0u32..1 << edges.len()).any(|mask| {
        let f: Vec<Edge> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let support: VertexSet = f.iter().flat_map(|e| [e.u(), e.v()]).collect();
        f.len() as isize - support.len() as isize == excess && is_subdivision_of(g.n(), &f, h)
    })
}

fn patterns() -> Vec<Graph> {
    vec![complete(3), diamond(), complete(4), complete_bipartite(2, 3), cycle(4), k23_plus()]
}

#[test]
fn engine_agrees_with_subset_search() {
    for g in connected_graphs_up_to(6) {
        for h in patterns() {
            let found = find_embedding(&h, &g);
            if let Some(e) = &found {
                e.validate(&h, &g).unwrap();
            }
            assert_eq!(found.is_some(), brute_force_contains(&h, &g), "{h:?} in {g:?}");
        }
    }
}

#[test]
fn recognizers_agree_with_engine() {
    let (k3, d, k4, k23) = (complete(3), diamond(), complete(4), complete_bipartite(2, 3));
    for n in 1..=7 {
        for g in connected_graphs(n) {
            assert_eq!(has_cycle(&g), is_topological_minor(&k3, &g), "{g:?}");
            assert_eq!(has_theta(&g), is_topological_minor(&d, &g), "{g:?}");
            assert_eq!(has_k4_subdivision(&g), is_topological_minor(&k4, &g), "{g:?}");
            assert_eq!(has_k23_subdivision(&g), is_topological_minor(&k23, &g), "{g:?}");
            assert_eq!(is_outerplanar(&g), is_free(&[k4.clone(), k23.clone()], &g), "{g:?}");
        }
    }
}

#[test]
fn recognizers_agree_on_disconnected_hosts() {
    let gs = connected_graphs_up_to(5);
    let (k4, k23) = (complete(4), complete_bipartite(2, 3));
    for a in gs.iter().filter(|g| g.n() >= 3) {
        for b in gs.iter().filter(|g| g.n() >= 4) {
            let g = a.disjoint_union(b).unwrap();
            assert_eq!(is_outerplanar(&g), is_free(&[k4.clone(), k23.clone()], &g));
            assert_eq!(has_theta(&g), is_topological_minor(&diamond(), &g));
        }
    }
}
