//! Canonical labelling by equitable partition refinement and a backtracking
//! search over individualizations, with pruning by discovered automorphisms.
//!
//! The canonical form is the lexicographically largest adjacency certificate
//! over all leaves of the search tree. Vertex colours, when given, fix the
//! initial partition, so the form is invariant only under colour-preserving
//! relabellings.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Bytes identifying a (coloured) graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_colored(g, &vec![0; g.n()])
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

/// Canonical form of `g` with vertex `v` coloured `colors[v]`.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    canonical_labeling(g, colors).0
}

/// Canonical form together with a canonical ordering: `order[i]` is the
/// vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph, colors: &[u32]) -> (CanonicalForm, Vec<usize>) {
    assert_eq!(colors.len(), g.n());
    let n = g.n();
    if n == 0 {
        return (CanonicalForm(vec![0]), Vec::new());
    }
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<Vec<usize>> = palette.iter().map(|&c| (0..n).filter(|&v| colors[v] == c).collect()).collect();

    let mut search = Search { g, best: None, autos: Vec::new() };
    let root = refine(g, cells);
    search.descend(root, &mut Vec::new());
    let (cert, order) = search.best.expect("search visits at least one leaf");

    let mut bytes = Vec::with_capacity(1 + n + cert.len());
    bytes.push(n as u8);
    for &v in &order {
        bytes.extend_from_slice(&colors[v].to_le_bytes());
    }
    bytes.extend_from_slice(&cert);
    (CanonicalForm(bytes), order)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, part: Partition, prefix: &mut Vec<usize>) {
        let target = match part.iter().position(|c| c.len() > 1) {
            None => {
                let order: Vec<usize> = part.iter().map(|c| c[0]).collect();
                self.leaf(order);
                return;
            }
            Some(i) => i,
        };
        let cell = part[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child = part.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            let child = refine(self.g, child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best, best_order)) => match cert.cmp(best) {
                core::cmp::Ordering::Greater => self.best = Some((cert, order)),
                core::cmp::Ordering::Equal => {
                    // vertex best_order[i] -> order[i] preserves adjacency
                    let mut perm = vec![0; order.len()];
                    for (i, &v) in best_order.iter().enumerate() {
                        perm[v] = order[i];
                    }
                    self.autos.push(perm);
                }
                core::cmp::Ordering::Less => {}
            },
        }
    }

    /// Whether `v` lies in the orbit of an already explored sibling under the
    /// group generated by known automorphisms that fix `prefix` pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for perm in &self.autos {
            if prefix.iter().all(|&x| perm[x] == x) {
                any = true;
                for (x, &y) in perm.iter().enumerate().take(n) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }
}

/// Splits cells by neighbour counts into every cell until stable. The result
/// depends only on the isomorphism type of (graph, ordered partition).
fn refine(g: &Graph, mut part: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = part.iter().map(|c| VertexSet::from_slice(c)).collect();
        let mut next: Partition = Vec::with_capacity(part.len());
        let mut changed = false;
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v);
                    let sig = masks.iter().map(|m| nb.intersection(*m).len() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if next.len() > masks.len() {
                changed = true;
            }
        }
        part = next;
        if !changed {
            return part;
        }
    }
}

/// Upper-triangle adjacency bits in the given vertex order.
fn certificate(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = vec![0u8; (n * n.saturating_sub(1) / 2).div_ceil(8)];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bytes[bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    bytes
}
