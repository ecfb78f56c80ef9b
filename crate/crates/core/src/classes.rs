//! Classes of graphs defined by finitely many forbidden topological minors.

use alloc::string::String;
use alloc::vec::Vec;

use crate::canon::are_isomorphic;
use crate::constructions::named::{complete, complete_bipartite, diamond};
use crate::embedding::{self, EmbeddingError, Witness};
use crate::graph::Graph;
use crate::recognize;

/// Structural shortcut for a forbidden pattern the crate recognizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shortcut {
    Triangle,
    Diamond,
    K4,
    K23,
}

impl Shortcut {
    fn detect(h: &Graph) -> Option<Shortcut> {
        [
            (complete(3), Shortcut::Triangle),
            (diamond(), Shortcut::Diamond),
            (complete(4), Shortcut::K4),
            (complete_bipartite(2, 3), Shortcut::K23),
        ]
        .into_iter()
        .find(|(p, _)| are_isomorphic(p, h))
        .map(|(_, s)| s)
    }

    fn present(self, g: &Graph) -> bool {
        match self {
            Shortcut::Triangle => recognize::has_cycle(g),
            Shortcut::Diamond => recognize::has_theta(g),
            Shortcut::K4 => recognize::has_k4_subdivision(g),
            Shortcut::K23 => recognize::has_k23_subdivision(g),
        }
    }
}

/// The graphs with none of `forbidden` as a topological minor.
#[derive(Clone, Debug)]
pub struct GraphClass {
    name: String,
    forbidden: Vec<Graph>,
    shortcuts: Vec<Option<Shortcut>>,
}

/// A problem with a class definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub reason: EmbeddingError,
}

impl GraphClass {
    /// Builds a class without checking the forbidden list; see [`validate`].
    ///
    /// [`validate`]: GraphClass::validate
    pub fn new_unchecked(name: &str, forbidden: Vec<Graph>) -> GraphClass {
        let shortcuts = forbidden.iter().map(Shortcut::detect).collect();
        GraphClass { name: name.into(), forbidden, shortcuts }
    }

    /// Builds a class whose forbidden graphs are all 2-connected.
    pub fn new(name: &str, forbidden: Vec<Graph>) -> Result<GraphClass, EmbeddingError> {
        embedding::check_two_connected(&forbidden)?;
        Ok(GraphClass::new_unchecked(name, forbidden))
    }

    pub fn forests() -> GraphClass {
        GraphClass::new_unchecked("forests", alloc::vec![complete(3)])
    }

    pub fn diamond_free() -> GraphClass {
        GraphClass::new_unchecked("diamond-free", alloc::vec![diamond()])
    }

    pub fn outerplanar() -> GraphClass {
        GraphClass::new_unchecked("outerplanar", alloc::vec![complete(4), complete_bipartite(2, 3)])
    }

    /// `{K_n}`-free graphs, `n >= 3`.
    pub fn complete_free(n: usize) -> GraphClass {
        let mut name = String::from("k");
        push_decimal(&mut name, n);
        name.push_str("-free");
        GraphClass::new_unchecked(&name, alloc::vec![complete(n)])
    }

    /// Built-in classes by name: `forests`, `diamond-free`, `outerplanar`
    /// and `k<n>-free`.
    pub fn by_name(name: &str) -> Option<GraphClass> {
        match name {
            "forests" => Some(GraphClass::forests()),
            "diamond-free" => Some(GraphClass::diamond_free()),
            "outerplanar" => Some(GraphClass::outerplanar()),
            _ => {
                let n: usize = name.strip_prefix('k')?.strip_suffix("-free")?.parse().ok()?;
                (3..=crate::graph::MAX_VERTICES).contains(&n).then(|| GraphClass::complete_free(n))
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn forbidden(&self) -> &[Graph] {
        &self.forbidden
    }

    /// Each forbidden graph that is not 2-connected.
    pub fn validate(&self) -> Vec<Violation> {
        self.forbidden
            .iter()
            .enumerate()
            .filter(|(_, h)| !h.is_2_connected())
            .map(|(index, _)| Violation { index, reason: EmbeddingError::NotTwoConnected(index) })
            .collect()
    }

    /// Membership, using structural recognizers where available.
    pub fn contains(&self, g: &Graph) -> bool {
        (0..self.forbidden.len()).all(|i| !self.pattern_present(i, g))
    }

    /// Membership decided by the embedding engine alone.
    pub fn contains_by_engine(&self, g: &Graph) -> bool {
        embedding::is_free(&self.forbidden, g)
    }

    fn pattern_present(&self, i: usize, g: &Graph) -> bool {
        match self.shortcuts[i] {
            Some(s) => s.present(g),
            None => embedding::is_topological_minor(&self.forbidden[i], g),
        }
    }

    /// Whether forbidden graph `i` is a triangle, whose subdivisions are
    /// exactly the cycles.
    pub(crate) fn is_triangle(&self, i: usize) -> bool {
        self.shortcuts[i] == Some(Shortcut::Triangle)
    }
    /// Most edges a member on `n >= 1` vertices can have, if a recognized
    /// forbidden pattern bounds it: `n - 1` without triangles, `3(n - 1)/2`
    /// without diamonds, `2n - 3` without `K4`.
    pub(crate) fn member_edge_bound(&self, n: usize) -> Option<usize> {
        let n = n.max(1);
        self.shortcuts
            .iter()
            .filter_map(|s| match s {
                Some(Shortcut::Triangle) => Some(n - 1),
                Some(Shortcut::Diamond) => Some(3 * (n - 1) / 2),
                Some(Shortcut::K4) => Some((2 * n).saturating_sub(3).max(n - 1)),
                _ => None,
            })
            .min()
    }

    /// An edge-minimal forbidden subdivision of `g`, if `g` is not a member.
    pub fn minimal_witness(&self, g: &Graph) -> Option<Witness> {
        embedding::minimal_witness_unchecked(&self.forbidden, g, |i, host| {
            self.shortcuts[i].is_none_or(|s| s.present(host))
        })
    }
}

fn push_decimal(s: &mut String, n: usize) {
    if n >= 10 {
        push_decimal(s, n / 10);
    }
    s.push(char::from(b'0' + (n % 10) as u8));
}
