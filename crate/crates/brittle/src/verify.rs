//! Reproducible checks of the finite claims about the four parameters.
//!
//! Every check reports how many instances it looked at and which of them
//! failed. Suites run in parallel on the current rayon pool; results keep
//! a fixed order regardless of scheduling.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use brittle_core::canon::{are_isomorphic, canonical_form_colored, CanonicalForm};
use brittle_core::constructions::named::*;
use brittle_core::constructions::{fan, prop_example_family, FanSpec};
use brittle_core::generate::connected_graphs_up_to;
use brittle_core::parameters::{self, oracle, Limits, LowerBound, Parameter, SolveError};
use brittle_core::traps::enumerate_traps;
use brittle_core::{Edge, Graph, GraphClass, VertexSet};

use crate::format::to_graph6;

/// Seed of the random part of the default corpus.
pub const DEFAULT_SEED: u64 = 0x5eed_b417;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ObservationBasic,
    TopminorMonotonicity,
    FanLowerBounds,
    PropExample,
    TrapClassification,
    K2n,
    OracleEquivalence,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::ObservationBasic,
        Suite::TopminorMonotonicity,
        Suite::FanLowerBounds,
        Suite::PropExample,
        Suite::TrapClassification,
        Suite::K2n,
        Suite::OracleEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ObservationBasic => "observation-basic",
            Suite::TopminorMonotonicity => "topminor-monotonicity",
            Suite::FanLowerBounds => "fan-lower-bounds",
            Suite::PropExample => "prop-example",
            Suite::TrapClassification => "trap-classification",
            Suite::K2n => "k2n",
            Suite::OracleEquivalence => "oracle-equivalence",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One claim checked over some number of instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, instances: usize, failures: Vec<String>) -> Check {
        Check { name: name.into(), passed: failures.is_empty(), instances, failures }
    }

    fn single(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Check {
        Check::new(name, 1, if ok { Vec::new() } else { vec![detail()] })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl Summary {
    pub fn table(&self) -> String {
        let rows: Vec<(String, String, String, String)> = self
            .suites
            .iter()
            .flat_map(|s| {
                s.checks.iter().map(move |c| {
                    (s.suite.name().to_string(), c.name.clone(), c.instances.to_string(), status(c.passed).to_string())
                })
            })
            .collect();
        let mut out = crate::report::table(&rows, ["suite", "check", "instances", "status"]);
        for s in &self.suites {
            for c in s.checks.iter().filter(|c| !c.passed) {
                for f in &c.failures {
                    out.push_str(&format!("FAIL {} / {}: {f}\n", s.suite, c.name));
                }
            }
        }
        out.push_str(&format!("overall: {}\n", status(self.passed)));
        out
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub limits: Limits,
    /// Largest `l` for prop-example and the fans; `None` uses 4 and 3.
    pub l_max: Option<usize>,
    /// Largest `n` of the `K2,n` family.
    pub n_max: usize,
    pub random_graphs: usize,
    pub seed: u64,
    /// Node budget of the direct eta lower-bound search.
    pub eta_budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            limits: Limits::default(),
            l_max: None,
            n_max: 8,
            random_graphs: 200,
            seed: DEFAULT_SEED,
            eta_budget: 2_000_000,
        }
    }
}

pub fn builtin_classes() -> [GraphClass; 3] {
    [GraphClass::forests(), GraphClass::diamond_free(), GraphClass::outerplanar()]
}

/// All connected graphs on at most six vertices, then `random` graphs on
/// 7 to 10 vertices with edge probability 0.3 drawn from `seed`.
pub fn default_corpus(random: usize, seed: u64) -> Vec<Graph> {
    let mut corpus = connected_graphs_up_to(6);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let n = rng.random_range(7..=10);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        corpus.push(Graph::from_edges(n, edges).expect("random graph is simple"));
    }
    corpus
}

fn describe(c: &GraphClass, g: &Graph) -> String {
    format!("{} {}", c.name(), to_graph6(g))
}

fn solve(p: Parameter, c: &GraphClass, g: &Graph, limits: &Limits) -> Result<usize, String> {
    parameters::solve(p, c, g, limits).map(|r| r.value).map_err(|e| format!("{}: {e}", describe(c, g)))
}

/// `e <= eta`, `kappa <= 2e` and `nu <= e` on every corpus graph.
pub fn check_observation_basic(classes: &[GraphClass], corpus: &[Graph], limits: &Limits) -> Vec<Check> {
    classes
        .iter()
        .map(|c| {
            let failures: Vec<String> = corpus
                .par_iter()
                .filter_map(|g| {
                    let all = match parameters::all_parameters(c, g, limits) {
                        Ok(all) => all,
                        Err(e) => return Some(format!("{}: {e}", describe(c, g))),
                    };
                    let [e, eta, kappa, nu] = all.map(|r| r.value);
                    let ok = e <= eta && kappa <= 2 * e && nu <= e;
                    (!ok).then(|| format!("{}: e={e} eta={eta} kappa={kappa} nu={nu}", describe(c, g)))
                })
                .collect();
            Check::new(format!("e <= eta, kappa <= 2e, nu <= e in {}", c.name()), corpus.len(), failures)
        })
        .collect()
}

/// Every graph one edge deletion, vertex deletion or suppression away.
pub fn single_step_reductions(g: &Graph) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for e in g.edges() {
        out.push((format!("delete edge {}-{}", e.u(), e.v()), g.delete_edges(&[e]).unwrap()));
    }
    for v in g.vertices().iter() {
        out.push((format!("delete vertex {v}"), g.delete_vertices(VertexSet::singleton(v)).unwrap()));
        if g.degree(v) == 2 {
            out.push((format!("suppress {v}"), g.suppress(v).unwrap()));
        }
    }
    out
}

const MONOTONE: [Parameter; 3] = [Parameter::EditDistance, Parameter::VertexBrittleness, Parameter::Capacity];

fn monotone_values(c: &GraphClass, g: &Graph, limits: &Limits) -> Result<[usize; 3], String> {
    let mut out = [0; 3];
    for (slot, p) in out.iter_mut().zip(MONOTONE) {
        *slot = solve(p, c, g, limits)?;
    }
    Ok(out)
}

/// `K4` with one edge subdivided.
pub fn subdivided_k4() -> Graph {
    let mut edges: Vec<(usize, usize)> =
        complete(4).edges().iter().map(|e| e.ends()).filter(|&e| e != (0, 1)).collect();
    edges.extend([(0, 4), (4, 1)]);
    Graph::from_edges(5, edges).unwrap()
}

/// e, kappa and nu never grow under a single reduction step; plus the
/// known failures of monotonicity for eta and for contraction.
pub fn check_topminor_monotonicity(classes: &[GraphClass], corpus: &[Graph], limits: &Limits) -> Vec<Check> {
    let mut checks: Vec<Check> = classes
        .iter()
        .map(|c| {
            let per_graph: Vec<(usize, Vec<String>)> = corpus
                .par_iter()
                .map(|g| {
                    let before = match monotone_values(c, g, limits) {
                        Ok(v) => v,
                        Err(e) => return (0, vec![e]),
                    };
                    let steps = single_step_reductions(g);
                    let mut failures = Vec::new();
                    for (step, h) in &steps {
                        match monotone_values(c, h, limits) {
                            Ok(after) => {
                                for (i, p) in MONOTONE.iter().enumerate() {
                                    if after[i] > before[i] {
                                        failures.push(format!(
                                            "{}: {step} raises {} from {} to {}",
                                            describe(c, g),
                                            p.symbol(),
                                            before[i],
                                            after[i]
                                        ));
                                    }
                                }
                            }
                            Err(e) => failures.push(e),
                        }
                    }
                    (steps.len(), failures)
                })
                .collect();
            let instances = per_graph.iter().map(|(n, _)| n).sum();
            let failures = per_graph.into_iter().flat_map(|(_, f)| f).collect();
            Check::new(format!("e, kappa, nu monotone under reductions in {}", c.name()), instances, failures)
        })
        .collect();
    checks.extend(non_monotonicity_witnesses(limits));
    checks
}

fn value_or_error(p: Parameter, c: &GraphClass, g: &Graph, limits: &Limits) -> (Option<usize>, String) {
    match solve(p, c, g, limits) {
        Ok(v) => (Some(v), v.to_string()),
        Err(e) => (None, e),
    }
}

pub fn non_monotonicity_witnesses(limits: &Limits) -> Vec<Check> {
    let k4_free = GraphClass::complete_free(4);
    let forests = GraphClass::forests();
    let outer = GraphClass::outerplanar();
    let fig3 = theta_fig3();
    let fig3_c = fig3.contract_edge(theta_fig3_edge()).unwrap();
    let fig4 = fig4();
    let fig4_c = fig4.contract_edge(fig4_edge()).unwrap();

    let (a, da) = value_or_error(Parameter::EdgeBrittleness, &k4_free, &complete(4), limits);
    let (b, db) = value_or_error(Parameter::EdgeBrittleness, &k4_free, &subdivided_k4(), limits);
    let mut out =
        vec![Check::single("eta in k4-free: K4 is 3, subdivided K4 is 2", a == Some(3) && b == Some(2), || {
            format!("K4 gave {da}, subdivided K4 gave {db}")
        })];

    for (p, want) in [(Parameter::VertexBrittleness, (2, 3)), (Parameter::Capacity, (1, 2))] {
        let (x, dx) = value_or_error(p, &forests, &fig3, limits);
        let (y, dy) = value_or_error(p, &forests, &fig3_c, limits);
        out.push(Check::single(
            format!("{} in forests: fig3 is {}, fig3 contracted is {}", p.symbol(), want.0, want.1),
            x == Some(want.0) && y == Some(want.1),
            || format!("fig3 gave {dx}, contracted gave {dy}"),
        ));
    }

    let (x, dx) = value_or_error(Parameter::EditDistance, &outer, &fig4, limits);
    let (y, dy) = value_or_error(Parameter::EditDistance, &outer, &fig4_c, limits);
    out.push(Check::single(
        "e in outerplanar grows when fig4 is contracted",
        matches!((x, y), (Some(x), Some(y)) if x < y),
        || format!("fig4 gave {dx}, contracted gave {dy}"),
    ));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanPreconditionError {
    BaseInClass,
    SharedNotIndependent,
    Construction(String),
}

impl fmt::Display for FanPreconditionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanPreconditionError::BaseInClass => f.write_str("base graph already lies in the class"),
            FanPreconditionError::SharedNotIndependent => f.write_str("shared set is not independent"),
            FanPreconditionError::Construction(e) => f.write_str(e),
        }
    }
}

impl std::error::Error for FanPreconditionError {}

/// `nu(Fan(base, s, l)) >= l`, and `kappa >= l` when `base` and
/// `base - s` are connected, for `l = 1..=l_max`.
pub fn check_fan_lower_bounds(
    class: &GraphClass,
    base: &Graph,
    s: VertexSet,
    l_max: usize,
    limits: &Limits,
) -> Result<Vec<Check>, FanPreconditionError> {
    if class.contains(base) {
        return Err(FanPreconditionError::BaseInClass);
    }
    if !base.is_independent(s) {
        return Err(FanPreconditionError::SharedNotIndependent);
    }
    let with_kappa = base.is_connected() && base.is_connected_within(base.vertices().difference(s));
    let label = format!("Fan({}, {:?})", to_graph6(base), s.iter().collect::<Vec<_>>());
    let mut checks = Vec::new();
    for l in 1..=l_max {
        let spec = FanSpec::new(base.clone(), s, l).map_err(|e| FanPreconditionError::Construction(e.to_string()))?;
        let g = fan(&spec).map_err(|e| FanPreconditionError::Construction(e.to_string()))?;
        let mut params = vec![Parameter::Capacity];
        if with_kappa {
            params.push(Parameter::VertexBrittleness);
        }
        for p in params {
            let (v, dv) = value_or_error(p, class, &g, limits);
            checks.push(Check::single(
                format!("{} of {label} with l={l} in {} is at least {l}", p.symbol(), class.name()),
                v.is_some_and(|v| v >= l),
                || format!("got {dv}"),
            ));
        }
    }
    Ok(checks)
}

/// The four fan families checked by default.
pub fn fan_instances() -> Vec<(GraphClass, Graph, VertexSet)> {
    let d = diamond();
    let k23 = complete_bipartite(2, 3);
    vec![
        (GraphClass::forests(), complete(3), VertexSet::singleton(0)),
        (GraphClass::diamond_free(), d.clone(), VertexSet::EMPTY),
        (GraphClass::diamond_free(), d, VertexSet::singleton(2)),
        (GraphClass::outerplanar(), k23, VertexSet::singleton(0)),
    ]
}

fn check_fan_suite(l_max: usize, limits: &Limits) -> Vec<Check> {
    let per: Vec<Vec<Check>> = fan_instances()
        .par_iter()
        .map(|(c, base, s)| match check_fan_lower_bounds(c, base, *s, l_max, limits) {
            Ok(checks) => checks,
            Err(e) => {
                vec![Check::single(format!("fan preconditions for {}", to_graph6(base)), false, || e.to_string())]
            }
        })
        .collect();
    per.into_iter().flatten().collect()
}

/// Result of bounding `eta` of one member of the prop-example family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaBound {
    Exact(usize),
    AtLeast { bound: usize, nodes_expanded: u64 },
    Unknown(String),
}

impl EtaBound {
    pub fn lower(&self) -> Option<usize> {
        match self {
            EtaBound::Exact(v) => Some(*v),
            EtaBound::AtLeast { bound, .. } => Some(*bound),
            EtaBound::Unknown(_) => None,
        }
    }
}

/// `eta` exactly when the size guard allows, otherwise a budgeted proof
/// that `eta >= target`.
pub fn eta_bound(c: &GraphClass, g: &Graph, target: usize, limits: &Limits, budget: u64) -> EtaBound {
    match parameters::edge_brittleness(c, g, limits) {
        Ok(r) => EtaBound::Exact(r.value),
        Err(SolveError::TooLarge { .. }) => match parameters::edge_brittleness_at_least(c, g, target, budget) {
            LowerBound::Proven { nodes_expanded } => EtaBound::AtLeast { bound: target, nodes_expanded },
            LowerBound::Refuted(r) => EtaBound::Exact(r.value),
            LowerBound::Exhausted { nodes_expanded } => {
                EtaBound::Unknown(format!("budget ran out after {nodes_expanded} nodes"))
            }
        },
    }
}

/// `l`, `G_l`, `f`, the path's vertices, eta and e.
type Member = (usize, Graph, Edge, VertexSet, EtaBound, Result<usize, String>);

/// For `l = 1..=l_max`: `e(G_l) = 1`, `G_l - f` outerplanar and
/// `eta(G_l) >= l + 1`. Hemming a path whose vertices induce a non-member
/// raises eta by at least one, so for `l >= 2` the path of `G_{l-1}` is
/// checked to induce a non-outerplanar graph and the bounds are chained;
/// where both values are exact, `eta(G_l) > eta(G_{l-1})` is checked too.
pub fn check_prop_example(l_max: usize, limits: &Limits, budget: u64) -> Vec<Check> {
    let outer = GraphClass::outerplanar();
    let members: Vec<Member> = (1..=l_max)
        .into_par_iter()
        .map(|l| {
            let (h, f) = prop_example_family(l).expect("l >= 1");
            let path: VertexSet = h.path.iter().copied().collect();
            let eta = eta_bound(&outer, &h.graph, l + 1, limits, budget);
            let e = solve(Parameter::EditDistance, &outer, &h.graph, limits);
            (l, h.graph, f, path, eta, e)
        })
        .collect();

    let mut checks = Vec::new();
    let mut chained: Option<usize> = None;
    for (i, (l, g, f, _, eta, e)) in members.iter().enumerate() {
        let l = *l;
        checks.push(Check::single(format!("e(G_{l}) = 1 in outerplanar"), e == &Ok(1), || format!("got {e:?}")));
        let hemmed = g.delete_edges(&[*f]).map(|h| outer.contains(&h)).unwrap_or(false);
        checks.push(Check::single(format!("G_{l} - f is outerplanar"), hemmed, || "it is not".into()));
        checks.push(Check::single(
            format!("eta(G_{l}) >= {} in outerplanar", l + 1),
            eta.lower().is_some_and(|b| b > l),
            || format!("{eta:?}"),
        ));
        if i == 0 {
            chained = eta.lower();
            continue;
        }
        let (_, prev_g, _, prev_path, prev_eta, _) = &members[i - 1];
        let (on_path, _) = prev_g.induced_subgraph(*prev_path).unwrap();
        let hypothesis = !outer.contains(&on_path);
        checks.push(Check::single(format!("G_{}[V(P)] is not outerplanar", l - 1), hypothesis, || {
            "path induces an outerplanar graph".into()
        }));
        chained = chained.filter(|_| hypothesis).map(|b| b + 1);
        checks.push(Check::single(
            format!("step bound gives eta(G_{l}) >= {}", l + 1),
            chained.is_some_and(|b| b > l),
            || format!("chained bound {chained:?}"),
        ));
        if let (EtaBound::Exact(a), EtaBound::Exact(b)) = (prev_eta, eta) {
            checks.push(Check::single(format!("eta(G_{l}) >= eta(G_{}) + 1", l - 1), *b > *a, || {
                format!("eta(G_{}) = {a}, eta(G_{l}) = {b}", l - 1)
            }));
        }
    }
    checks
}

fn key(g: &Graph, s: VertexSet) -> CanonicalForm {
    let colors: Vec<u32> = (0..g.n()).map(|v| u32::from(s.contains(v))).collect();
    canonical_form_colored(g, &colors)
}

fn trap_label(g: &Graph, s: VertexSet) -> String {
    format!("({}, {:?})", to_graph6(g), s.iter().collect::<Vec<_>>())
}

/// Runs [`enumerate_traps`] and checks that every trap matches `allowed`
/// and every pair in `required` was found.
fn trap_check(
    name: &str,
    h: &Graph,
    max_n: usize,
    allowed: impl Fn(&Graph, VertexSet) -> bool,
    required: &[(Graph, VertexSet)],
) -> Vec<Check> {
    let records = match enumerate_traps(h, max_n) {
        Ok(r) => r,
        Err(e) => return vec![Check::single(format!("{name} traps up to {max_n} vertices"), false, || e.to_string())],
    };
    let found: BTreeSet<CanonicalForm> = records.iter().map(|r| key(&r.candidate.j, r.candidate.s)).collect();
    let unexpected: Vec<String> = records
        .iter()
        .filter(|r| !allowed(&r.candidate.j, r.candidate.s))
        .map(|r| format!("unexpected trap {}", trap_label(&r.candidate.j, r.candidate.s)))
        .collect();
    let missing: Vec<String> = required
        .iter()
        .filter(|(g, s)| !found.contains(&key(g, *s)))
        .map(|(g, s)| format!("missing trap {}", trap_label(g, *s)))
        .collect();
    vec![
        Check::new(format!("every {name} trap up to {max_n} vertices is on the list"), records.len(), unexpected),
        Check::new(format!("listed {name} traps up to {max_n} vertices are found"), required.len(), missing),
    ]
}

pub fn check_trap_classification() -> Vec<Check> {
    let k3 = complete(3);
    let d = diamond();
    let k23 = complete_bipartite(2, 3);
    let k23p = k23_plus();
    let w3 = w_plus(3).unwrap();

    let mut checks = Vec::new();
    {
        let expected = [key(&k3, VertexSet::EMPTY), key(&k3, VertexSet::singleton(0))];
        checks.extend(trap_check(
            "K3",
            &k3,
            6,
            |j, s| expected.contains(&key(j, s)),
            &[(k3.clone(), VertexSet::EMPTY), (k3.clone(), VertexSet::singleton(0))],
        ));
    }
    checks.extend(trap_check(
        "D",
        &d,
        6,
        |j, _| are_isomorphic(j, &d),
        &[(d.clone(), VertexSet::EMPTY), (d.clone(), VertexSet::singleton(0)), (d.clone(), VertexSet::singleton(2))],
    ));
    {
        // K2,3 itself with at most one shared vertex or two of degree 2;
        // K2,3+ and W+_3 with all their degree-2 vertices shared
        let list = [
            (k23.clone(), VertexSet::EMPTY),
            (k23.clone(), VertexSet::singleton(0)),
            (k23.clone(), VertexSet::singleton(2)),
            (k23.clone(), VertexSet::singleton(2).with(3)),
            (k23p.clone(), degree_two_vertices(&k23p)),
            (w3.clone(), degree_two_vertices(&w3)),
        ];
        let keys: Vec<CanonicalForm> = list.iter().map(|(g, s)| key(g, *s)).collect();
        checks.extend(trap_check("K2,3", &k23, 7, |j, s| keys.contains(&key(j, s)), &list));
    }
    checks
}

/// `kappa(K2,n) = 2` and `nu(K2,n) >= n / 2` in forests for `3 <= n <= n_max`.
pub fn check_k2n_family(n_max: usize, limits: &Limits) -> Vec<Check> {
    let forests = GraphClass::forests();
    let per: Vec<Vec<Check>> = (3..=n_max)
        .into_par_iter()
        .map(|n| {
            let g = complete_bipartite(2, n);
            let (k, dk) = value_or_error(Parameter::VertexBrittleness, &forests, &g, limits);
            let (v, dv) = value_or_error(Parameter::Capacity, &forests, &g, limits);
            vec![
                Check::single(format!("kappa(K2,{n}) = 2 in forests"), k == Some(2), || format!("got {dk}")),
                Check::single(format!("nu(K2,{n}) >= {} in forests", n / 2), v.is_some_and(|v| v >= n / 2), || {
                    format!("got {dv}")
                }),
            ]
        })
        .collect();
    per.into_iter().flatten().collect()
}

/// Solvers against brute force on every connected graph with at most six
/// vertices; kappa only up to nine edges.
pub fn check_oracle_equivalence(classes: &[GraphClass], limits: &Limits) -> Vec<Check> {
    let graphs = connected_graphs_up_to(6);
    let mut checks = Vec::new();
    for c in classes {
        for p in Parameter::ALL {
            let pool: Vec<&Graph> =
                graphs.iter().filter(|g| p != Parameter::VertexBrittleness || g.edge_count() <= 9).collect();
            let failures: Vec<String> = pool
                .par_iter()
                .filter_map(|g| {
                    let fast = parameters::solve(p, c, g, limits);
                    let slow = match p {
                        Parameter::EditDistance => oracle::edit_distance(c, g, limits),
                        Parameter::EdgeBrittleness => oracle::edge_brittleness(c, g),
                        Parameter::VertexBrittleness => oracle::vertex_brittleness(c, g),
                        Parameter::Capacity => oracle::capacity(c, g, limits),
                    };
                    match (fast, slow) {
                        (Ok(r), Ok(v)) if r.value == v => match parameters::replay(c, g, &r) {
                            Ok(()) => None,
                            Err(e) => Some(format!("{}: replay failed: {e:?}", describe(c, g))),
                        },
                        (fast, slow) => Some(format!(
                            "{}: solver {:?}, brute force {:?}",
                            describe(c, g),
                            fast.map(|r| r.value),
                            slow
                        )),
                    }
                })
                .collect();
            checks.push(Check::new(
                format!("{} matches brute force in {}", p.symbol(), c.name()),
                pool.len(),
                failures,
            ));
        }
    }
    checks
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig, corpus: &[Graph]) -> SuiteReport {
    let classes = builtin_classes();
    let checks = match suite {
        Suite::ObservationBasic => check_observation_basic(&classes, corpus, &cfg.limits),
        Suite::TopminorMonotonicity => check_topminor_monotonicity(&classes, corpus, &cfg.limits),
        Suite::FanLowerBounds => check_fan_suite(cfg.l_max.unwrap_or(3), &cfg.limits),
        Suite::PropExample => check_prop_example(cfg.l_max.unwrap_or(4), &cfg.limits, cfg.eta_budget),
        Suite::TrapClassification => check_trap_classification(),
        Suite::K2n => check_k2n_family(cfg.n_max, &cfg.limits),
        Suite::OracleEquivalence => check_oracle_equivalence(&classes, &cfg.limits),
    };
    SuiteReport { suite, passed: checks.iter().all(|c| c.passed), checks }
}

/// Runs `suites`, reported in [`Suite::ALL`] order with duplicates dropped.
pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Summary {
    let suites: Vec<Suite> = suites.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let needs_corpus = suites.iter().any(|s| matches!(s, Suite::ObservationBasic | Suite::TopminorMonotonicity));
    let corpus = if needs_corpus { default_corpus(cfg.random_graphs, cfg.seed) } else { Vec::new() };
    let reports: Vec<SuiteReport> = suites.par_iter().map(|&s| run_suite(s, cfg, &corpus)).collect();
    Summary { passed: reports.iter().all(|r| r.passed), suites: reports }
}
