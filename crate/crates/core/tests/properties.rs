use brittle_core::canon::{canonical_form, canonical_form_colored};
use brittle_core::constructions::named::*;
use brittle_core::parameters::{self, oracle, replay, Limits, Parameter};
use brittle_core::traps::{classify, enumerate_traps, trap_size_bound, SnareCandidate, TrapStatus};
use brittle_core::{Edge, Graph, GraphClass, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(density), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn classes() -> [GraphClass; 3] {
    [GraphClass::forests(), GraphClass::diamond_free(), GraphClass::outerplanar()]
}

/// Every graph one deletion or suppression away from `g`.
fn reductions(g: &Graph) -> Vec<Graph> {
    let mut out: Vec<Graph> = g.edges().into_iter().map(|e| g.delete_edges(&[e]).unwrap()).collect();
    out.extend(g.vertices().iter().map(|v| g.delete_vertices(VertexSet::singleton(v)).unwrap()));
    out.extend(g.vertices().iter().filter(|&v| g.degree(v) == 2).map(|v| g.suppress(v).unwrap()));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels(g in graph(9, 0.4), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let colors: Vec<u32> = (0..n as u32).map(|v| v % 2).collect();
        let mut moved = vec![0; n];
        for v in 0..n {
            moved[perm[v]] = colors[v];
        }
        prop_assert_eq!(canonical_form_colored(&g, &colors), canonical_form_colored(&h, &moved));
    }

    #[test]
    fn membership_is_monotone(g in graph(8, 0.4)) {
        for c in classes() {
            if c.contains(&g) {
                for h in reductions(&g) {
                    prop_assert!(c.contains(&h), "{} {:?} -> {:?}", c.name(), g, h);
                }
            }
        }
    }

    #[test]
    fn shortcuts_match_engine(g in graph(9, 0.35)) {
        for c in classes() {
            prop_assert_eq!(c.contains(&g), c.contains_by_engine(&g));
        }
    }

    #[test]
    fn basic_inequalities_and_zero_iff_member(g in graph(8, 0.35)) {
        for c in classes() {
            let [e, eta, kappa, nu] = parameters::all_parameters(&c, &g, &Limits::default()).unwrap();
            for r in [&e, &eta, &kappa, &nu] {
                replay(&c, &g, r).unwrap();
                prop_assert_eq!(r.value == 0, c.contains(&g), "{} {:?}", r.parameter.symbol(), g);
            }
            prop_assert!(e.value <= eta.value);
            prop_assert!(kappa.value <= 2 * e.value);
            prop_assert!(nu.value <= e.value);
        }
    }

    #[test]
    fn deletion_and_suppression_never_increase(g in graph(7, 0.4)) {
        let limits = Limits::default();
        for c in classes() {
            let before: Vec<usize> = [Parameter::EditDistance, Parameter::VertexBrittleness, Parameter::Capacity]
                .iter()
                .map(|&p| parameters::solve(p, &c, &g, &limits).unwrap().value)
                .collect();
            for h in reductions(&g) {
                let after: Vec<usize> = [Parameter::EditDistance, Parameter::VertexBrittleness, Parameter::Capacity]
                    .iter()
                    .map(|&p| parameters::solve(p, &c, &h, &limits).unwrap().value)
                    .collect();
                for i in 0..3 {
                    prop_assert!(after[i] <= before[i], "{:?} -> {:?}", g, h);
                }
            }
        }
    }

    #[test]
    fn solvers_match_oracles_on_larger_graphs(g in graph(8, 0.3)) {
        let limits = Limits::default();
        for c in classes() {
            prop_assert_eq!(
                parameters::edge_brittleness(&c, &g, &limits).unwrap().value,
                oracle::edge_brittleness(&c, &g).unwrap()
            );
            if g.edge_count() <= 14 {
                prop_assert_eq!(parameters::edit_distance(&c, &g).unwrap().value, oracle::edit_distance(&c, &g, &limits).unwrap());
                prop_assert_eq!(parameters::capacity(&c, &g).unwrap().value, oracle::capacity(&c, &g, &limits).unwrap());
            }
            if g.edge_count() <= 9 {
                prop_assert_eq!(
                    parameters::vertex_brittleness(&c, &g, &limits).unwrap().value,
                    oracle::vertex_brittleness(&c, &g).unwrap()
                );
            }
        }
    }
}

#[test]
fn adding_an_edge_to_a_trap_breaks_it() {
    for h in [complete(3), diamond(), complete_bipartite(2, 3)] {
        for r in enumerate_traps(&h, 6).unwrap() {
            let j = &r.candidate.j;
            assert!(j.n() <= trap_size_bound(&h, r.candidate.s.len()));
            assert!(j.is_connected());
            for u in 0..j.n() {
                for v in u + 1..j.n() {
                    if j.has_edge(u, v) {
                        continue;
                    }
                    let mut edges: Vec<Edge> = j.edges();
                    edges.push(Edge::new(u, v));
                    let bigger = Graph::from_edges(j.n(), edges.iter().map(|e| e.ends())).unwrap();
                    let cand = SnareCandidate { j: bigger, s: r.candidate.s, h: h.clone() };
                    assert_ne!(classify(&cand), TrapStatus::Trap);
                }
            }
        }
    }
}
