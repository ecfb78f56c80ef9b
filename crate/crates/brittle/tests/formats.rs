use brittle::format::{from_edge_list, from_graph6, parse_graph6_stream, to_edge_list, to_graph6};
use brittle_core::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
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

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let code = to_graph6(&g);
        prop_assert!(code.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(from_graph6(&code).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn streams_keep_order(gs in proptest::collection::vec(graph(12), 0..6)) {
        let text: String = gs.iter().map(|g| to_graph6(g) + "\n").collect();
        prop_assert_eq!(parse_graph6_stream(&text).unwrap(), gs);
    }
}
