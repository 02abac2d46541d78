use nil_cli::graph_io::{parse_graph, serialize, GraphFormat};
use nil_core::wgraph::WeightedGraph;
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = WeightedGraph> {
    (1usize..=10).prop_flat_map(|n| {
        prop::collection::vec(prop::option::weighted(0.4, 1u64..=5), n * (n - 1) / 2).prop_map(move |slots| {
            let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(slots).filter_map(|((u, v), w)| w.map(|w| (u, v, w))).collect();
            WeightedGraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn text_round_trip(g in graph()) {
        prop_assert_eq!(parse_graph(&serialize(&g, GraphFormat::Text)).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in graph()) {
        prop_assert_eq!(parse_graph(&serialize(&g, GraphFormat::Json)).unwrap(), g);
    }
}
