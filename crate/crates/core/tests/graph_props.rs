use clawpack::factor::maximum_matching;
use clawpack::generators::fixture;
use clawpack::graph::{emit_graph, is_isomorphic, parse_graph, GraphFormat, MultiGraph};
use clawpack::recognition::find_bridges;
use proptest::prelude::*;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 1..n), 0..=max_m).prop_map(move |raw| {
            let edges: Vec<(usize, usize)> = raw.iter().map(|&(u, d)| (u, (u + d) % n)).collect();
            MultiGraph::new(n, &edges).unwrap()
        })
    })
}

fn simple_graph(max_n: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
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
            MultiGraph::new(n, &edges).unwrap()
        })
    })
}

/// Bridges by definition: edges whose removal disconnects the graph.
fn bridges_by_removal(g: &MultiGraph) -> Vec<usize> {
    (0..g.size())
        .filter(|&id| !g.without_edges(&[id]).is_connected())
        .collect()
}

/// Largest matching by trying every edge subset of the simple graph.
fn brute_matching_size(g: &MultiGraph) -> usize {
    let edges: Vec<(usize, usize)> = g.simple_edges().iter().map(|&(u, v, _)| (u, v)).collect();
    let mut best = 0;
    for mask in 0u32..(1 << edges.len()) {
        let mut used = 0u64;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used >> u & 1 == 1 || used >> v & 1 == 1 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

proptest! {
    #[test]
    fn degree_sum_is_twice_size(g in multigraph(12, 30)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn bridges_match_definition(g in multigraph(10, 16)) {
        prop_assume!(g.is_connected());
        prop_assert_eq!(find_bridges(&g).unwrap(), bridges_by_removal(&g));
    }

    #[test]
    fn blossom_matches_brute_force(g in multigraph(9, 14)) {
        prop_assume!(g.simple_edges().len() <= 16);
        let m = maximum_matching(&g);
        prop_assert_eq!(m.edges.len(), brute_matching_size(&g));
        let mut seen = vec![false; g.order()];
        for &id in &m.edges {
            let (u, v) = g.edge(id);
            prop_assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
    }

    #[test]
    fn edge_list_round_trip(g in multigraph(12, 30)) {
        let text = emit_graph(&g, GraphFormat::EdgeList).unwrap();
        prop_assert_eq!(parse_graph(&text, GraphFormat::EdgeList).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in simple_graph(14)) {
        let text = emit_graph(&g, GraphFormat::Graph6).unwrap();
        prop_assert_eq!(parse_graph(&text, GraphFormat::Graph6).unwrap(), g);
    }

    #[test]
    fn relabeling_preserves_structure(g in multigraph(9, 14), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut clawpack::rng::SplitMix64::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(g.degree_sequence(), h.degree_sequence());
        let d = g.all_pairs_distances();
        let e = h.all_pairs_distances();
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(d.get(u, v), e.get(perm[u], perm[v]));
            }
        }
    }
}

#[test]
fn petersen_against_reference_graph6() {
    let g = fixture("petersen").unwrap().graph;
    assert_eq!(
        emit_graph(&g, GraphFormat::Graph6).unwrap().trim(),
        "IheA@GUAo"
    );
    let parsed = parse_graph("IheA@GUAo", GraphFormat::Graph6).unwrap();
    assert_eq!(parsed, g);
    assert_eq!(g.all_pairs_distances().diameter(), 2);
}

#[test]
fn adding_an_edge_is_not_isomorphic() {
    let k4 = fixture("k4").unwrap().graph;
    let prism = fixture("prism").unwrap().graph;
    assert!(!is_isomorphic(&k4, &prism));
    let doubled = k4.with_edges(&[(0, 1)]).unwrap();
    assert!(!is_isomorphic(&k4, &doubled));
}
