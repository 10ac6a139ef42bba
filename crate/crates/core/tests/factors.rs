use clawpack::factor::{
    two_factor, two_factor_avoiding, two_factor_through, FactorError, TwoFactor,
};
use clawpack::generators::{fixture, gen_cubic_multigraph};
use clawpack::graph::{is_isomorphic, MultiGraph};
use clawpack::rng::SplitMix64;
use rand::SeedableRng;

/// Every edge subset in which each vertex has degree 2.
fn all_two_factors(g: &MultiGraph) -> Vec<Vec<usize>> {
    let m = g.size();
    assert!(m <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let mut deg = vec![0; g.order()];
        for id in (0..m).filter(|&id| mask >> id & 1 == 1) {
            let (u, v) = g.edge(id);
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().all(|&d| d == 2) {
            out.push((0..m).filter(|&id| mask >> id & 1 == 1).collect());
        }
    }
    out
}

fn assert_valid(g: &MultiGraph, tf: &TwoFactor) {
    let edges = tf.factor_edges();
    let mut deg = vec![0; g.order()];
    for &id in &edges {
        let (u, v) = g.edge(id);
        deg[u] += 1;
        deg[v] += 1;
    }
    assert!(deg.iter().all(|&d| d == 2));
    let mut all: Vec<usize> = edges.iter().chain(&tf.matching).copied().collect();
    all.sort_unstable();
    assert_eq!(all, (0..g.size()).collect::<Vec<_>>());
    for c in &tf.cycles {
        let len = c.vertices.len();
        for (j, &id) in c.edges.iter().enumerate() {
            let (u, v) = g.edge(id);
            let (a, b) = (c.vertices[j], c.vertices[(j + 1) % len]);
            assert!((u, v) == (a, b) || (u, v) == (b, a));
        }
    }
}

#[test]
fn through_and_avoiding_against_enumeration() {
    let mut rng = SplitMix64::seed_from_u64(11);
    for round in 0..60 {
        let n = [2, 4, 6, 8][round % 4];
        let h = gen_cubic_multigraph(n, &mut rng).unwrap();
        let factors = all_two_factors(&h);
        assert!(!factors.is_empty());
        for e in 0..h.size() {
            let through = two_factor_through(&h, e).unwrap();
            assert_valid(&h, &through);
            assert!(through.contains(e));
            assert!(factors.contains(&through.factor_edges()));

            let avoiding = two_factor_avoiding(&h, e).unwrap();
            assert_valid(&h, &avoiding);
            assert!(avoiding.matching.contains(&e));
            assert!(factors.contains(&avoiding.factor_edges()));
        }
        // Every edge lies on some 2-factor and off another.
        for e in 0..h.size() {
            assert!(factors.iter().any(|f| f.contains(&e)));
            assert!(factors.iter().any(|f| !f.contains(&e)));
        }
    }
}

#[test]
fn bridgeless_fixtures_have_factors() {
    for name in ["k4", "prism", "fig1_h", "fig2_h", "fig2_g", "theta"] {
        let g = fixture(name).unwrap().graph;
        assert_valid(&g, &two_factor(&g).unwrap());
    }
}

#[test]
fn bridged_graph_rejected() {
    let g = fixture("fig3_g").unwrap().graph;
    assert_eq!(two_factor(&g), Err(FactorError::NotBridgeless));
    assert_eq!(
        two_factor_through(&g, 0),
        Err(FactorError::NotTwoEdgeConnected)
    );
}

/// The loop-free connected cubic multigraphs on four vertices, found by
/// trying every multiplicity in 0..=3 on the six vertex pairs.
fn cubic_multigraphs_on_four() -> Vec<MultiGraph> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut classes: Vec<MultiGraph> = Vec::new();
    for code in 0..4usize.pow(6) {
        let mut edges = Vec::new();
        let mut c = code;
        for &p in &pairs {
            for _ in 0..c % 4 {
                edges.push(p);
            }
            c /= 4;
        }
        let g = MultiGraph::new(4, &edges).unwrap();
        if g.is_cubic() && g.is_connected() && !classes.iter().any(|k| is_isomorphic(k, &g)) {
            classes.push(g);
        }
    }
    classes
}

#[test]
fn four_vertex_generator_output_is_in_enumerated_set() {
    let classes = cubic_multigraphs_on_four();
    assert_eq!(classes.len(), 2);
    let mut hit = vec![false; classes.len()];
    let mut rng = SplitMix64::seed_from_u64(4);
    for _ in 0..200 {
        let g = gen_cubic_multigraph(4, &mut rng).unwrap();
        let i = classes
            .iter()
            .position(|k| is_isomorphic(k, &g))
            .expect("known class");
        hit[i] = true;
    }
    assert_eq!(hit, vec![true, true]);
}
