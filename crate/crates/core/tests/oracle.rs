use clawpack::generators::{corpus, fixture};
use clawpack::oracle::{
    solve_spacking, subdivide, verify, OracleError, DEFAULT_CAP, SUBDIVISION_CAP,
};
use clawpack::rng::SplitMix64;
use clawpack::SPackingSpec;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn subdivision_doubles_distances() {
    for g in corpus(80, 14, 41) {
        let g = g.graph;
        let s = subdivide(&g);
        assert_eq!(s.order(), g.order() + g.size());
        assert!(s.is_simple());
        let d = g.all_pairs_distances();
        let ds = s.all_pairs_distances();
        for u in 0..g.order() {
            for v in 0..g.order() {
                assert_eq!(ds.get(u, v), d.get(u, v).map(|x| 2 * x));
            }
        }
    }
}

#[test]
fn petersen_unsat_under_relabeling() {
    let g = fixture("petersen").unwrap().graph;
    let mut rng = SplitMix64::seed_from_u64(12);
    for _ in 0..20 {
        let mut perm: Vec<usize> = (0..10).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        assert_eq!(
            solve_spacking(&h, &SPackingSpec::s1122(), DEFAULT_CAP),
            Ok(None)
        );
    }
}

#[test]
fn subdivisions_admit_1_to_5_packings() {
    let spec = SPackingSpec::new(vec![1, 2, 3, 4, 5]).unwrap();
    for g in corpus(10, 16, 43) {
        let s = subdivide(&g.graph);
        let c = solve_spacking(&s, &spec, SUBDIVISION_CAP)
            .unwrap()
            .expect("SAT");
        assert_eq!(verify(&s, &c), Ok(()));
    }
}

#[test]
fn cap_is_enforced() {
    let g = fixture("fig2_g").unwrap().graph;
    assert_eq!(
        solve_spacking(&g, &SPackingSpec::s1122(), 20),
        Err(OracleError::CapExceeded { n: 34, cap: 20 })
    );
}
