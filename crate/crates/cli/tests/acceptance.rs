//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Extra graph6 files listed in `CLAWPACK_EXTRA_G6` (separated by
//! `:`) are added to the coloring corpus.

use std::time::{Duration, Instant};

use clawpack::canonical::{color_two_edge_connected, one_class_exceptions};
use clawpack::factor::two_factor_through;
use clawpack::generators::{
    corpus, expand_to_clawfree, fig2_reference_coloring, fixture, gen_cubic_multigraph, CorpusKind,
    ExpansionSpec,
};
use clawpack::graph::{is_isomorphic, parse_graph, GraphFormat, MultiGraph};
use clawpack::oracle::{solve_spacking, subdivide, verify, DEFAULT_CAP, SUBDIVISION_CAP};
use clawpack::recognition::{
    build_bridge_tree, check_claw_free_cubic, oum_decompose, OumDecomposition,
};
use clawpack::rng::SplitMix64;
use clawpack::{color_claw_free_cubic, SPackingSpec};
use clawpack_cli::{color_report, decompose_text, Outcome};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Check = fn() -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn extra_graphs() -> Vec<(String, MultiGraph)> {
    let Ok(list) = std::env::var("CLAWPACK_EXTRA_G6") else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for path in list.split(':').filter(|p| !p.is_empty()) {
        let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{path}: {e}"));
        for (i, line) in text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
        {
            let g = parse_graph(line, GraphFormat::Graph6)
                .unwrap_or_else(|e| panic!("{path}:{}: {e}", i + 1));
            if check_claw_free_cubic(&g).is_ok() {
                out.push((format!("{path}:{}", i + 1), g));
            }
        }
    }
    out
}

fn existence() -> Verdict {
    let started = Instant::now();
    let mut graphs: Vec<(String, MultiGraph)> = corpus(600, 24, 2024)
        .into_iter()
        .map(|g| (format!("{:?}/{}", g.kind, g.seed), g.graph))
        .collect();
    let kinds = |k: CorpusKind| {
        graphs
            .iter()
            .filter(|(d, _)| d.starts_with(&format!("{k:?}/")))
            .count()
    };
    let (bridgeless, rings, bridged) = (
        kinds(CorpusKind::Bridgeless),
        kinds(CorpusKind::Ring),
        kinds(CorpusKind::Bridged),
    );
    let extra = extra_graphs();
    let extra_count = extra.len();
    graphs.extend(extra);
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        let r = color_report(name, g);
        if r.outcome != Outcome::Colored || !r.verified {
            failures.push(format!("{name}: {}", r.error.unwrap_or_default()));
        }
    }
    let elapsed = started.elapsed();
    let pass = failures.is_empty()
        && graphs.len() >= 500
        && bridgeless > 0
        && rings > 0
        && bridged > 0
        && elapsed < Duration::from_secs(60);
    verdict(
        pass,
        format!(
            "{} graphs (bridgeless {bridgeless}, rings {rings}, bridged {bridged}, external {extra_count}), {} failures, {:.2?}{}",
            graphs.len(),
            failures.len(),
            elapsed,
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn petersen() -> Verdict {
    let g = fixture("petersen").unwrap().graph;
    let started = Instant::now();
    let r = solve_spacking(&g, &SPackingSpec::s1122(), DEFAULT_CAP);
    let elapsed = started.elapsed();
    verdict(
        r == Ok(None) && elapsed < Duration::from_secs(1),
        format!(
            "result {:?} in {elapsed:.2?}",
            r.map(|c| if c.is_some() { "SAT" } else { "UNSAT" })
        ),
    )
}

fn oracle_agreement() -> Verdict {
    let graphs = corpus(100, 16, 77);
    let mut disagreements = 0;
    for g in &graphs {
        let solved = solve_spacking(&g.graph, &SPackingSpec::s1122(), DEFAULT_CAP).unwrap();
        let solved_ok = solved.is_some_and(|c| verify(&g.graph, &c).is_ok());
        let built_ok = color_claw_free_cubic(&g.graph).is_ok_and(|c| verify(&g.graph, &c).is_ok());
        if !(solved_ok && built_ok) {
            disagreements += 1;
        }
    }
    let mut rng = SplitMix64::seed_from_u64(78);
    let mut relabel_failures = 0;
    for g in graphs.iter().take(50) {
        let mut perm: Vec<usize> = (0..g.graph.order()).collect();
        perm.shuffle(&mut rng);
        let h = g.graph.relabel(&perm);
        let moved = color_claw_free_cubic(&g.graph).map(|c| c.relabel(&perm));
        let moved_ok = moved.is_ok_and(|c| verify(&h, &c).is_ok());
        let fresh_ok = color_claw_free_cubic(&h).is_ok_and(|c| verify(&h, &c).is_ok());
        let solver_ok =
            solve_spacking(&h, &SPackingSpec::s1122(), DEFAULT_CAP).is_ok_and(|c| c.is_some());
        if !(moved_ok && fresh_ok && solver_ok) {
            relabel_failures += 1;
        }
    }
    verdict(
        graphs.len() == 100 && disagreements == 0 && relabel_failures == 0,
        format!(
            "{} graphs, {disagreements} disagreements; 50 relabelings, {relabel_failures} failures",
            graphs.len()
        ),
    )
}

fn round_trip() -> Verdict {
    let mut rng = SplitMix64::seed_from_u64(91);
    let mut failures = 0;
    for _ in 0..200 {
        let n = 2 * rng.gen_range(1..=6);
        let h = gen_cubic_multigraph(n, &mut rng).unwrap();
        let spec = ExpansionSpec::random(&h, 2, &mut rng);
        let ok = expand_to_clawfree(&h, &spec)
            .ok()
            .and_then(|g| oum_decompose(&g).ok())
            .is_some_and(|d| matches!(d, OumDecomposition::Built(b) if is_isomorphic(&b.h, &h)));
        if !ok {
            failures += 1;
        }
    }
    verdict(
        failures == 0,
        format!("200 pairs with n(H) <= 12, {failures} failures"),
    )
}

fn all_two_factors(g: &MultiGraph) -> Vec<Vec<usize>> {
    let m = g.size();
    (0u32..1 << m)
        .filter(|mask| {
            let mut deg = vec![0; g.order()];
            for id in (0..m).filter(|&id| mask >> id & 1 == 1) {
                let (u, v) = g.edge(id);
                deg[u] += 1;
                deg[v] += 1;
            }
            deg.iter().all(|&d| d == 2)
        })
        .map(|mask| (0..m).filter(|&id| mask >> id & 1 == 1).collect())
        .collect()
}

fn factor_through() -> Verdict {
    let mut rng = SplitMix64::seed_from_u64(55);
    let mut failures = 0;
    let mut brute = 0;
    for _ in 0..100 {
        let n = 2 * rng.gen_range(1..=6);
        let h = gen_cubic_multigraph(n, &mut rng).unwrap();
        let e = rng.gen_range(0..h.size());
        let Ok(tf) = two_factor_through(&h, e) else {
            failures += 1;
            continue;
        };
        let edges = tf.factor_edges();
        let mut deg = vec![0; h.order()];
        for &id in &edges {
            let (u, v) = h.edge(id);
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut ok = tf.contains(e) && deg.iter().all(|&d| d == 2);
        if n <= 8 {
            brute += 1;
            ok &= all_two_factors(&h).contains(&edges);
        }
        if !ok {
            failures += 1;
        }
    }
    verdict(
        failures == 0,
        format!("100 pairs ({brute} cross-checked by enumeration), {failures} failures"),
    )
}

fn figures() -> Verdict {
    let g2 = fixture("fig2_g").unwrap().graph;
    let reference = verify(&g2, &fig2_reference_coloring()).is_ok();
    let shape = match oum_decompose(&g2) {
        Ok(OumDecomposition::Built(b)) => {
            let doubles = b.h.simple_edges().iter().filter(|e| e.2 == 2).count();
            let mut lengths: Vec<usize> =
                b.string_lengths().into_iter().filter(|&l| l > 0).collect();
            lengths.sort_unstable();
            Some((b.h.order(), doubles, lengths))
        }
        _ => None,
    };
    let text = decompose_text(&g2).unwrap_or_default();
    let shape_ok = shape == Some((6, 1, vec![2, 2]))
        && text.contains("H = 6 vertices (1 double edge), strings: lengths 2,2");
    let g3 = fixture("fig3_g").unwrap().graph;
    let tree = build_bridge_tree(&g3)
        .map(|t| t.shape())
        .unwrap_or_default();
    verdict(
        reference && shape_ok && tree == "K_{1,3}",
        format!(
            "fig2 reference coloring {}; fig2 H/strings {shape:?} (drawn: 6 vertices, 1 double edge, strings 2,2); fig3 tree {tree}",
            if reference { "verifies" } else { "REJECTED" }
        ),
    )
}

fn one_class_rule() -> Verdict {
    let mut scanned = 0;
    let mut bad = 0;
    for g in corpus(300, 60, 66)
        .into_iter()
        .filter(|g| g.kind == CorpusKind::Bridgeless)
    {
        let colors = color_two_edge_connected(&g.graph)
            .unwrap()
            .colors22()
            .unwrap();
        scanned += 1;
        if !one_class_exceptions(&g.graph, &colors).is_empty() {
            bad += 1;
        }
    }
    for name in ["prism", "fig2_g"] {
        let g = fixture(name).unwrap().graph;
        let colors = color_two_edge_connected(&g).unwrap().colors22().unwrap();
        scanned += 1;
        if !one_class_exceptions(&g, &colors).is_empty() {
            bad += 1;
        }
    }
    verdict(
        bad == 0,
        format!("{scanned} canonical colorings scanned, {bad} with exceptions"),
    )
}

fn subdivisions() -> Verdict {
    let spec = SPackingSpec::new(vec![1, 2, 3, 4, 5]).unwrap();
    let mut slowest = Duration::ZERO;
    let mut failures = 0;
    let graphs = corpus(25, 16, 99);
    for g in &graphs {
        let s = subdivide(&g.graph);
        let started = Instant::now();
        let ok = solve_spacking(&s, &spec, SUBDIVISION_CAP)
            .is_ok_and(|c| c.is_some_and(|c| verify(&s, &c).is_ok()));
        let t = started.elapsed();
        slowest = slowest.max(t);
        if !ok || t > Duration::from_secs(30) {
            failures += 1;
        }
    }
    verdict(
        graphs.len() == 25 && failures == 0,
        format!(
            "{} subdivisions, {failures} failures, slowest {slowest:.2?}",
            graphs.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, Check); 8] = [
        ("1 existence on the corpus", existence),
        ("2 Petersen has no (1,1,2,2)-coloring", petersen),
        ("3 oracle agreement and relabeling", oracle_agreement),
        ("4 structure round trip", round_trip),
        ("5 2-factor through an edge", factor_through),
        ("6 figure fixtures", figures),
        ("7 one-class neighbor rule", one_class_rule),
        ("8 subdivisions admit (1,2,3,4,5)-colorings", subdivisions),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let v = check();
        println!(
            "{} criterion {name}: {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        if !v.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
